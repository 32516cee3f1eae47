#include "qhm/boundary_moduli.hpp"

#include <algorithm>
#include <numbers>

#include "qhm/errors.hpp"

namespace qhm {

Quaternion triple_product(const HVector& p1, const HVector& p2, const HVector& p3) {
    return herm(p2, p1) * herm(p3, p2) * herm(p1, p3);
}

static void require_null(const Tuple& p, const Tolerances& tol) {
    for (size_t t = 0; t < p.size(); ++t) {
        const PointClass c = classify(p[t], tol);
        if (c != PointClass::Null)
            throw DomainError("point " + std::to_string(t + 1) + " is " + to_string(c) + ", expected null");
    }
}

double cartan_invariant(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol) {
    require_null({p1, p2, p3}, tol);
    const Quaternion T = triple_product(p1, p2, p3);
    const double scale = p1.euclidean_norm() * p2.euclidean_norm() * p3.euclidean_norm();
    if (T.abs() <= tol.rank * scale * scale) throw DomainError("cartan_invariant: coincident points");
    const double c = std::clamp(-T.re() / T.abs(), -1.0, 1.0);
    return std::min(std::acos(c), std::numbers::pi / 2);
}

SemiNormalization semi_normalize(const Tuple& p, const Tolerances& tol) {
    const int m = int(p.size());
    if (m < 3) throw UsageError("semi_normalize needs at least three points");
    require_null(p, tol);
    const GramMatrix G = gram(p);

    // chain: conj(mu_{i-1}) g_{i-1,i} mu_i = 1, left to right
    std::vector<Quaternion> mu(m, Quaternion(1.0));
    for (int i = 1; i < m; ++i) {
        const Quaternion g = G(i - 1, i);
        const double scale = p[i - 1].euclidean_norm() * p[i].euclidean_norm();
        if (g.abs() <= tol.rank * scale)
            throw DegenerateInputError("semi_normalize: <p" + std::to_string(i) + ", p" + std::to_string(i + 1) +
                                       "> vanishes; points coincide numerically");
        mu[i] = (mu[i - 1].conj() * g).inverse();
    }
    const GramMatrix G1 = rescale(G, mu);

    // odd positions by a, even by conj(a)^{-1}; a turns g13 into the closed upper half of C
    const Quaternion c = G1(0, 2);
    const ImVector3 im = ImVector3::of(c);
    Quaternion a = im.norm() > 0 ? Quaternion(nu(im)) : Quaternion(1.0);
    a = a / std::sqrt(c.abs());
    const Quaternion b = a.conj().inverse();

    SemiNormalization out;
    out.D.resize(m);
    for (int t = 0; t < m; ++t) out.D[t] = mu[t] * (t % 2 == 0 ? a : b);
    out.gram.G = rescale(G, out.D);
    const double re = std::clamp(-out.gram.G(0, 2).re(), -1.0, 1.0);
    out.gram.alpha = std::clamp(std::acos(re), 0.0, std::numbers::pi / 2);
    return out;
}

std::vector<Quaternion> gram_to_vector(const GramMatrix& G) {
    std::vector<Quaternion> v;
    for (int j = 2; j < G.m(); ++j)
        for (int i = 0; i <= j - 2; ++i) v.push_back(G(i, j));
    return v;
}

int boundary_size_from_length(size_t t) {
    for (int m = 3; size_t((m - 1) * (m - 2) / 2) <= t; ++m)
        if (size_t((m - 1) * (m - 2) / 2) == t) return m;
    throw UsageError("vector length " + std::to_string(t) + " is not (m-1)(m-2)/2 for any m >= 3");
}

GramMatrix vector_to_gram(const std::vector<Quaternion>& v) {
    const int m = boundary_size_from_length(v.size());
    QMatrix g(m, m);
    for (int i = 1; i < m; ++i) g(i - 1, i) = 1.0;
    size_t t = 0;
    for (int j = 2; j < m; ++j)
        for (int i = 0; i <= j - 2; ++i) g(i, j) = v[t++];
    return GramMatrix::from_upper(g);
}

bool validate_boundary_vector(const std::vector<Quaternion>& v, int n, const Tolerances& tol) {
    if (v.empty()) throw UsageError("boundary vector is empty");
    const Quaternion& v1 = v[0];
    if (std::abs(v1.abs() - 1.0) > 1e-9 || std::hypot(v1.a2, v1.a3) > 1e-9 || v1.re() > 1e-12)
        throw UsageError("first entry must be a unit complex number with nonpositive real part");
    const Inertia in = inertia(vector_to_gram(v), tol);
    return in.n_minus == 1 && in.n_plus <= n;
}

BoundaryCoordinate boundary_coordinate(const Tuple& p, const Tolerances& tol) {
    const SemiNormalization sn = semi_normalize(p, tol);
    const RotationNormalized rn = rotation_normalize_vector(gram_to_vector(sn.gram.G), tol);
    return {int(p.size()), rn.stratum, rn.values};
}

double coordinate_distance(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    if (a.size() != b.size()) return INFINITY;
    double d = 0;
    for (size_t t = 0; t < a.size(); ++t)
        d = std::max(d, dist(a[t], b[t]) / (1.0 + std::max(a[t].abs(), b[t].abs())));
    return d;
}

bool same_coordinate(const BoundaryCoordinate& a, const BoundaryCoordinate& b, const Tolerances& tol) {
    return a.m == b.m && a.stratum == b.stratum && coordinate_distance(a.v, b.v) <= tol.compare;
}

bool congruent_boundary(const Tuple& p, const Tuple& q, const Tolerances& tol) {
    if (p.size() != q.size()) throw UsageError("congruent_boundary: tuples of different length");
    return same_coordinate(boundary_coordinate(p, tol), boundary_coordinate(q, tol), tol);
}

}  // namespace qhm
