#include "qhm/triangle.hpp"

#include <algorithm>
#include <numbers>

#include "qhm/boundary_moduli.hpp"
#include "qhm/errors.hpp"
#include "qhm/positive_moduli.hpp"

namespace qhm {

void TriangleParams::validate() const {
    if (!(r1 >= 0 && r2 >= 0 && r3 >= 0)) throw DomainError("triangle: r1, r2, r3 must be nonnegative");
    if (!(alpha >= 0 && alpha <= std::numbers::pi)) throw DomainError("triangle: alpha must lie in [0, pi]");
}

std::string to_string(TriangleClass c) {
    switch (c) {
        case TriangleClass::Parabolic111: return "parabolic111";
        case TriangleClass::Elliptic: return "elliptic";
        case TriangleClass::HyperbolicPlanar: return "hyperbolic-planar";
        case TriangleClass::HyperbolicFull: return "hyperbolic-full";
    }
    return "?";
}

std::string to_string(SideData::Kind k) {
    switch (k) {
        case SideData::Kind::Intersecting: return "intersecting";
        case SideData::Kind::Ideal: return "ideal";
        case SideData::Kind::Ultraparallel: return "ultraparallel";
    }
    return "?";
}

static void require_positive3(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol) {
    int t = 0;
    for (const HVector* p : {&p1, &p2, &p3}) {
        ++t;
        if (p->n() != 2) throw UsageError("triangle: points must lie in H^{2,1}");
        const PointClass c = classify(*p, tol);
        if (c != PointClass::Positive)
            throw DomainError("triangle: point " + std::to_string(t) + " is " + to_string(c) + ", expected positive");
    }
}

AngularInvariant triangle_angular_invariant(const HVector& p1, const HVector& p2, const HVector& p3,
                                            const Tolerances& tol) {
    require_positive3(p1, p2, p3, tol);
    const Quaternion T = triple_product(p1, p2, p3);
    const double scale = herm(p1, p1).re() * herm(p2, p2).re() * herm(p3, p3).re();
    if (T.abs() <= tol.zero_pattern * scale) return {std::numbers::pi / 2, true};
    return {std::acos(std::clamp(T.re() / T.abs(), -1.0, 1.0)), false};
}

GramMatrix normalize_triangle(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol) {
    require_positive3(p1, p2, p3, tol);
    return one_normalize(Tuple{p1, p2, p3}, tol).G;
}

TriangleParams params_of(const GramMatrix& G) {
    if (G.m() != 3) throw UsageError("triangle: expected a 3x3 Gram matrix");
    TriangleParams t;
    t.r3 = G(0, 1).abs();
    t.r2 = G(0, 2).abs();
    const Quaternion g = G(1, 2);
    t.r1 = g.abs();
    t.alpha = t.r1 > 0 ? std::atan2(std::hypot(g.a1, g.a2, g.a3), g.a0) : 0.0;
    return t;
}

TriangleParams triangle_params(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol) {
    return params_of(normalize_triangle(p1, p2, p3, tol));
}

GramMatrix triangle_gram(const TriangleParams& t) {
    t.validate();
    QMatrix g = QMatrix::identity(3);
    g(0, 1) = t.r3;
    g(0, 2) = t.r2;
    g(1, 2) = Quaternion(t.r1 * std::cos(t.alpha), t.r1 * std::sin(t.alpha), 0, 0);
    return GramMatrix::from_upper(g);
}

double triangle_det(const TriangleParams& t) {
    return 1 - (t.r1 * t.r1 + t.r2 * t.r2 + t.r3 * t.r3) + 2 * t.r1 * t.r2 * t.r3 * std::cos(t.alpha);
}

bool triangle_exists(const TriangleParams& t, double tol) {
    t.validate();
    const double det = triangle_det(t);
    if (det > tol) return false;
    if (std::abs(det) <= tol) {
        // With det = 0 and some r = 1 only (1,1,1;0) survives: (1,r,r;0) forces two equal
        // points and (1,0,0;alpha) puts a positive vector orthogonal to a parabolic plane.
        auto one = [](double r) { return std::abs(r - 1) <= 1e-8; };
        const bool any_one = one(t.r1) || one(t.r2) || one(t.r3);
        const bool ideal = one(t.r1) && one(t.r2) && one(t.r3) && t.alpha <= 1e-8;
        if (any_one && !ideal) return false;
    }
    return true;
}

Tuple realize_triangle(const TriangleParams& t, Model model, const Tolerances& tol) {
    return realize(triangle_gram(t), 2, model, tol);
}

TriangleClass classify_triangle(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol) {
    require_positive3(p1, p2, p3, tol);
    const Tuple p{p1, p2, p3};
    const GramMatrix G = one_normalize(p, tol).G;
    const Inertia in = inertia(G, tol);
    const int dim = span_dimension(p, tol);
    auto bad = [&] {
        return InconsistencyError("classify_triangle: inertia " + in.str() + " with span dimension " +
                                  std::to_string(dim) + " is not a triangle signature");
    };
    if (in.n_minus == 0 && in.n_plus == 1) {
        if (dim != 2) throw bad();
        const TriangleParams t = params_of(G);
        if (std::abs(t.r1 - 1) > 1e-8 || std::abs(t.r2 - 1) > 1e-8 || std::abs(t.r3 - 1) > 1e-8 || t.alpha > 1e-6)
            throw InconsistencyError("classify_triangle: parabolic span but the parameters are not (1,1,1;0)");
        return TriangleClass::Parabolic111;
    }
    if (in.n_minus == 0 && in.n_plus == 2 && dim == 2) return TriangleClass::Elliptic;
    if (in.n_minus == 1 && in.n_plus == 1 && dim == 2) return TriangleClass::HyperbolicPlanar;
    if (in.n_minus == 1 && in.n_plus == 2 && dim == 3) return TriangleClass::HyperbolicFull;
    throw bad();
}

SideData side_data(double r, double tol) {
    if (r < 0) throw DomainError("side_data: r must be nonnegative");
    if (std::abs(r - 1) <= tol) return {SideData::Kind::Ideal, 0, 0};
    if (r < 1) return {SideData::Kind::Intersecting, std::acos(r), 0};
    return {SideData::Kind::Ultraparallel, 0, 2 * std::acosh(r)};
}

std::array<SideData, 3> side_data(const TriangleParams& t, double tol) {
    return {side_data(t.r1, tol), side_data(t.r2, tol), side_data(t.r3, tol)};
}

}  // namespace qhm
