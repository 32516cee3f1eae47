#include "qhm/hform.hpp"

#include <algorithm>
#include <functional>

#include "qhm/errors.hpp"

namespace qhm {

std::string to_string(Model m) { return m == Model::Ball ? "ball" : "siegel"; }

Model parse_model(const std::string& s) {
    if (s == "ball") return Model::Ball;
    if (s == "siegel") return Model::Siegel;
    throw UsageError("unknown model '" + s + "' (expected ball or siegel)");
}

HVector HVector::basis(int n, int a, Model m) {
    HVector v = zero(n, m);
    v.entries.at(a) = 1.0;
    return v;
}

HVector HVector::zero(int n, Model m) { return HVector(std::vector<Quaternion>(n + 1), m); }

double HVector::euclidean_norm() const {
    double s = 0;
    for (const auto& q : entries) s += q.norm2();
    return std::sqrt(s);
}

HVector HVector::operator*(const Quaternion& s) const {
    HVector out = *this;
    for (auto& q : out.entries) q = q * s;
    return out;
}

static void check_same(const HVector& a, const HVector& b) {
    if (a.dim() != b.dim()) throw UsageError("vectors of different dimension");
    if (a.model != b.model) throw UsageError("vectors in different models");
}

HVector HVector::operator+(const HVector& o) const {
    check_same(*this, o);
    HVector out = *this;
    for (int a = 0; a < dim(); ++a) out.entries[a] += o.entries[a];
    return out;
}

HVector HVector::operator-(const HVector& o) const {
    check_same(*this, o);
    HVector out = *this;
    for (int a = 0; a < dim(); ++a) out.entries[a] -= o.entries[a];
    return out;
}

Quaternion herm(const HVector& z, const HVector& w) {
    check_same(z, w);
    const int n = z.n();
    if (n < 1) throw UsageError("vectors must have at least two entries");
    const auto& a = z.entries;
    const auto& b = w.entries;
    Quaternion s;
    if (z.model == Model::Ball) {
        for (int t = 0; t < n; ++t) s += b[t].conj() * a[t];
        s -= b[n].conj() * a[n];
    } else {
        s += b[0].conj() * a[n];
        s += b[n].conj() * a[0];
        for (int t = 1; t < n; ++t) s += b[t].conj() * a[t];
    }
    return s;
}

QMatrix form_matrix(int n, Model m) {
    QMatrix J(n + 1, n + 1);
    if (m == Model::Ball) {
        for (int t = 0; t < n; ++t) J(t, t) = 1.0;
        J(n, n) = -1.0;
    } else {
        J(0, n) = 1.0;
        J(n, 0) = 1.0;
        for (int t = 1; t < n; ++t) J(t, t) = 1.0;
    }
    return J;
}

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::Negative: return "negative";
        case PointClass::Null: return "null";
        case PointClass::Positive: return "positive";
    }
    return "?";
}

PointClass classify(const HVector& z, const Tolerances& tol) {
    const double e2 = z.euclidean_norm();
    if (e2 == 0.0) throw DomainError("classify: zero vector");
    const double v = herm(z, z).re();
    if (std::abs(v) <= tol.null_class * e2 * e2) return PointClass::Null;
    return v > 0 ? PointClass::Positive : PointClass::Negative;
}

QMatrix cayley_matrix(int n) {
    const double r = 1.0 / std::sqrt(2.0);
    QMatrix C = QMatrix::identity(n + 1);
    C(0, 0) = r;
    C(0, n) = r;
    C(n, 0) = r;
    C(n, n) = -r;
    return C;
}

HVector cayley(const HVector& z) {
    if (z.model != Model::Ball) throw UsageError("cayley expects a ball-model vector");
    return HVector(cayley_matrix(z.n()) * z.entries, Model::Siegel);
}

HVector cayley_inverse(const HVector& z) {
    if (z.model != Model::Siegel) throw UsageError("cayley_inverse expects a Siegel-model vector");
    return HVector(cayley_matrix(z.n()) * z.entries, Model::Ball);
}

HVector to_model(const HVector& z, Model m) {
    if (z.model == m) return z;
    return m == Model::Siegel ? cayley(z) : cayley_inverse(z);
}

Tuple to_model(const Tuple& p, Model m) {
    Tuple out;
    out.reserve(p.size());
    for (const auto& z : p) out.push_back(to_model(z, m));
    return out;
}

HVector Isometry::operator()(const HVector& z) const {
    if (z.model != model) throw UsageError("isometry and vector in different models");
    return HVector(matrix * z.entries, model);
}

Tuple Isometry::operator()(const Tuple& p) const {
    Tuple out;
    out.reserve(p.size());
    for (const auto& z : p) out.push_back((*this)(z));
    return out;
}

Isometry Isometry::inverse() const {
    const QMatrix J = form_matrix(n(), model);
    return {J * matrix.adjoint() * J, model};
}

Isometry Isometry::identity(int n, Model m) { return {QMatrix::identity(n + 1), m}; }

Isometry operator*(const Isometry& a, const Isometry& b) {
    if (a.model != b.model) throw UsageError("composing isometries in different models");
    return {a.matrix * b.matrix, a.model};
}

Isometry cayley_isometry(const Isometry& g) {
    if (g.model != Model::Ball) throw UsageError("cayley_isometry expects a ball-model isometry");
    const QMatrix C = cayley_matrix(g.n());
    return {C * g.matrix * C, Model::Siegel};
}

Isometry to_model(const Isometry& g, Model m) {
    if (g.model == m) return g;
    const QMatrix C = cayley_matrix(g.n());
    return {C * g.matrix * C, m};
}

double verify_isometry(const Isometry& g) {
    if (g.matrix.rows() != g.matrix.cols()) throw UsageError("isometry matrix must be square");
    const QMatrix J = form_matrix(g.n(), g.model);
    return (g.matrix.adjoint() * J * g.matrix - J).frobenius();
}

namespace {

struct Frame {
    Tuple v;
    std::vector<double> s;  // +1 / -1
};

HVector project_out(HVector x, const Frame& f) {
    for (int pass = 0; pass < 2; ++pass)
        for (size_t k = 0; k < f.v.size(); ++k) x = x - f.v[k] * (herm(x, f.v[k]) * f.s[k]);
    return x;
}

// Greedy J-Gram-Schmidt over the standard basis: at each step take the candidate whose
// projection has the largest |<v,v>| (lowest index wins ties).
void complete_frame(Frame& f, int count, int n, Model m,
                    const std::function<HVector(const HVector&)>& pre) {
    for (int added = 0; added < count; ++added) {
        HVector best;
        double score = -1;
        for (int a = 0; a <= n; ++a) {
            HVector v = project_out(pre(HVector::basis(n, a, m)), f);
            const double sc = std::abs(herm(v, v).re());
            if (sc > score * (1 + 1e-12) + 1e-300) {
                score = sc;
                best = v;
            }
        }
        if (score < 1e-10) throw NumericalError("frame completion: no admissible candidate");
        const double h = herm(best, best).re();
        f.v.push_back(best * (1.0 / std::sqrt(std::abs(h))));
        f.s.push_back(h > 0 ? 1.0 : -1.0);
    }
}

HVector identity_pre(const HVector& x) { return x; }

// positives first, then negatives; stable
void sort_by_sign(Frame& f, size_t from) {
    std::vector<size_t> idx(f.v.size() - from);
    for (size_t t = 0; t < idx.size(); ++t) idx[t] = from + t;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return f.s[a] > f.s[b]; });
    Frame out;
    for (size_t t = 0; t < from; ++t) {
        out.v.push_back(f.v[t]);
        out.s.push_back(f.s[t]);
    }
    for (size_t t : idx) {
        out.v.push_back(f.v[t]);
        out.s.push_back(f.s[t]);
    }
    f = std::move(out);
}

std::vector<Quaternion> gaussian_entries(int len, std::mt19937_64& rng) {
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<Quaternion> e(len);
    for (auto& q : e) {
        double a = N(rng), b = N(rng), c = N(rng), d = N(rng);
        q = {a, b, c, d};
    }
    return e;
}

}  // namespace

Isometry random_isometry(int n, std::mt19937_64& rng, Model m) {
    if (n < 1) throw UsageError("random_isometry: n must be at least 1");
    std::uniform_real_distribution<double> ratio(1.2, 3.0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Frame f;
        // a timelike column with a moderate boost
        HVector v(gaussian_entries(n + 1, rng), Model::Ball);
        double spatial = 0;
        for (int a = 0; a < n; ++a) spatial += v.entries[a].norm2();
        const double last = v.entries[n].abs();
        if (last < 1e-6 || spatial < 1e-12) continue;
        v.entries[n] = v.entries[n] * (ratio(rng) * std::sqrt(spatial) / last);
        const double h = herm(v, v).re();
        f.v.push_back(v * (1.0 / std::sqrt(-h)));
        f.s.push_back(-1.0);

        // spacelike columns: pivot over an oversampled pool of random draws
        Tuple pool;
        for (int t = 0; t < n + 2; ++t) pool.emplace_back(gaussian_entries(n + 1, rng), Model::Ball);
        bool ok = true;
        for (int added = 0; added < n && ok; ++added) {
            size_t pick = 0;
            double score = -1;
            HVector best;
            for (size_t t = 0; t < pool.size(); ++t) {
                HVector w = project_out(pool[t], f);
                const double sc = herm(w, w).re() / std::max(1e-300, pool[t].euclidean_norm() * pool[t].euclidean_norm());
                if (sc > score) {
                    score = sc;
                    pick = t;
                    best = w;
                }
            }
            if (score < 1e-3) {
                ok = false;
                break;
            }
            f.v.push_back(best * (1.0 / std::sqrt(herm(best, best).re())));
            f.s.push_back(1.0);
            pool.erase(pool.begin() + long(pick));
        }
        if (!ok) continue;
        QMatrix g(n + 1, n + 1);
        for (int a = 0; a < n; ++a) g.set_column(a, f.v[size_t(a) + 1].entries);
        g.set_column(n, f.v[0].entries);
        Isometry iso{g, Model::Ball};
        if (verify_isometry(iso) > 1e-10 * (n + 1)) continue;
        return to_model(iso, m);
    }
    throw NumericalError("random_isometry: degenerate draws after 8 retries");
}

Isometry random_isometry(int n, std::uint64_t seed, Model m) {
    std::mt19937_64 rng(seed);
    return random_isometry(n, rng, m);
}

Isometry GInfinity::to_isometry() const {
    const int nn = n();
    QMatrix g(nn + 1, nn + 1);
    g(0, 0) = lambda;
    g(0, nn) = s;
    g(nn, nn) = mu;
    for (int a = 0; a < nn - 1; ++a) {
        g(0, a + 1) = gamma[a].conj();
        g(a + 1, nn) = beta[a];
        for (int b = 0; b < nn - 1; ++b) g(a + 1, b + 1) = U(a, b);
    }
    return {g, Model::Siegel};
}

double GInfinity::defect() const {
    double d = (mu.conj() * lambda - Quaternion(1.0)).abs();
    double b2 = 0;
    for (const auto& b : beta) b2 += b.norm2();
    d = std::max(d, std::abs((mu.conj() * s).re() + 0.5 * b2));
    const std::vector<Quaternion> ug = U * gamma;
    for (size_t a = 0; a < beta.size(); ++a) d = std::max(d, (beta[a] + ug[a] * mu).abs());
    d = std::max(d, (U.adjoint() * U - QMatrix::identity(U.rows())).frobenius());
    return d;
}

GInfinity random_g_infinity(int n, std::mt19937_64& rng) {
    if (n < 1) throw UsageError("random_g_infinity: n must be at least 1");
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    GInfinity g;
    const auto lam = gaussian_entries(1, rng)[0];
    g.lambda = lam * (scale(rng) / lam.abs());
    g.mu = g.lambda / g.lambda.norm2();  // conj(mu) lambda = 1
    const int k = n - 1;
    g.U = QMatrix(k, k);
    if (k > 0) {
        // random unitary from Gram-Schmidt of a Gaussian matrix
        std::vector<std::vector<Quaternion>> cols;
        for (int c = 0; c < k; ++c) {
            auto v = gaussian_entries(k, rng);
            for (const auto& u : cols) {
                Quaternion ip;
                for (int a = 0; a < k; ++a) ip += u[a].conj() * v[a];
                for (int a = 0; a < k; ++a) v[a] -= u[a] * ip;
            }
            double nv = 0;
            for (const auto& q : v) nv += q.norm2();
            for (auto& q : v) q = q / std::sqrt(nv);
            cols.push_back(v);
        }
        for (int c = 0; c < k; ++c) g.U.set_column(c, cols[c]);
    }
    g.gamma = gaussian_entries(k, rng);
    const auto ug = g.U * g.gamma;
    g.beta.resize(k);
    double b2 = 0;
    for (int a = 0; a < k; ++a) {
        g.beta[a] = -(ug[a] * g.mu);
        b2 += g.beta[a].norm2();
    }
    Quaternion x = gaussian_entries(1, rng)[0].im();
    x.a0 = -0.5 * b2;
    g.s = g.mu.conj().inverse() * x;
    return g;
}

Isometry map_signed_frames(const Tuple& p, const Tuple& q, const Tolerances&) {
    if (p.size() != q.size() || p.empty()) throw DomainError("frames must be nonempty and of equal length");
    const Model model = p[0].model;
    const int n = p[0].n();
    for (const auto& v : p)
        if (v.model != model || v.n() != n) throw UsageError("frame vectors must share model and dimension");
    for (const auto& v : q)
        if (v.model != model || v.n() != n) throw UsageError("frame vectors must share model and dimension");
    if (int(p.size()) > n + 1) throw DomainError("frame longer than the space dimension");

    Frame fp, fq;
    for (size_t k = 0; k < p.size(); ++k) {
        const HVector a = to_model(p[k], Model::Ball), b = to_model(q[k], Model::Ball);
        const double sp = herm(a, a).re() > 0 ? 1.0 : -1.0;
        const double sq = herm(b, b).re() > 0 ? 1.0 : -1.0;
        if (sp != sq) throw DomainError("frames have different signature");
        fp.v.push_back(a);
        fp.s.push_back(sp);
        fq.v.push_back(b);
        fq.s.push_back(sq);
    }
    const size_t m = p.size();
    complete_frame(fp, n + 1 - int(m), n, Model::Ball, identity_pre);
    complete_frame(fq, n + 1 - int(m), n, Model::Ball, identity_pre);
    sort_by_sign(fp, m);
    sort_by_sign(fq, m);
    if (fp.s != fq.s) throw DomainError("frames have different signature");

    QMatrix F(n + 1, n + 1), H(n + 1, n + 1);
    std::vector<Quaternion> sd;
    for (int c = 0; c <= n; ++c) {
        F.set_column(c, fp.v[c].entries);
        H.set_column(c, fq.v[c].entries);
        sd.emplace_back(fp.s[c]);
    }
    const QMatrix J = form_matrix(n, Model::Ball);
    Isometry g{H * QMatrix::diagonal(sd) * F.adjoint() * J, Model::Ball};
    return to_model(g, model);
}

Isometry map_orthonormal_frames(const Tuple& p, const Tuple& q, const Tolerances& tol) {
    if (p.size() != q.size() || p.empty()) throw DomainError("frames must be nonempty and of equal length");
    const int n = p[0].n();
    if (int(p.size()) > n) throw DomainError("frame length must be at most n");
    const double eps = std::max(tol.null_class, 1e-9);
    for (const Tuple* f : {&p, &q})
        for (size_t a = 0; a < f->size(); ++a)
            for (size_t b = 0; b < f->size(); ++b) {
                const Quaternion h = herm((*f)[a], (*f)[b]);
                const double target = a == b ? 1.0 : 0.0;
                if ((h - Quaternion(target)).abs() > eps * 10)
                    throw DomainError("map_orthonormal_frames: input is not a J-orthonormal positive frame");
            }
    return map_signed_frames(p, q, tol);
}

Tuple orthogonal_complement_basis(const HVector& z, const Tolerances& tol) {
    const int n = z.n();
    const Model m = z.model;
    const PointClass c = classify(z, tol);
    Frame f;
    if (c == PointClass::Null) {
        // w null with <w, z> = 1; z-perp = zH + {z, w}-perp
        HVector x;
        double best = -1;
        for (int a = 0; a <= n; ++a) {
            HVector e = HVector::basis(n, a, m);
            const double sc = herm(e, z).abs();
            if (sc > best * (1 + 1e-12)) {
                best = sc;
                x = e;
            }
        }
        const HVector x1 = x * herm(x, z).inverse();
        const HVector w = x1 - z * Quaternion(0.5 * herm(x1, x1).re());
        auto pre = [&](const HVector& v) { return v - z * herm(v, w) - w * herm(v, z); };
        complete_frame(f, n - 1, n, m, pre);
        Tuple out{z};
        for (auto& v : f.v) out.push_back(v);
        return out;
    }
    const double zz = herm(z, z).re();
    auto pre = [&](const HVector& v) { return v - z * (herm(v, z) / zz); };
    complete_frame(f, n, n, m, pre);
    sort_by_sign(f, 0);
    return f.v;
}

Isometry frame_at_null(const HVector& z, const Tolerances& tol) {
    if (z.model != Model::Siegel) throw UsageError("frame_at_null expects a Siegel-model vector");
    if (classify(z, tol) != PointClass::Null) throw DomainError("frame_at_null: vector is not null");
    const int n = z.n();
    HVector x;
    double best = -1;
    for (int a = 0; a <= n; ++a) {
        HVector e = HVector::basis(n, a, Model::Siegel);
        const double sc = herm(e, z).abs();
        if (sc > best * (1 + 1e-12)) {
            best = sc;
            x = e;
        }
    }
    const HVector x1 = x * herm(x, z).inverse();
    const HVector w = x1 - z * Quaternion(0.5 * herm(x1, x1).re());
    Frame f;
    auto pre = [&](const HVector& v) { return v - z * herm(v, w) - w * herm(v, z); };
    complete_frame(f, n - 1, n, Model::Siegel, pre);
    QMatrix F(n + 1, n + 1);
    F.set_column(0, z.entries);
    for (int a = 1; a < n; ++a) F.set_column(a, f.v[size_t(a) - 1].entries);
    F.set_column(n, w.entries);
    return {F, Model::Siegel};
}

double dist_point_to_hyperplane(const HVector& z, const HVector& p, const Tolerances& tol) {
    if (classify(z, tol) != PointClass::Negative) throw DomainError("dist_point_to_hyperplane: z must be negative");
    if (classify(p, tol) != PointClass::Positive) throw DomainError("dist_point_to_hyperplane: p must be positive");
    const double zz = herm(z, z).re(), pp = herm(p, p).re();
    const double c2 = 1.0 + herm(z, p).norm2() / (-zz * pp);
    return 2.0 * std::acosh(std::sqrt(std::max(1.0, c2)));
}

std::string to_string(PairConfiguration::Kind k) {
    switch (k) {
        case PairConfiguration::Kind::Intersecting: return "intersecting";
        case PairConfiguration::Kind::Asymptotic: return "asymptotic";
        case PairConfiguration::Kind::Ultraparallel: return "ultraparallel";
    }
    return "?";
}

double projective_deviation(const HVector& a, const HVector& b) {
    check_same(a, b);
    Quaternion num;
    double den = 0;
    for (int t = 0; t < a.dim(); ++t) {
        num += b.entries[t].conj() * a.entries[t];
        den += b.entries[t].norm2();
    }
    const double na = a.euclidean_norm();
    if (na == 0.0) return 0.0;
    if (den == 0.0) return 1.0;
    return (a - b * (num / den)).euclidean_norm() / na;
}

namespace {

struct NormalizedPair {
    HVector u1, u2;  // unit norm, <u1, u2> = t >= 0
    double t;
};

NormalizedPair normalize_pair(const HVector& p1, const HVector& p2, const Tolerances& tol) {
    if (classify(p1, tol) != PointClass::Positive || classify(p2, tol) != PointClass::Positive)
        throw DomainError("pair: both vectors must be positive");
    if (projective_deviation(p2, p1) <= tol.rank) throw DegenerateInputError("pair: proportional vectors");
    NormalizedPair r;
    r.u1 = p1 * (1.0 / std::sqrt(herm(p1, p1).re()));
    r.u2 = p2 * (1.0 / std::sqrt(herm(p2, p2).re()));
    const Quaternion h = herm(r.u1, r.u2);
    r.t = h.abs();
    if (r.t > 0) r.u2 = r.u2 * (h / r.t);
    return r;
}

}  // namespace

PairConfiguration pair_configuration(const HVector& p1, const HVector& p2, const Tolerances& tol) {
    const NormalizedPair np = normalize_pair(p1, p2, tol);
    PairConfiguration c;
    c.t = np.t;
    if (std::abs(np.t - 1.0) <= tol.asymptotic) {
        c.kind = PairConfiguration::Kind::Asymptotic;
        c.null_fibre = np.u2 - np.u1;
    } else if (np.t < 1.0) {
        c.kind = PairConfiguration::Kind::Intersecting;
        c.angle = std::acos(np.t);
    } else {
        c.kind = PairConfiguration::Kind::Ultraparallel;
        c.distance = 2.0 * std::acosh(np.t);
    }
    return c;
}

double pair_moduli(const HVector& p1, const HVector& p2, const Tolerances& tol) {
    return normalize_pair(p1, p2, tol).t;
}

namespace {

std::optional<Tuple> pair_frame(const NormalizedPair& np, PairConfiguration::Kind kind) {
    const HVector& u1 = np.u1;
    const double t = np.t;
    switch (kind) {
        case PairConfiguration::Kind::Intersecting:
            if (t >= 1.0) return std::nullopt;
            return Tuple{u1, (np.u2 - u1 * Quaternion(t)) * (1.0 / std::sqrt(1 - t * t))};
        case PairConfiguration::Kind::Ultraparallel:
            if (t <= 1.0) return std::nullopt;
            return Tuple{u1, (np.u2 - u1 * Quaternion(t)) * (1.0 / std::sqrt(t * t - 1))};
        case PairConfiguration::Kind::Asymptotic: {
            const int n = u1.n();
            const HVector z = np.u2 - u1;
            HVector x;
            double best = -1;
            for (int a = 0; a <= n; ++a) {
                HVector e = HVector::basis(n, a, u1.model);
                e = e - u1 * herm(e, u1);
                const double sc = herm(e, z).abs();
                if (sc > best * (1 + 1e-12)) {
                    best = sc;
                    x = e;
                }
            }
            if (best < 1e-12) return std::nullopt;
            const HVector x1 = x * herm(x, z).inverse();
            const HVector w = x1 - z * Quaternion(0.5 * herm(x1, x1).re());
            const double r = 1.0 / std::sqrt(2.0);
            return Tuple{u1, (z + w) * r, (z - w) * r};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PairIsometry> pair_congruence_isometry(const HVector& p1, const HVector& p2,
                                                     const HVector& q1, const HVector& q2,
                                                     const Tolerances& tol) {
    const NormalizedPair a = normalize_pair(p1, p2, tol);
    const NormalizedPair b = normalize_pair(q1, q2, tol);
    PairConfiguration::Kind kind = PairConfiguration::Kind::Intersecting;
    if (std::abs(a.t - 1.0) <= tol.asymptotic)
        kind = PairConfiguration::Kind::Asymptotic;
    else if (a.t > 1.0)
        kind = PairConfiguration::Kind::Ultraparallel;
    auto fa = pair_frame(a, kind);
    auto fb = pair_frame(b, kind);
    if (!fa || !fb) return std::nullopt;
    Isometry g;
    try {
        g = map_signed_frames(*fa, *fb, tol);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    PairIsometry r{g, 0.0, verify_isometry(g)};
    r.image_deviation = std::max(projective_deviation(g(p1), q1), projective_deviation(g(p2), q2));
    return r;
}

}  // namespace qhm
