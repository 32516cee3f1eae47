#include "qhm/gram.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <numeric>

#include "qhm/errors.hpp"

namespace qhm {

GramMatrix::GramMatrix(const QMatrix& e) {
    if (e.rows() != e.cols()) throw UsageError("Gram matrix must be square");
    const double scale = std::max(1.0, e.max_abs());
    for (int i = 0; i < e.rows(); ++i)
        for (int j = i; j < e.cols(); ++j)
            if ((e(i, j) - e(j, i).conj()).abs() > 1e-9 * scale)
                throw UsageError("Gram matrix is not Hermitian at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
    *this = from_upper(e);
}

GramMatrix GramMatrix::from_upper(const QMatrix& e) {
    if (e.rows() != e.cols()) throw UsageError("Gram matrix must be square");
    GramMatrix G;
    G.g_ = QMatrix(e.rows(), e.cols());
    for (int i = 0; i < e.rows(); ++i) {
        G.g_(i, i) = Quaternion(e(i, i).re());
        for (int j = i + 1; j < e.cols(); ++j) {
            G.g_(i, j) = e(i, j);
            G.g_(j, i) = e(i, j).conj();
        }
    }
    return G;
}

double max_dist(const GramMatrix& a, const GramMatrix& b) {
    if (a.m() != b.m()) return INFINITY;
    return (a.matrix() - b.matrix()).max_abs();
}

std::string Inertia::str() const {
    return "(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + "," + std::to_string(n_zero) + ")";
}

GramMatrix gram(const Tuple& p) {
    const int m = int(p.size());
    QMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) g(i, j) = herm(p[j], p[i]);
    return GramMatrix::from_upper(g);
}

static void check_permutation(const std::vector<int>& sigma, int m) {
    if (int(sigma.size()) != m) throw UsageError("permutation has wrong length");
    std::vector<int> seen(m, 0);
    for (int s : sigma) {
        if (s < 0 || s >= m || seen[s]++) throw UsageError("not a permutation");
    }
}

GramMatrix permute(const GramMatrix& G, const std::vector<int>& sigma) {
    check_permutation(sigma, G.m());
    QMatrix out(G.m(), G.m());
    for (int a = 0; a < G.m(); ++a)
        for (int b = 0; b < G.m(); ++b) out(a, b) = G(sigma[a], sigma[b]);
    return GramMatrix::from_upper(out);
}

Tuple permute(const Tuple& p, const std::vector<int>& sigma) {
    check_permutation(sigma, int(p.size()));
    Tuple out;
    for (int s : sigma) out.push_back(p[s]);
    return out;
}

QMatrix permutation_matrix(const std::vector<int>& sigma) {
    const int m = int(sigma.size());
    check_permutation(sigma, m);
    QMatrix T(m, m);
    for (int a = 0; a < m; ++a) T(sigma[a], a) = 1.0;
    return T;
}

GramMatrix rescale(const GramMatrix& G, const std::vector<Quaternion>& D) {
    if (int(D.size()) != G.m()) throw UsageError("rescale: wrong number of scalars");
    QMatrix out(G.m(), G.m());
    for (int i = 0; i < G.m(); ++i)
        for (int j = i; j < G.m(); ++j) out(i, j) = D[i].conj() * G(i, j) * D[j];
    return GramMatrix::from_upper(out);
}

Tuple rescale(const Tuple& p, const std::vector<Quaternion>& D) {
    if (D.size() != p.size()) throw UsageError("rescale: wrong number of scalars");
    Tuple out;
    for (size_t t = 0; t < p.size(); ++t) out.push_back(p[t] * D[t]);
    return out;
}

std::vector<double> eigenvalues(const GramMatrix& G) {
    if (G.m() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(G.matrix()), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
    const auto& ev = es.eigenvalues();
    std::vector<double> out;
    // ascending and paired: take every other one
    for (int t = 0; t < ev.size(); t += 2) out.push_back(0.5 * (ev[t] + ev[t + 1]));
    return out;
}

Inertia inertia(const GramMatrix& G, const Tolerances& tol) {
    Inertia in;
    if (G.m() == 0) return in;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(G.matrix()), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
    const auto& ev = es.eigenvalues();
    const double norm = ev.cwiseAbs().maxCoeff();
    const double cut = tol.rank * norm;
    int pos = 0, neg = 0, zero = 0;
    for (int t = 0; t < ev.size(); ++t) {
        if (ev[t] > cut)
            ++pos;
        else if (ev[t] < -cut)
            ++neg;
        else
            ++zero;
    }
    if (pos % 2 || neg % 2 || zero % 2)
        throw InconsistencyError("inertia: eigenvalue multiplicities are not even; the tolerance splits a pair");
    in.n_plus = pos / 2;
    in.n_minus = neg / 2;
    in.n_zero = zero / 2;
    return in;
}

CongruenceReduction congruence_diagonalize(const GramMatrix& G, const Tolerances& tol) {
    const int m = G.m();
    QMatrix H = G.matrix();
    QMatrix M = QMatrix::identity(m);
    std::vector<double> d(m, 0.0);
    std::vector<bool> active(m, true);
    const double cut = tol.rank * G.max_abs();

    for (int step = 0; step < m; ++step) {
        int rd = -1, ro = -1, so = -1;
        double dmax = -1, omax = -1;
        for (int r = 0; r < m; ++r) {
            if (!active[r]) continue;
            if (std::abs(H(r, r).re()) > dmax) {
                dmax = std::abs(H(r, r).re());
                rd = r;
            }
            for (int s = r + 1; s < m; ++s)
                if (active[s] && H(r, s).abs() > omax) {
                    omax = H(r, s).abs();
                    ro = r;
                    so = s;
                }
        }
        if (std::max(dmax, omax) <= cut) break;

        int r = rd;
        if (dmax < 0.5 * omax) {
            // column ro += column so * mu, with H(ro,so) mu real
            const double sum = H(ro, ro).re() + H(so, so).re();
            const double sg = sum < 0 ? -1.0 : 1.0;
            const Quaternion mu = H(ro, so).conj() * (sg / H(ro, so).abs());
            for (int t = 0; t < m; ++t) H(t, ro) += H(t, so) * mu;
            for (int t = 0; t < m; ++t) H(ro, t) += mu.conj() * H(so, t);
            for (int t = 0; t < m; ++t) M(so, t) -= mu * M(ro, t);
            r = ro;
        }

        const double h = H(r, r).re();
        for (int s = 0; s < m; ++s) {
            if (!active[s] || s == r) continue;
            const Quaternion c = H(r, s) / h;
            for (int t = 0; t < m; ++t) M(r, t) += c * M(s, t);
        }
        for (int s = 0; s < m; ++s) {
            if (!active[s] || s == r) continue;
            for (int t = 0; t < m; ++t) {
                if (!active[t] || t == r) continue;
                H(s, t) -= H(s, r) * H(r, t) / h;
            }
        }
        for (int s = 0; s < m; ++s)
            if (s != r) {
                H(s, r) = 0.0;
                H(r, s) = 0.0;
            }
        d[r] = h;
        active[r] = false;
    }
    return {M, d};
}

GramKind gram_kind(const GramMatrix& G, const Tolerances& tol) {
    const double cut = tol.rank * std::max(G.max_abs(), 1e-300);
    bool all_zero = true, all_pos = true;
    for (int i = 0; i < G.m(); ++i) {
        const double v = G(i, i).re();
        if (std::abs(v) > cut) all_zero = false;
        if (v <= cut) all_pos = false;
    }
    if (all_zero) return GramKind::Boundary;
    if (all_pos) return GramKind::Positive;
    return GramKind::Mixed;
}

bool has_unit_pair(const GramMatrix& G, const Tolerances& tol) {
    for (int i = 0; i < G.m(); ++i)
        for (int j = i + 1; j < G.m(); ++j) {
            const double den = G(i, i).re() * G(j, j).re();
            if (den <= 0) continue;
            if (std::abs(G(i, j).abs() / std::sqrt(den) - 1.0) <= tol.asymptotic) return true;
        }
    return false;
}

Admissibility admissibility(const GramMatrix& G, int n, const Tolerances& tol) {
    Admissibility a;
    a.inertia = inertia(G, tol);
    const Inertia& in = a.inertia;
    auto fail = [&](const char* cond) {
        a.ok = false;
        a.violated = cond;
        return a;
    };
    switch (gram_kind(G, tol)) {
        case GramKind::Boundary:
            if (in.n_minus != 1) return fail("n₋ = 1");
            if (in.n_plus > n) return fail("n₊ ≤ n");
            break;
        case GramKind::Positive:
            if (in.n_minus > 1) return fail("n₋ ≤ 1");
            if (in.n_plus > n) return fail("n₊ ≤ n");
            if (in.n_plus + in.n_minus < 1 || in.n_plus + in.n_minus > n + 1) return fail("1 ≤ n₊+n₋ ≤ n+1");
            // a parabolic span lies in z0-perp, which has dimension n
            if (in.n_minus == 0 && has_unit_pair(G, tol) && in.n_plus > n - 1) return fail("n₊ ≤ n−1 (parabolic span)");
            break;
        case GramKind::Mixed:
            if (in.n_minus > 1) return fail("n₋ ≤ 1");
            if (in.n_plus > n) return fail("n₊ ≤ n");
            break;
    }
    return a;
}

Tuple realize(const GramMatrix& G, int n, Model model, const Tolerances& tol) {
    if (n < 1) throw UsageError("realize: n must be at least 1");
    const int m = G.m();
    const Admissibility adm = admissibility(G, n, tol);
    if (!adm.ok)
        throw RealizationError(adm.violated, "inadmissible Gram matrix, inertia " + adm.inertia.str() +
                                                 " violates " + adm.violated);
    const Inertia& in = adm.inertia;

    const CongruenceReduction cr = congruence_diagonalize(G, tol);
    const double cut = tol.rank * G.max_abs();
    int pos = 0, neg = 0;
    for (double v : cr.d) {
        if (v > cut) ++pos;
        if (v < -cut) ++neg;
    }
    if (pos != in.n_plus || neg != in.n_minus)
        throw NumericalError("realize: congruence reduction disagrees with the spectrum (ε too tight?)");

    const bool parabolic = in.n_minus == 0 && in.n_zero > 0 && has_unit_pair(G, tol);
    // columns of A satisfy A* J A = diag(d)
    QMatrix A(n + 1, m);
    int next_pos = 0, zero_slot = 0;
    for (int k = 0; k < m; ++k) {
        const double v = cr.d[k];
        if (v > cut) {
            A(next_pos++, k) = std::sqrt(v);
        } else if (v < -cut) {
            A(n, k) = std::sqrt(-v);
        } else if (parabolic) {
            // distinct multiples of the null vector e_{n+} + e_{n+1}
            const double c = ++zero_slot;
            A(in.n_plus, k) = c;
            A(n, k) = c;
        }
    }
    const QMatrix P = A * cr.M;
    Tuple out;
    for (int j = 0; j < m; ++j) out.push_back(to_model(HVector(P.column(j), Model::Ball), model));

    for (int a = 0; a < m; ++a) {
        if (out[a].euclidean_norm() == 0.0)
            throw RealizationError("pairwise distinct points", "realize: the Gram matrix forces a zero vector");
        for (int b = a + 1; b < m; ++b)
            if (projective_deviation(out[b], out[a]) <= 1e-9)
                throw RealizationError("pairwise distinct points",
                                       "realize: points " + std::to_string(a + 1) + " and " +
                                           std::to_string(b + 1) + " coincide for every realization");
    }
    return out;
}

int span_dimension(const Tuple& p, const Tolerances& tol) {
    if (p.empty()) return 0;
    const int rows = p[0].dim();
    QMatrix A(rows, int(p.size()));
    for (size_t c = 0; c < p.size(); ++c) {
        const double nrm = p[c].euclidean_norm();
        if (p[c].dim() != rows) throw UsageError("span_dimension: vectors of different dimension");
        if (nrm == 0) continue;
        A.set_column(int(c), (p[c] * (1.0 / nrm)).entries);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_adjoint(A));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return 0;
    int count = 0;
    for (int t = 0; t < sv.size(); ++t)
        if (sv[t] > tol.rank * sv[0]) ++count;
    if (count % 2) throw InconsistencyError("span_dimension: singular values are not paired");
    return count / 2;
}

}  // namespace qhm
