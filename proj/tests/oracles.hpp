#pragma once

// Independent reference computations for the tests. They go through the 2x2 complex
// representation q = c1 + c2 j  ->  [[c1, c2], [-conj(c2), conj(c1)]] and Eigen, never
// through the library's quaternion arithmetic.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qhm/hform.hpp"

namespace oracle {

using cd = std::complex<double>;
using qhm::Quaternion;

inline Eigen::Matrix2cd mat(const Quaternion& q) {
    const cd c1(q.a0, q.a1), c2(q.a2, q.a3);
    Eigen::Matrix2cd M;
    M << c1, c2, -std::conj(c2), std::conj(c1);
    return M;
}

inline Quaternion quat(const Eigen::Matrix2cd& M) {
    return {M(0, 0).real(), M(0, 0).imag(), M(0, 1).real(), M(0, 1).imag()};
}

inline Quaternion mul(const Quaternion& a, const Quaternion& b) { return quat(mat(a) * mat(b)); }

inline Quaternion conj(const Quaternion& q) { return quat(mat(q).adjoint()); }

// (n+1) x 1 quaternion column as a 2(n+1) x 2 complex block column
inline Eigen::MatrixXcd column(const qhm::HVector& z) {
    Eigen::MatrixXcd C(2 * z.dim(), 2);
    for (int a = 0; a < z.dim(); ++a) C.block(2 * a, 0, 2, 2) = mat(z.entries[a]);
    return C;
}

inline Eigen::MatrixXcd form(int n, qhm::Model m) {
    const int d = n + 1;
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    if (m == qhm::Model::Ball) {
        for (int a = 0; a < d; ++a) J.block(2 * a, 2 * a, 2, 2) = Eigen::Matrix2cd::Identity() * (a == n ? -1.0 : 1.0);
    } else {
        J.block(0, 2 * n, 2, 2) = Eigen::Matrix2cd::Identity();
        J.block(2 * n, 0, 2, 2) = Eigen::Matrix2cd::Identity();
        for (int a = 1; a < n; ++a) J.block(2 * a, 2 * a, 2, 2) = Eigen::Matrix2cd::Identity();
    }
    return J;
}

// <z, w> = w* J z
inline Quaternion herm(const qhm::HVector& z, const qhm::HVector& w) {
    return quat(column(w).adjoint() * form(z.n(), z.model) * column(z));
}

// g_ij = <p_j, p_i> as a 2m x 2m complex Hermitian matrix
inline Eigen::MatrixXcd gram_adjoint(const qhm::Tuple& p) {
    const int m = int(p.size());
    Eigen::MatrixXcd G(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) G.block(2 * i, 2 * j, 2, 2) = mat(oracle::herm(p[j], p[i]));
    return G;
}

struct Signature {
    int plus = 0, minus = 0, zero = 0;
};

// eigenvalue signature of a complex adjoint; every count comes out doubled
inline Signature eigen_signature(const Eigen::MatrixXcd& H, double rel) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    Signature s;
    for (int k = 0; k < ev.size(); ++k) {
        if (ev[k] > rel * scale)
            ++s.plus;
        else if (ev[k] < -rel * scale)
            ++s.minus;
        else
            ++s.zero;
    }
    s.plus /= 2;
    s.minus /= 2;
    s.zero /= 2;
    return s;
}

// complex 3x3 determinant for a normalized triangle Gram
inline double triangle_det(double r1, double r2, double r3, double alpha) {
    Eigen::Matrix3cd G;
    const cd g23 = std::polar(r1, alpha);
    G << 1.0, r3, r2, r3, 1.0, g23, r2, std::conj(g23), 1.0;
    return G.determinant().real();
}

}  // namespace oracle
