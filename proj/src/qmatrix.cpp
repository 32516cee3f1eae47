#include "qhm/qmatrix.hpp"

#include <algorithm>

#include "qhm/errors.hpp"

namespace qhm {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int t = 0; t < n; ++t) m(t, t) = 1.0;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
    QMatrix m(int(d.size()), int(d.size()));
    for (size_t t = 0; t < d.size(); ++t) m(int(t), int(t)) = d[t];
    return m;
}

QMatrix QMatrix::adjoint() const {
    QMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
    return out;
}

double QMatrix::frobenius() const {
    double s = 0;
    for (const auto& q : data_) s += q.norm2();
    return std::sqrt(s);
}

double QMatrix::max_abs() const {
    double s = 0;
    for (const auto& q : data_) s = std::max(s, q.abs());
    return s;
}

std::vector<Quaternion> QMatrix::column(int c) const {
    std::vector<Quaternion> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void QMatrix::set_column(int c, const std::vector<Quaternion>& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw UsageError("matrix product: shape mismatch");
    QMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const Quaternion& x = a(r, k);
            for (int c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
        }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix sum: shape mismatch");
    QMatrix out = a;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix difference: shape mismatch");
    QMatrix out = a;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
    return out;
}

std::vector<Quaternion> operator*(const QMatrix& a, const std::vector<Quaternion>& v) {
    if (a.cols() != int(v.size())) throw UsageError("matrix-vector product: shape mismatch");
    std::vector<Quaternion> out(a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
    return out;
}

Eigen::MatrixXcd complex_adjoint(const QMatrix& a) {
    Eigen::MatrixXcd m(2 * a.rows(), 2 * a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            const auto c1 = a(r, c).c1(), c2 = a(r, c).c2();
            m(2 * r, 2 * c) = c1;
            m(2 * r, 2 * c + 1) = c2;
            m(2 * r + 1, 2 * c) = -std::conj(c2);
            m(2 * r + 1, 2 * c + 1) = std::conj(c1);
        }
    return m;
}

}  // namespace qhm

namespace qhm {

double max_dist(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
    double d = 0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) d = std::max(d, dist(a(r, c), b(r, c)));
    return d;
}

}  // namespace qhm
