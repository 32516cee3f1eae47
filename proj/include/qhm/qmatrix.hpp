#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qhm/quat.hpp"

namespace qhm {

// Dense row-major quaternion matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static QMatrix identity(int n);
    static QMatrix diagonal(const std::vector<Quaternion>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Quaternion& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Quaternion& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    QMatrix adjoint() const;
    double frobenius() const;
    double max_abs() const;

    std::vector<Quaternion> column(int c) const;
    void set_column(int c, const std::vector<Quaternion>& v);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
std::vector<Quaternion> operator*(const QMatrix& a, const std::vector<Quaternion>& v);

double max_dist(const QMatrix& a, const QMatrix& b);

// c1 + c2 j  ->  [[c1, c2], [-conj(c2), conj(c1)]], blockwise
Eigen::MatrixXcd complex_adjoint(const QMatrix& a);

}  // namespace qhm
