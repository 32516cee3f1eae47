#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qhm/tolerances.hpp"

namespace qhm {

struct Quaternion {
    double a0 = 0, a1 = 0, a2 = 0, a3 = 0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r) : a0(r) {}
    constexpr Quaternion(double w, double x, double y, double z) : a0(w), a1(x), a2(y), a3(z) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }
    // c1 + c2 j with c1, c2 in C = R + Ri
    static Quaternion from_complex_pair(std::complex<double> c1, std::complex<double> c2) {
        return {c1.real(), c1.imag(), c2.real(), c2.imag()};
    }

    double re() const { return a0; }
    Quaternion im() const { return {0, a1, a2, a3}; }
    Quaternion conj() const { return {a0, -a1, -a2, -a3}; }
    double norm2() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
    double abs() const { return std::sqrt(norm2()); }
    Quaternion inverse() const;

    std::complex<double> c1() const { return {a0, a1}; }
    std::complex<double> c2() const { return {a2, a3}; }

    Quaternion& operator+=(const Quaternion& q) {
        a0 += q.a0; a1 += q.a1; a2 += q.a2; a3 += q.a3;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& q) {
        a0 -= q.a0; a1 -= q.a1; a2 -= q.a2; a3 -= q.a3;
        return *this;
    }
    Quaternion& operator*=(double s) {
        a0 *= s; a1 *= s; a2 *= s; a3 *= s;
        return *this;
    }

    bool operator==(const Quaternion&) const = default;
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& a) { return {-a.a0, -a.a1, -a.a2, -a.a3}; }
inline Quaternion operator*(Quaternion a, double s) { return a *= s; }
inline Quaternion operator*(double s, Quaternion a) { return a *= s; }
inline Quaternion operator/(Quaternion a, double s) { return a *= 1.0 / s; }

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
            p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
            p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
            p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0};
}

inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

std::string to_string(const Quaternion& q);

// x i + y j + z k
struct ImVector3 {
    double x = 0, y = 0, z = 0;

    static ImVector3 of(const Quaternion& q) { return {q.a1, q.a2, q.a3}; }
    Quaternion quat() const { return {0, x, y, z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double dot(const ImVector3& o) const { return x * o.x + y * o.y + z * o.z; }
    ImVector3 cross(const ImVector3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
};

class UnitQuaternion {
public:
    UnitQuaternion() = default;
    // throws DomainError unless ||q| - 1| <= tol
    explicit UnitQuaternion(const Quaternion& q, double tol = 1e-9);
    // rescales q; throws DomainError on zero
    static UnitQuaternion normalized(const Quaternion& q);

    const Quaternion& q() const { return q_; }
    operator const Quaternion&() const { return q_; }
    UnitQuaternion conj() const { return UnitQuaternion::trusted(q_.conj()); }

    // representative of {q, -q}: Re >= 0, first nonzero imaginary part positive
    UnitQuaternion canonical_sign() const;

    static UnitQuaternion trusted(const Quaternion& q) {
        UnitQuaternion u;
        u.q_ = q;
        return u;
    }

private:
    Quaternion q_{1.0};
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// M with vec(conj(mu) v mu) = M vec(v)
Mat3 rotation_matrix(const Quaternion& mu);
ImVector3 apply(const Mat3& m, const ImVector3& v);

// conj(mu) q mu
inline Quaternion conjugate_by(const Quaternion& q, const Quaternion& mu) {
    return mu.conj() * q * mu;
}

// conj(nu) v1 nu = |v1| i
UnitQuaternion nu(const ImVector3& v1);

// conj(mu) v1 mu = |v1| i and conj(mu) v2 mu in R i + R_{>0} j
UnitQuaternion mu(const ImVector3& v1, const ImVector3& v2, const Tolerances& tol = {});

bool independent(const ImVector3& v1, const ImVector3& v2, double eps);

struct StratumTag {
    enum class Kind { ZR, ZC, Zij, PC, Pj };
    Kind kind = Kind::ZR;
    int i = 0;  // 1-based, ZC and Zij
    int j = 0;  // 1-based, Zij and Pj

    std::string str() const;
    static StratumTag parse(const std::string& s);
    bool operator==(const StratumTag&) const = default;
};

struct RotationNormalized {
    UnitQuaternion rotation;
    std::vector<Quaternion> values;
    StratumTag stratum;
};

// Canonical representative of {conj(mu) v mu : mu in Sp(1)}.
RotationNormalized rotation_normalize_vector(const std::vector<Quaternion>& v,
                                             const Tolerances& tol = {});

std::vector<Quaternion> conjugate_all(const std::vector<Quaternion>& v, const Quaternion& mu);

double max_dist(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b);

}  // namespace qhm
