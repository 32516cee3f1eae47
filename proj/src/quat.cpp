#include "qhm/quat.hpp"

#include <algorithm>
#include <cstdio>
#include <regex>

#include "qhm/errors.hpp"

namespace qhm {

Quaternion Quaternion::inverse() const {
    double n2 = norm2();
    if (n2 == 0.0) throw DomainError("inverse of zero quaternion");
    return conj() / n2;
}

std::string to_string(const Quaternion& q) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi%+.10gj%+.10gk", q.a0, q.a1, q.a2, q.a3);
    return buf;
}

UnitQuaternion::UnitQuaternion(const Quaternion& q, double tol) : q_(q) {
    if (std::abs(q.abs() - 1.0) > tol)
        throw DomainError("not a unit quaternion: |q| = " + std::to_string(q.abs()));
}

UnitQuaternion UnitQuaternion::normalized(const Quaternion& q) {
    double n = q.abs();
    if (n == 0.0) throw DomainError("cannot normalize zero quaternion");
    return trusted(q / n);
}

UnitQuaternion UnitQuaternion::canonical_sign() const {
    constexpr double tiny = 1e-15;
    for (double c : {q_.a0, q_.a1, q_.a2, q_.a3}) {
        if (std::abs(c) > tiny) return c > 0 ? *this : trusted(-q_);
    }
    return *this;
}

Mat3 rotation_matrix(const Quaternion& m) {
    if (std::abs(m.abs() - 1.0) > 1e-9) throw DomainError("rotation_matrix needs a unit quaternion");
    const double u0 = m.a0, u1 = m.a1, u2 = m.a2, u3 = m.a3;
    return {{{u1 * u1 + u0 * u0 - u3 * u3 - u2 * u2, 2 * u1 * u2 + 2 * u0 * u3, 2 * u1 * u3 - 2 * u0 * u2},
             {2 * u1 * u2 - 2 * u0 * u3, u2 * u2 - u3 * u3 + u0 * u0 - u1 * u1, 2 * u2 * u3 + 2 * u0 * u1},
             {2 * u1 * u3 + 2 * u0 * u2, 2 * u2 * u3 - 2 * u0 * u1, u3 * u3 - u2 * u2 - u1 * u1 + u0 * u0}}};
}

ImVector3 apply(const Mat3& m, const ImVector3& v) {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

UnitQuaternion nu(const ImVector3& v) {
    const double r = v.norm();
    if (r == 0.0) throw DomainError("nu of the zero vector");
    const double yz = v.y * v.y + v.z * v.z;
    // |v| + x, rewritten for x < 0 so it does not cancel
    const double s = v.x >= 0 ? r + v.x : yz / (r - v.x);
    if (s == 0.0) return UnitQuaternion::trusted(Quaternion::j());
    return UnitQuaternion::normalized({0, s, v.y, v.z});
}

bool independent(const ImVector3& v1, const ImVector3& v2, double eps) {
    return v1.cross(v2).norm() > eps * v1.norm() * v2.norm();
}

UnitQuaternion mu(const ImVector3& v1, const ImVector3& v2, const Tolerances& tol) {
    if (!independent(v1, v2, tol.independence))
        throw DegenerateInputError("mu: linearly dependent imaginary vectors");
    const Quaternion n = nu(v1);
    // conj(n) v2 n = c1 + c2 j; rotate about i by half the phase of c2
    const Quaternion w = conjugate_by(v2.quat(), n);
    const std::complex<double> c2 = w.c2();
    const std::complex<double> half = std::sqrt(c2 / std::abs(c2));
    const Quaternion m = n * Quaternion(half.real(), half.imag(), 0, 0);
    return UnitQuaternion::normalized(m).canonical_sign();
}

std::string StratumTag::str() const {
    switch (kind) {
        case Kind::ZR: return "Z_R";
        case Kind::ZC: return "Z_C(" + std::to_string(i) + ")";
        case Kind::Zij: return "Z(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::PC: return "P_C";
        case Kind::Pj: return "P(" + std::to_string(j) + ")";
    }
    return "?";
}

StratumTag StratumTag::parse(const std::string& s) {
    static const std::regex zc(R"(Z_C\((\d+)\))"), zij(R"(Z\((\d+),(\d+)\))"), pj(R"(P\((\d+)\))");
    std::smatch m;
    if (s == "Z_R") return {Kind::ZR, 0, 0};
    if (s == "P_C") return {Kind::PC, 0, 0};
    if (std::regex_match(s, m, zc)) return {Kind::ZC, std::stoi(m[1]), 0};
    if (std::regex_match(s, m, zij)) return {Kind::Zij, std::stoi(m[1]), std::stoi(m[2])};
    if (std::regex_match(s, m, pj)) return {Kind::Pj, 0, std::stoi(m[1])};
    throw UsageError("unknown stratum tag: " + s);
}

std::vector<Quaternion> conjugate_all(const std::vector<Quaternion>& v, const Quaternion& m) {
    std::vector<Quaternion> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(conjugate_by(q, m));
    return out;
}

double max_dist(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    if (a.size() != b.size()) return INFINITY;
    double d = 0;
    for (size_t t = 0; t < a.size(); ++t) d = std::max(d, dist(a[t], b[t]));
    return d;
}

RotationNormalized rotation_normalize_vector(const std::vector<Quaternion>& v, const Tolerances& tol) {
    if (v.empty()) throw UsageError("rotation_normalize_vector: empty input");
    const size_t len = v.size();
    auto gap = [&](size_t t) { return tol.stratum * (1.0 + v[t].abs()); };

    size_t i = 0;
    while (i < len && v[i].im().abs() <= gap(i)) ++i;

    RotationNormalized out;
    if (i == len) {
        out.rotation = UnitQuaternion();
        out.stratum = {StratumTag::Kind::ZR, 0, 0};
        for (const auto& q : v) out.values.push_back(Quaternion(q.a0));
        return out;
    }

    const ImVector3 vi = ImVector3::of(v[i]);
    const double ri = vi.norm();
    const ImVector3 u{vi.x / ri, vi.y / ri, vi.z / ri};
    size_t j = i + 1;
    while (j < len && u.cross(ImVector3::of(v[j])).norm() <= gap(j)) ++j;

    if (j == len) {
        out.rotation = nu(vi);
        out.stratum = i == 0 ? StratumTag{StratumTag::Kind::PC, 0, 0}
                             : StratumTag{StratumTag::Kind::ZC, int(i + 1), 0};
    } else {
        out.rotation = mu(vi, ImVector3::of(v[j]), tol);
        out.stratum = i == 0 ? StratumTag{StratumTag::Kind::Pj, 0, int(j + 1)}
                             : StratumTag{StratumTag::Kind::Zij, int(i + 1), int(j + 1)};
    }
    out.values = conjugate_all(v, out.rotation);

    // clear components that vanish on the stratum
    for (size_t t = 0; t < len; ++t) {
        Quaternion& q = out.values[t];
        if (t < i) {
            q = Quaternion(q.a0);
        } else if (t < j) {
            q.a2 = q.a3 = 0;
        } else if (t == j) {
            q.a3 = 0;
        }
    }
    return out;
}

}  // namespace qhm
