#pragma once

#include <array>
#include <optional>
#include <string>

#include "qhm/gram.hpp"
#include "qhm/hform.hpp"

namespace qhm {

// Normalized Gram [[1, r3, r2], [r3, 1, r1 e^{i alpha}], [r2, r1 e^{-i alpha}, 1]].
// alpha ranges over [0, pi]: a normalized Gram can have Re g23 < 0.
struct TriangleParams {
    double r1 = 0, r2 = 0, r3 = 0;
    double alpha = 0;

    // throws DomainError on negative r or alpha outside [0, pi]. All r = 0 is allowed here;
    // it is the identity Gram, det = 1, and triangle_exists says no.
    void validate() const;
    bool operator==(const TriangleParams&) const = default;
};

enum class TriangleClass { Parabolic111, Elliptic, HyperbolicPlanar, HyperbolicFull };
std::string to_string(TriangleClass c);

struct AngularInvariant {
    double value = 0;
    bool product_vanishes = false;  // value is pi/2 by convention, not from the product
};

AngularInvariant triangle_angular_invariant(const HVector& p1, const HVector& p2, const HVector& p3,
                                            const Tolerances& tol = {});

GramMatrix normalize_triangle(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol = {});
TriangleParams triangle_params(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol = {});
TriangleParams params_of(const GramMatrix& normalized);
GramMatrix triangle_gram(const TriangleParams& t);

double triangle_det(const TriangleParams& t);
// det <= tol, minus the det = 0 configurations that force an asymptotic pair to coincide
bool triangle_exists(const TriangleParams& t, double tol = 1e-12);

Tuple realize_triangle(const TriangleParams& t, Model model = Model::Ball, const Tolerances& tol = {});

TriangleClass classify_triangle(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol = {});

struct SideData {
    enum class Kind { Intersecting, Ideal, Ultraparallel };
    Kind kind = Kind::Intersecting;
    double angle = 0;     // Intersecting
    double distance = 0;  // Ultraparallel
};
std::string to_string(SideData::Kind k);

SideData side_data(double r, double tol = 1e-8);
std::array<SideData, 3> side_data(const TriangleParams& t, double tol = 1e-8);

}  // namespace qhm
