#pragma once

#include <vector>

#include "qhm/gram.hpp"
#include "qhm/hform.hpp"
#include "qhm/quat.hpp"

namespace qhm {

// <p2,p1><p3,p2><p1,p3>
Quaternion triple_product(const HVector& p1, const HVector& p2, const HVector& p3);

// arccos(Re(-T) / |T|) for three distinct null points, in [0, pi/2]
double cartan_invariant(const HVector& p1, const HVector& p2, const HVector& p3, const Tolerances& tol = {});

// g_ii = 0, g_{i-1,i} = 1, g_13 = -e^{-i alpha}
struct SemiNormalizedGram {
    GramMatrix G;
    double alpha = 0;
};

struct SemiNormalization {
    std::vector<Quaternion> D;
    SemiNormalizedGram gram;
};

SemiNormalization semi_normalize(const Tuple& p, const Tolerances& tol = {});

// (g13, g14, g24, g15, g25, g35, ...): strictly above the superdiagonal, column by column
std::vector<Quaternion> gram_to_vector(const GramMatrix& G);
GramMatrix vector_to_gram(const std::vector<Quaternion>& v);
// m with (m-1)(m-2)/2 = t; throws UsageError otherwise
int boundary_size_from_length(size_t t);

bool validate_boundary_vector(const std::vector<Quaternion>& v, int n, const Tolerances& tol = {});

struct BoundaryCoordinate {
    int m = 0;
    StratumTag stratum;
    std::vector<Quaternion> v;
};

BoundaryCoordinate boundary_coordinate(const Tuple& p, const Tolerances& tol = {});

// max over entries of |a - b| / (1 + max(|a|, |b|))
double coordinate_distance(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b);

bool same_coordinate(const BoundaryCoordinate& a, const BoundaryCoordinate& b, const Tolerances& tol = {});
bool congruent_boundary(const Tuple& p, const Tuple& q, const Tolerances& tol = {});

}  // namespace qhm
