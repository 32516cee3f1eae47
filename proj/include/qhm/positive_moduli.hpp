#pragma once

#include <optional>
#include <vector>

#include "qhm/gram.hpp"
#include "qhm/hform.hpp"
#include "qhm/quat.hpp"

namespace qhm {

// unit diagonal, real nonnegative first row, g23 with Im >= 0 along i
struct OneNormalization {
    std::vector<Quaternion> D;
    GramMatrix G;
};

OneNormalization one_normalize(const GramMatrix& G, const Tolerances& tol = {});
OneNormalization one_normalize(const Tuple& p, const Tolerances& tol = {});

// Indices are 0-based in memory; the JSON form is 1-based.
struct PartitionStructure {
    enum class Kind { Parabolic, Regular };
    Kind kind = Kind::Regular;
    std::vector<std::vector<int>> blocks;
    // Regular, after block_normalize: sub-blocks of each block and their anchors
    std::vector<std::vector<std::vector<int>>> sub_blocks;
    std::vector<std::vector<int>> anchors;

    bool operator==(const PartitionStructure&) const = default;
};

std::string to_string(PartitionStructure::Kind k);

// Parabolic iff n₋ = 0 and n₊ = span_dim - 1. Without span_dim the Gram-only test is used:
// n₋ = 0 and some pair has normalized product of modulus one.
PartitionStructure detect_partition(const GramMatrix& G, int n, const Tolerances& tol = {},
                                    std::optional<int> span_dim = std::nullopt);
PartitionStructure detect_partition(const Tuple& p, const Tolerances& tol = {});

// (k_a - k_c)(k_b - k_c)^{-1}
Quaternion chi(const Quaternion& ka, const Quaternion& kb, const Quaternion& kc);

// quaternion or the point at infinity
struct ExtQuaternion {
    Quaternion q;
    bool infinite = false;
    ExtQuaternion(const Quaternion& v) : q(v) {}
    ExtQuaternion(double v) : q(v) {}
    static ExtQuaternion infinity() {
        ExtQuaternion e(0.0);
        e.infinite = true;
        return e;
    }
};

Quaternion cross_ratio(const ExtQuaternion& z1, const ExtQuaternion& z2, const ExtQuaternion& z3,
                       const ExtQuaternion& z4);

// Siegel coordinate k of every point after sending the common null fibre to z_inf and
// the block directions to e_1..e_k; the first point of each block is pinned at 0.
// `twist` composes an extra stabilizer of z_inf into the normalizing isometry.
std::vector<Quaternion> parabolic_k(const Tuple& p, const PartitionStructure& s, const Tolerances& tol = {},
                                    const GInfinity* twist = nullptr);

struct ParabolicCoordinate {
    PartitionStructure structure;
    std::vector<Quaternion> X;      // rotation-normalized, empty when no block has 3 points
    std::optional<StratumTag> stratum;
};

ParabolicCoordinate parabolic_coordinates(const Tuple& p, const Tolerances& tol = {},
                                          const GInfinity* twist = nullptr);
bool congruent_parabolic(const Tuple& p, const Tuple& q, const Tolerances& tol = {});

struct BlockNormalization {
    std::vector<Quaternion> D;
    GramMatrix G;
    PartitionStructure structure;  // with sub-blocks and anchors filled in
};

// G is 1-normalized (unit diagonal); blocks come from detect_partition
BlockNormalization block_normalize(const GramMatrix& G, const PartitionStructure& s, const Tolerances& tol = {});
BlockNormalization block_normalize(const Tuple& p, const Tolerances& tol = {});

struct RegularCoordinate {
    PartitionStructure structure;
    GramMatrix G;                      // canonical Gram matrix
    std::vector<Quaternion> entries;   // its strict upper triangle, row-major
    std::vector<StratumTag> strata;    // one per top-level block
};

RegularCoordinate regular_coordinate(const Tuple& p, const Tolerances& tol = {});

struct PositiveCoordinate {
    PartitionStructure::Kind kind = PartitionStructure::Kind::Regular;
    std::optional<ParabolicCoordinate> parabolic;
    std::optional<RegularCoordinate> regular;
};

PositiveCoordinate positive_coordinate(const Tuple& p, const Tolerances& tol = {});

bool same_coordinate(const ParabolicCoordinate& a, const ParabolicCoordinate& b, const Tolerances& tol = {});
bool same_coordinate(const RegularCoordinate& a, const RegularCoordinate& b, const Tolerances& tol = {});
bool same_coordinate(const PositiveCoordinate& a, const PositiveCoordinate& b, const Tolerances& tol = {});

bool congruent(const Tuple& p, const Tuple& q, const Tolerances& tol = {});

}  // namespace qhm
