#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qhm/hform.hpp"
#include "qhm/quat.hpp"

namespace qhm {

// Random test data. Everything is driven by one mt19937_64 so a seed reproduces a run.

Quaternion random_quaternion(std::mt19937_64& rng);
UnitQuaternion random_unit_quaternion(std::mt19937_64& rng);
ImVector3 random_imaginary(std::mt19937_64& rng);
// moduli in [1/2, 2], directions uniform
std::vector<Quaternion> random_diagonal(int m, std::mt19937_64& rng);

HVector random_null(int n, std::mt19937_64& rng, Model model = Model::Ball);
HVector random_positive(int n, std::mt19937_64& rng, Model model = Model::Ball);
HVector random_negative(int n, std::mt19937_64& rng, Model model = Model::Ball);

Tuple random_boundary_tuple(int n, int m, std::mt19937_64& rng, Model model = Model::Ball);

// Regular positive tuple. With `structured`, points are drawn from mutually orthogonal
// coordinate subspaces (then moved by a random isometry) so that block and sub-block
// patterns show up; otherwise the points are generic.
Tuple random_positive_regular(int n, int m, std::mt19937_64& rng, Model model = Model::Ball,
                              bool structured = false);

// Parabolic positive tuple: Siegel points (k, e_i, 0) grouped into at most n-1 blocks,
// at least one block with two points, moved by a random isometry and rescaled.
Tuple random_positive_parabolic(int n, int m, std::mt19937_64& rng, Model model = Model::Ball);

}  // namespace qhm
