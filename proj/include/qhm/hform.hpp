#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhm/qmatrix.hpp"
#include "qhm/quat.hpp"
#include "qhm/tolerances.hpp"

namespace qhm {

enum class Model { Ball, Siegel };

std::string to_string(Model m);
Model parse_model(const std::string& s);

// Column vector in H^{n,1}; scalars act on the right.
struct HVector {
    std::vector<Quaternion> entries;
    Model model = Model::Ball;

    HVector() = default;
    HVector(std::vector<Quaternion> e, Model m = Model::Ball) : entries(std::move(e)), model(m) {}

    static HVector basis(int n, int a, Model m = Model::Ball);
    static HVector zero(int n, Model m = Model::Ball);

    int dim() const { return int(entries.size()); }
    int n() const { return dim() - 1; }
    double euclidean_norm() const;

    HVector operator*(const Quaternion& s) const;
    HVector operator+(const HVector& o) const;
    HVector operator-(const HVector& o) const;
};

using Tuple = std::vector<HVector>;

// <z, w> = w* J z
Quaternion herm(const HVector& z, const HVector& w);

QMatrix form_matrix(int n, Model m);

enum class PointClass { Negative, Null, Positive };
std::string to_string(PointClass c);

PointClass classify(const HVector& z, const Tolerances& tol = {});

// (z1, z_mid, z_{n+1}) -> ((z1 + z_{n+1})/sqrt2, z_mid, (z1 - z_{n+1})/sqrt2); an involution
QMatrix cayley_matrix(int n);
HVector cayley(const HVector& z);          // ball -> Siegel
HVector cayley_inverse(const HVector& z);  // Siegel -> ball
HVector to_model(const HVector& z, Model m);
Tuple to_model(const Tuple& p, Model m);

struct Isometry {
    QMatrix matrix;
    Model model = Model::Ball;

    int n() const { return matrix.rows() - 1; }
    HVector operator()(const HVector& z) const;
    Tuple operator()(const Tuple& p) const;
    Isometry inverse() const;
    static Isometry identity(int n, Model m = Model::Ball);
};

Isometry operator*(const Isometry& a, const Isometry& b);

Isometry cayley_isometry(const Isometry& g);  // ball -> Siegel
Isometry to_model(const Isometry& g, Model m);

// Frobenius norm of g* J g - J
double verify_isometry(const Isometry& g);

Isometry random_isometry(int n, std::uint64_t seed, Model m = Model::Ball);
Isometry random_isometry(int n, std::mt19937_64& rng, Model m = Model::Ball);

// Siegel-model stabilizer of z_inf:
//   [[lambda, gamma*, s], [0, U, beta], [0, 0, mu]]
struct GInfinity {
    Quaternion lambda{1.0}, mu{1.0}, s{0.0};
    std::vector<Quaternion> gamma, beta;
    QMatrix U;

    int n() const { return U.rows() + 1; }
    Isometry to_isometry() const;
    // largest violation of the defining relations
    double defect() const;
};

GInfinity random_g_infinity(int n, std::mt19937_64& rng);

// g p_i = q_i for J-orthonormal positive frames of equal length m <= n
Isometry map_orthonormal_frames(const Tuple& p, const Tuple& q, const Tolerances& tol = {});

// Same, for frames with entries of norm +1 or -1 (at most one -1) in matching order.
Isometry map_signed_frames(const Tuple& p, const Tuple& q, const Tolerances& tol = {});

Tuple orthogonal_complement_basis(const HVector& z, const Tolerances& tol = {});

// Siegel-model F with F z_inf = z, for z null in the Siegel model
Isometry frame_at_null(const HVector& z, const Tolerances& tol = {});

// distance from the point [z] to the hyperplane polar to p
double dist_point_to_hyperplane(const HVector& z, const HVector& p, const Tolerances& tol = {});

struct PairConfiguration {
    enum class Kind { Intersecting, Asymptotic, Ultraparallel };
    Kind kind = Kind::Intersecting;
    double t = 0;
    double angle = 0;     // Intersecting
    double distance = 0;  // Ultraparallel
    std::optional<HVector> null_fibre;  // Asymptotic
};

std::string to_string(PairConfiguration::Kind k);

PairConfiguration pair_configuration(const HVector& p1, const HVector& p2, const Tolerances& tol = {});
double pair_moduli(const HVector& p1, const HVector& p2, const Tolerances& tol = {});

// min over lambda of |a - b lambda| / |a|
double projective_deviation(const HVector& a, const HVector& b);

struct PairIsometry {
    Isometry g;
    double image_deviation = 0;
    double isometry_defect = 0;
};

// Builds g with g p_i ~ q_i from frames attached to each pair. Returns nothing when
// the two frames have different signature; otherwise reports how well g works.
std::optional<PairIsometry> pair_congruence_isometry(const HVector& p1, const HVector& p2,
                                                     const HVector& q1, const HVector& q2,
                                                     const Tolerances& tol = {});

}  // namespace qhm
