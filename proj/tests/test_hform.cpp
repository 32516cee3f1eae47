#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qhm/errors.hpp"
#include "qhm/gram.hpp"
#include "qhm/hform.hpp"
#include "qhm/sampling.hpp"

using namespace qhm;

static HVector ball(std::vector<Quaternion> e) { return HVector(std::move(e), Model::Ball); }
static HVector siegel(std::vector<Quaternion> e) { return HVector(std::move(e), Model::Siegel); }

TEST_CASE("herm matches the complex-adjoint oracle") {
    std::mt19937_64 rng(21);
    for (Model m : {Model::Ball, Model::Siegel})
        for (int t = 0; t < 100; ++t) {
            HVector z(std::vector<Quaternion>(4), m), w(std::vector<Quaternion>(4), m);
            for (auto& q : z.entries) q = random_quaternion(rng);
            for (auto& q : w.entries) q = random_quaternion(rng);
            CHECK(dist(herm(z, w), oracle::herm(z, w)) <= 1e-12);
            CHECK(dist(herm(w, z), herm(z, w).conj()) <= 1e-12);
            CHECK(herm(z, z).im().abs() <= 1e-12);
            const Quaternion l = random_quaternion(rng), n = random_quaternion(rng);
            CHECK(dist(herm(z * l, w * n), n.conj() * herm(z, w) * l) <= 1e-11);
        }
    CHECK(herm(HVector::basis(2, 0), HVector::basis(2, 0)) == Quaternion(1.0));
    CHECK(herm(HVector::basis(2, 0, Model::Siegel), HVector::basis(2, 0, Model::Siegel)) == Quaternion(0.0));
    CHECK_THROWS_AS(herm(HVector::basis(2, 0), HVector::basis(3, 0)), UsageError);
    CHECK_THROWS_AS(herm(HVector::basis(2, 0), HVector::basis(2, 0, Model::Siegel)), UsageError);
}

TEST_CASE("classification") {
    CHECK(classify(ball({0, 1, 0})) == PointClass::Positive);
    CHECK(classify(ball({1, 0, 1})) == PointClass::Null);
    CHECK(classify(ball({0, 0, 1})) == PointClass::Negative);
    CHECK_THROWS_AS(classify(ball({0, 0, 0})), DomainError);
    CHECK(classify(ball({1, 0, 1}) * Quaternion(0, 3, 1, 0)) == PointClass::Null);
}

TEST_CASE("Cayley transform") {
    std::mt19937_64 rng(22);
    const HVector z = ball({1, 0, 1});
    CHECK(classify(cayley(z)) == PointClass::Null);
    for (int t = 0; t < 10000; ++t) {
        HVector a(std::vector<Quaternion>(3)), b(std::vector<Quaternion>(3));
        for (auto& q : a.entries) q = random_quaternion(rng);
        for (auto& q : b.entries) q = random_quaternion(rng);
        const double s = 1 + a.euclidean_norm() * b.euclidean_norm();
        REQUIRE(dist(herm(cayley(a), cayley(b)), herm(a, b)) <= 1e-10 * s);
        if (t < 100) {
            const HVector r = cayley_inverse(cayley(a));
            for (int k = 0; k < 3; ++k) CHECK(dist(r.entries[k], a.entries[k]) <= 1e-12 * s);
        }
    }
    const Isometry g = random_isometry(3, 5);
    CHECK(verify_isometry(cayley_isometry(g)) <= 1e-9);
    CHECK(cayley_isometry(g).model == Model::Siegel);
}

TEST_CASE("isometries") {
    CHECK(verify_isometry(Isometry::identity(3)) == 0.0);
    const Quaternion m = UnitQuaternion::normalized({1, 2, 3, 4});
    CHECK(verify_isometry({QMatrix::diagonal({m, m, m}), Model::Ball}) <= 1e-15);
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Isometry g = random_isometry(n, seed);
            CHECK(verify_isometry(g) <= 1e-9 * (n + 1));
            CHECK(max_dist(g.inverse().matrix * g.matrix, QMatrix::identity(n + 1)) <= 1e-9);
            const Isometry h = random_isometry(n, seed);
            CHECK(max_dist(g.matrix, h.matrix) == 0.0);
            for (PointClass c : {PointClass::Null, PointClass::Positive, PointClass::Negative}) {
                const HVector z = c == PointClass::Null       ? random_null(n, rng)
                                  : c == PointClass::Positive ? random_positive(n, rng)
                                                              : random_negative(n, rng);
                CHECK(classify(g(z)) == c);
            }
        }
    Isometry bad = random_isometry(2, 1);
    bad.matrix(0, 0) += 0.01;
    CHECK(verify_isometry(bad) > 1e-3);
}

TEST_CASE("stabilizer of z_inf") {
    std::mt19937_64 rng(24);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 20; ++t) {
            const GInfinity g = random_g_infinity(n, rng);
            CHECK(g.defect() <= 1e-9);
            const Isometry iso = g.to_isometry();
            CHECK(verify_isometry(iso) <= 1e-9);
            const HVector zi = iso(HVector::basis(n, 0, Model::Siegel));
            for (int k = 1; k <= n; ++k) CHECK(zi.entries[k].abs() <= 1e-12);
        }
}

TEST_CASE("frames") {
    std::mt19937_64 rng(25);
    for (int n = 2; n <= 4; ++n) {
        const Isometry g = random_isometry(n, rng), h = random_isometry(n, rng);
        Tuple p, q;
        for (int k = 0; k < n; ++k) {
            p.push_back(g(HVector::basis(n, k)));
            q.push_back(h(HVector::basis(n, k)));
        }
        const Isometry f = map_orthonormal_frames(p, q);
        CHECK(verify_isometry(f) <= 1e-9);
        for (int k = 0; k < n; ++k)
            for (int a = 0; a <= n; ++a) CHECK(dist(f(p[k]).entries[a], q[k].entries[a]) <= 1e-9);
        const Isometry f1 = map_orthonormal_frames({p[0]}, {q[1]});
        CHECK(projective_deviation(f1(p[0]), q[1]) <= 1e-9);
    }
    CHECK_THROWS_AS(map_orthonormal_frames({ball({1, 0, 0})}, {ball({2, 0, 0})}), DomainError);
}

TEST_CASE("orthogonal complements") {
    const Tuple s = orthogonal_complement_basis(HVector::basis(3, 0, Model::Siegel));
    REQUIRE(s.size() == 3);
    CHECK(projective_deviation(s[0], HVector::basis(3, 0, Model::Siegel)) <= 1e-15);
    CHECK(projective_deviation(s[1], HVector::basis(3, 1, Model::Siegel)) <= 1e-15);
    CHECK(projective_deviation(s[2], HVector::basis(3, 2, Model::Siegel)) <= 1e-15);
    const Tuple b = orthogonal_complement_basis(HVector::basis(3, 3));
    REQUIRE(b.size() == 3);
    for (const auto& v : b) CHECK(classify(v) == PointClass::Positive);
    std::mt19937_64 rng(26);
    for (int t = 0; t < 60; ++t) {
        const HVector z = t % 3 == 0 ? random_null(3, rng) : t % 3 == 1 ? random_positive(3, rng) : random_negative(3, rng);
        const Tuple c = orthogonal_complement_basis(z);
        REQUIRE(c.size() == 3);
        int pos = 0, neg = 0;
        for (const auto& v : c) {
            CHECK(herm(v, z).abs() <= 1e-10 * v.euclidean_norm() * z.euclidean_norm());
            const PointClass k = classify(v);
            pos += k == PointClass::Positive;
            neg += k == PointClass::Negative;
        }
        CHECK(span_dimension(c) == 3);
        if (t % 3 == 0) CHECK(pos == 2);
        if (t % 3 == 1) CHECK((pos == 2 && neg == 1));
        if (t % 3 == 2) CHECK(pos == 3);
    }
}

TEST_CASE("frame at a null vector") {
    std::mt19937_64 rng(27);
    for (int t = 0; t < 20; ++t) {
        const HVector z = random_null(3, rng, Model::Siegel);
        const Isometry F = frame_at_null(z);
        CHECK(verify_isometry(F) <= 1e-9);
        CHECK(projective_deviation(F(HVector::basis(3, 0, Model::Siegel)), z) <= 1e-9);
    }
}

TEST_CASE("distance to a hyperplane") {
    const HVector p = ball({0, 1, 0});
    CHECK(dist_point_to_hyperplane(ball({0, 0, 1}), p) <= 1e-12);
    const Quaternion q(0.3, 0.1, -0.2, 0.4);
    const double c2 = 1 + q.norm2() / (1 - q.norm2());
    const double rho = dist_point_to_hyperplane(ball({0, q, 1}), p);
    CHECK(std::pow(std::cosh(rho / 2), 2) == doctest::Approx(c2).epsilon(1e-12));
    const Isometry g = random_isometry(2, 3);
    CHECK(dist_point_to_hyperplane(g(ball({0, q, 1})), g(p)) == doctest::Approx(rho).epsilon(1e-9));
    CHECK_THROWS_AS(dist_point_to_hyperplane(p, p), DomainError);
}

TEST_CASE("pairs of positive points") {
    const HVector p1 = ball({0, 1, 0});
    const auto orth = pair_configuration(p1, ball({1, 0, 0}));
    CHECK(orth.kind == PairConfiguration::Kind::Intersecting);
    CHECK(orth.angle == doctest::Approx(std::numbers::pi / 2));
    const auto asym = pair_configuration(p1, ball({2, 1, 2}));
    CHECK(asym.kind == PairConfiguration::Kind::Asymptotic);
    REQUIRE(asym.null_fibre);
    CHECK(classify(*asym.null_fibre) == PointClass::Null);
    CHECK(projective_deviation(*asym.null_fibre, ball({1, 0, 1})) <= 1e-12);
    // t = cosh 1: (0, cosh1, sinh1) has norm 1 and product cosh 1 with p1
    const auto ultra = pair_configuration(p1, ball({0, std::cosh(1.0), std::sinh(1.0)}));
    CHECK(ultra.kind == PairConfiguration::Kind::Ultraparallel);
    CHECK(ultra.distance == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(pair_configuration(p1, p1 * Quaternion(0, 1, 1, 0)), DegenerateInputError);
    CHECK(pair_moduli(p1, ball({1, 0, 0})) == 0.0);
    std::mt19937_64 rng(28);
    for (int t = 0; t < 50; ++t) {
        const HVector a = random_positive(3, rng), b = random_positive(3, rng);
        const Isometry g = random_isometry(3, rng);
        CHECK(pair_moduli(g(a) * random_quaternion(rng), g(b)) == doctest::Approx(pair_moduli(a, b)).epsilon(1e-10));
    }
}
