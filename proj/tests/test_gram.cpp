#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qhm/boundary_moduli.hpp"
#include "qhm/errors.hpp"
#include "qhm/gram.hpp"
#include "qhm/sampling.hpp"

using namespace qhm;

static Tuple example_triple() {
    return {HVector({0, 1, 0}), HVector({2, 1, 2}), HVector({3, 1, 3})};
}

static QMatrix ones(int m) {
    QMatrix g(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g(a, b) = 1.0;
    return g;
}

TEST_CASE("Gram matrices") {
    CHECK(max_dist(gram({HVector::basis(2, 0), HVector::basis(2, 1)}), GramMatrix(QMatrix::identity(2))) == 0.0);
    CHECK(max_dist(gram(example_triple()), GramMatrix(ones(3))) <= 1e-15);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        Tuple p;
        for (int k = 0; k < 4; ++k) p.push_back(random_positive(3, rng));
        const GramMatrix G = gram(p);
        // oracle: entry by entry through the complex representation
        const Eigen::MatrixXcd O = oracle::gram_adjoint(p);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(dist(G(a, b), oracle::quat(O.block(2 * a, 2 * b, 2, 2))) <= 1e-12);
        const Isometry g = random_isometry(3, rng);
        CHECK(max_dist(gram(g(p)), G) <= 1e-9 * G.max_abs());
        const auto D = random_diagonal(4, rng);
        CHECK(max_dist(gram(rescale(p, D)), rescale(G, D)) <= 1e-12 * G.max_abs() * 16);
    }
    QMatrix bad = QMatrix::identity(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(GramMatrix{bad}, UsageError);
}

TEST_CASE("permutations") {
    std::mt19937_64 rng(32);
    Tuple p;
    for (int k = 0; k < 4; ++k) p.push_back(random_positive(3, rng));
    const GramMatrix G = gram(p);
    std::vector<int> s(4);
    std::iota(s.begin(), s.end(), 0);
    CHECK(max_dist(permute(G, s), G) == 0.0);
    do {
        CHECK(max_dist(permute(G, s), gram(permute(p, s))) <= 1e-12);
        const QMatrix T = permutation_matrix(s);
        CHECK(max_dist(T * permute(G, s).matrix() * T.adjoint(), G.matrix()) <= 1e-12);
    } while (std::next_permutation(s.begin(), s.end()));
    const std::vector<int> a{1, 0, 2, 3}, b{0, 2, 3, 1};
    std::vector<int> ab(4);
    for (int k = 0; k < 4; ++k) ab[k] = a[b[k]];
    CHECK(max_dist(permute(permute(G, a), b), permute(G, ab)) == 0.0);
    CHECK_THROWS_AS(permute(G, {0, 0, 1, 2}), UsageError);
    CHECK_THROWS_AS(permute(G, {0, 1, 2}), UsageError);
}

TEST_CASE("inertia") {
    for (int n = 1; n <= 4; ++n) {
        const Inertia in = inertia(GramMatrix(form_matrix(n, Model::Ball)));
        CHECK(in == Inertia{n, 1, 0});
    }
    CHECK(inertia(GramMatrix(ones(3))) == Inertia{1, 0, 2});
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        const Tuple p = random_boundary_tuple(3, 2 + t % 4, rng);
        const Inertia in = inertia(gram(p));
        CHECK(in.n_minus == 1);
        const oracle::Signature s = oracle::eigen_signature(oracle::gram_adjoint(p), 1e-9);
        CHECK(s.plus == in.n_plus);
        CHECK(s.minus == in.n_minus);
    }
}

TEST_CASE("Sylvester stability and block additivity") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 100; ++t) {
        Tuple p;
        for (int k = 0; k < 4; ++k) p.push_back(k % 2 ? random_positive(3, rng) : random_null(3, rng));
        const GramMatrix G = gram(p);
        QMatrix S(4, 4);
        for (int a = 0; a < 4; ++a) {
            S(a, a) = random_diagonal(1, rng)[0];
            for (int b = a + 1; b < 4; ++b) S(a, b) = random_quaternion(rng) * 0.3;
        }
        const GramMatrix H(S.adjoint() * G.matrix() * S);
        CHECK(inertia(H) == inertia(G));

        QMatrix sum(7, 7);
        const GramMatrix A = gram({random_positive(2, rng), random_negative(2, rng), random_null(2, rng)});
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) sum(a, b) = G(a, b);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) sum(4 + a, 4 + b) = A(a, b);
        const Inertia i1 = inertia(G), i2 = inertia(A), i3 = inertia(GramMatrix(sum));
        CHECK(i3 == Inertia{i1.n_plus + i2.n_plus, i1.n_minus + i2.n_minus, i1.n_zero + i2.n_zero});
    }
}

TEST_CASE("congruence diagonalization") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 100; ++t) {
        const Tuple p = t % 2 ? random_boundary_tuple(3, 5, rng) : random_positive_regular(3, 5, rng, Model::Ball, true);
        const GramMatrix G = gram(p);
        const CongruenceReduction cr = congruence_diagonalize(G);
        std::vector<Quaternion> d(cr.d.begin(), cr.d.end());
        const QMatrix back = cr.M.adjoint() * QMatrix::diagonal(d) * cr.M;
        CHECK(max_dist(GramMatrix(back), G) <= 1e-9 * (1 + G.max_abs()));
    }
}

TEST_CASE("realization") {
    // identity: orthogonal positive vectors
    const Tuple id = realize(GramMatrix(QMatrix::identity(2)), 2);
    CHECK(classify(id[0]) == PointClass::Positive);
    CHECK(herm(id[0], id[1]).abs() <= 1e-15);

    // all ones: parabolic triple
    const Tuple par = realize(GramMatrix(ones(3)), 2);
    CHECK(max_dist(gram(par), GramMatrix(ones(3))) <= 1e-12);
    CHECK(span_dimension(par) == 2);

    // semi-normalized boundary Gram with alpha = pi/4
    for (double alpha : {std::numbers::pi / 4, std::numbers::pi / 3}) {
        QMatrix g(3, 3);
        g(0, 1) = g(1, 2) = 1.0;
        g(0, 2) = -Quaternion(std::cos(alpha), -std::sin(alpha), 0, 0);
        const GramMatrix G = GramMatrix::from_upper(g);
        const Tuple p = realize(G, 2);
        CHECK(max_dist(gram(p), G) <= 1e-9);
        CHECK(cartan_invariant(p[0], p[1], p[2]) == doctest::Approx(alpha).epsilon(1e-10));
    }

    QMatrix n2 = QMatrix::identity(3);
    n2(1, 1) = n2(2, 2) = -1.0;
    try {
        realize(GramMatrix(n2), 2);
        FAIL("expected a realization error");
    } catch (const RealizationError& e) {
        CHECK(e.condition() == "n₋ ≤ 1");
    }
    try {
        realize(GramMatrix(QMatrix::identity(3)), 2);
        FAIL("expected a realization error");
    } catch (const RealizationError& e) {
        CHECK(e.condition() == "n₊ ≤ n");
    }
    // two coincident positive points
    try {
        realize(GramMatrix(ones(2)), 1);
        FAIL("expected a realization error");
    } catch (const RealizationError& e) {
        CHECK(e.condition() == "n₊ ≤ n−1 (parabolic span)");
    }
}

TEST_CASE("span dimension and the inertia sandwich") {
    CHECK(span_dimension(example_triple()) == 2);
    CHECK(span_dimension({HVector::basis(3, 0), HVector::basis(3, 1), HVector::basis(3, 2)}) == 3);
    std::mt19937_64 rng(36);
    for (int t = 0; t < 200; ++t) {
        Tuple p;
        const int m = 2 + t % 4;
        for (int k = 0; k < m; ++k) p.push_back(k % 3 == 0 ? random_null(3, rng) : random_positive(3, rng));
        const Inertia in = inertia(gram(p));
        const int k = span_dimension(p) - 1;
        CHECK(k <= in.n_plus + in.n_minus);
        CHECK(in.n_plus + in.n_minus <= k + 1);
    }
}
