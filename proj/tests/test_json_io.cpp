#include <random>

#include "doctest.h"
#include "qhm/errors.hpp"
#include "qhm/json_io.hpp"
#include "qhm/sampling.hpp"

using namespace qhm;

template <class T>
static T round_trip(const T& x) {
    return json::parse(json(x).dump()).get<T>();
}

TEST_CASE("quaternions and points") {
    const Quaternion q(0.1, -2, 3e-17, 1e300);
    CHECK(round_trip(q) == q);
    CHECK(json(2.5).get<Quaternion>() == Quaternion(2.5));
    CHECK_THROWS_AS(json::parse("[1,2,3]").get<Quaternion>(), UsageError);
    CHECK_THROWS_AS(json::parse("\"x\"").get<Quaternion>(), UsageError);
    const HVector v({1, Quaternion(0, 1, 2, 3), 4}, Model::Siegel);
    const HVector w = round_trip(v);
    CHECK(w.model == Model::Siegel);
    CHECK(w.entries == v.entries);
}

TEST_CASE("tuples") {
    const Tuple p = tuple_from_json(json::parse("[[0,1,0],[2,1,2]]"), Model::Ball);
    CHECK(p.size() == 2);
    CHECK(p[1].entries[0] == Quaternion(2.0));
    const Tuple s = tuple_from_json(json::parse(R"({"model":"siegel","points":[[0,1,0]]})"));
    CHECK(s[0].model == Model::Siegel);
    CHECK_THROWS_AS(tuple_from_json(json::parse("[[0,1,0],[1,2]]")), UsageError);
    CHECK_THROWS_AS(tuple_from_json(json::parse("[]")), UsageError);
    CHECK_THROWS_AS(tuple_from_json(json::parse(R"({"pts":[]})")), UsageError);
    std::mt19937_64 rng(71);
    const Tuple r = random_boundary_tuple(3, 4, rng);
    const Tuple back = tuple_from_json(tuple_to_json(r));
    for (size_t t = 0; t < r.size(); ++t) CHECK(back[t].entries == r[t].entries);
}

TEST_CASE("Gram matrices") {
    const GramMatrix G = json::parse(R"({"m":3,"entries":[[1,1,1],[1,1],[1]]})").get<GramMatrix>();
    CHECK(G(2, 0) == Quaternion(1.0));
    const GramMatrix H = json::parse(R"([[1,[0,1,0,0]],[null,2]])").get<GramMatrix>();
    CHECK(H(1, 0) == Quaternion(0, -1, 0, 0));
    CHECK_THROWS_AS(json::parse(R"([[1,2],[3,1]])").get<GramMatrix>(), UsageError);
    CHECK_THROWS_AS(json::parse(R"({"m":3,"entries":[[1,2],[2,1]]})").get<GramMatrix>(), UsageError);
    CHECK(max_dist(round_trip(G), G) == 0.0);
}

TEST_CASE("results round trip") {
    std::mt19937_64 rng(72);
    const BoundaryCoordinate bc = boundary_coordinate(random_boundary_tuple(3, 5, rng));
    const BoundaryCoordinate bc2 = round_trip(bc);
    CHECK(bc2.m == bc.m);
    CHECK(bc2.stratum == bc.stratum);
    CHECK(bc2.v == bc.v);

    for (int t = 0; t < 10; ++t) {
        const Tuple p = t % 2 ? random_positive_parabolic(3, 5, rng) : random_positive_regular(3, 5, rng, Model::Ball, true);
        const PositiveCoordinate pc = positive_coordinate(p);
        const PositiveCoordinate pc2 = round_trip(pc);
        CHECK(pc2.kind == pc.kind);
        CHECK(json(pc2) == json(pc));
        if (pc.regular) {
            CHECK(pc2.regular->structure == pc.regular->structure);
            CHECK(pc2.regular->entries == pc.regular->entries);
        } else {
            CHECK(pc2.parabolic->structure == pc.parabolic->structure);
            CHECK(pc2.parabolic->X == pc.parabolic->X);
        }
    }
    const Isometry g = random_isometry(2, rng);
    const Isometry g2 = round_trip(g);
    CHECK(max_dist(g.matrix, g2.matrix) == 0.0);
    const TriangleParams tp{1, 0.5, 0.25, 0.125};
    CHECK(round_trip(tp) == tp);
    const Inertia in{2, 1, 0};
    CHECK(round_trip(in) == in);
    // blocks are 1-based on the wire
    PartitionStructure s;
    s.blocks = {{0, 2}, {1}};
    CHECK(json(s)["blocks"] == json::parse("[[1,3],[2]]"));
    CHECK(round_trip(s) == s);
    CHECK_THROWS_AS(json::parse(R"({"kind":"regular","blocks":[[0]]})").get<PartitionStructure>(), UsageError);
}
