#include <doctest.h>

#include <random>

#include "boxikit/box_representation.hpp"
#include "boxikit/families.hpp"
#include "boxikit/graph.hpp"
#include "boxikit/isomorphism.hpp"
#include "boxikit/recognition.hpp"
#include "test_helpers.hpp"

using namespace boxikit;
namespace th = boxikit::testing;

TEST_CASE("graph construction invariants") {
    LabeledGraph g(th::letters(3), {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edgeCount() == 2); // duplicate collapsed
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(LabeledGraph(th::letters(2), {{0, 0}}), InputError);
    CHECK_THROWS_AS(LabeledGraph({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(LabeledGraph(th::letters(2), {{0, 5}}), InputError);
}

TEST_CASE("intersectionGraph") {
    LabeledGraph k3 = th::complete(3);
    CHECK(intersectionGraph({k3}).sameEdges(k3)); // single-graph intersection is identity

    LabeledGraph a = th::completeMinusEdges(4, {{0, 1}});
    LabeledGraph b = th::completeMinusEdges(4, {{2, 3}});
    LabeledGraph both = intersectionGraph({a, b});
    CHECK(both.sameEdges(th::completeMinusEdges(4, {{0, 1}, {2, 3}})));

    LabeledGraph renamed({"x", "v1", "v2", "v3"}, {});
    CHECK_THROWS_WITH_AS(intersectionGraph({a, renamed}), doctest::Contains("x"), InputError);
    CHECK_THROWS_AS(intersectionGraph({}), InputError);
}

TEST_CASE("representationToGraph") {
    SUBCASE("k = 0 means complete") {
        std::unordered_map<std::string, std::vector<Interval>> boxes{
            {"a", {}}, {"b", {}}, {"c", {}}};
        BoxRepresentation rep(0, {"a", "b", "c"}, boxes);
        CHECK(representationToGraph(rep).edgeCount() == 3);
    }
    SUBCASE("the TCC(1,1) interval assignment gives K4 minus one edge") {
        std::unordered_map<std::string, std::vector<Interval>> boxes{
            {"(0,0)", {Interval(Rational(0), Rational(1))}},
            {"(1,0)", {Interval(Rational(1), Rational(2))}},
            {"(0,1)", {Interval(Rational(-1), Rational(0))}},
            {"(1,1)", {Interval(Rational(0), Rational(1))}}};
        BoxRepresentation rep(1, {"(0,0)", "(0,1)", "(1,0)", "(1,1)"}, boxes);
        LabeledGraph g = representationToGraph(rep);
        CHECK(g.edgeCount() == 5);
        CHECK_FALSE(g.adjacentLabels("(1,0)", "(0,1)"));
    }
    SUBCASE("disjoint in one dimension breaks the edge") {
        std::unordered_map<std::string, std::vector<Interval>> boxes{
            {"a", {Interval(Rational(0), Rational(1)), Interval(Rational(0), Rational(1))}},
            {"b", {Interval(Rational(2), Rational(3)), Interval(Rational(0), Rational(1))}}};
        BoxRepresentation rep(2, {"a", "b"}, boxes);
        CHECK(representationToGraph(rep).edgeCount() == 0);
    }
    SUBCASE("coverage mismatch is an input error") {
        std::unordered_map<std::string, std::vector<Interval>> boxes{{"a", {}}};
        BoxRepresentation rep(0, {"a"}, boxes);
        CHECK_THROWS_AS(representationToGraph(rep, {"a", "b"}), InputError);
    }
}

TEST_CASE("interval recognition on the named graphs") {
    CHECK(isIntervalGraph(th::path(4)));
    CHECK_FALSE(isIntervalGraph(th::cycle(4)));
    CHECK_FALSE(isIntervalGraph(th::cycle(6)));
    CHECK(isUnitIntervalGraph(th::path(4)));
    CHECK_FALSE(isUnitIntervalGraph(th::star(3))); // the claw itself
    CHECK(isUnitIntervalGraph(th::completeMinusEdges(4, {{0, 1}})));
    CHECK(isIntervalGraph(th::complete(5)));
    CHECK(isIntervalGraph(th::edgeless(4)));
    // C6 also fails the independent ordering search.
    CHECK_FALSE(th::intervalByOrderingSearch(th::cycle(6)));
    CHECK(th::unitIntervalByOrderingSearch(th::completeMinusEdges(4, {{0, 1}})));
}

TEST_CASE("recognition agrees with the exhaustive ordering oracle") {
    SUBCASE("every labeled graph on up to 5 vertices") {
        for (int n = 1; n <= 5; ++n) {
            unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
            for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
                LabeledGraph g = th::fromEdgeMask(n, mask);
                CAPTURE(n);
                CAPTURE(mask);
                REQUIRE(isIntervalGraph(g) == th::intervalByOrderingSearch(g));
                REQUIRE(isUnitIntervalGraph(g) == th::unitIntervalByOrderingSearch(g));
            }
        }
    }
    SUBCASE("random graphs on 6 and 7 vertices") {
        std::mt19937 rng(987654);
        for (int trial = 0; trial < 300; ++trial) {
            int n = 6 + trial % 2;
            double p = 0.2 + 0.15 * (trial % 5);
            LabeledGraph g = th::randomGraph(n, p, rng);
            CAPTURE(trial);
            REQUIRE(isIntervalGraph(g) == th::intervalByOrderingSearch(g));
            REQUIRE(isUnitIntervalGraph(g) == th::unitIntervalByOrderingSearch(g));
        }
    }
}

TEST_CASE("inducedSubgraph") {
    CHECK(inducedSubgraph(th::complete(4), {"v0", "v1", "v2"}).sameEdges(th::complete(3)));
    LabeledGraph g = th::cycle(5);
    CHECK(inducedSubgraph(g, g.labels()).sameEdges(g));
    CHECK_THROWS_AS(inducedSubgraph(g, {"nope"}), InputError);

    // The non-uniform tuples of TCC(1,1,1) induce a 6-cycle.
    LabeledGraph tcc = buildTCC({1, 1, 1});
    std::vector<std::string> middle;
    for (const std::string& l : tcc.labels())
        if (l != "(0,0,0)" && l != "(1,1,1)") middle.push_back(l);
    LabeledGraph ring = inducedSubgraph(tcc, middle);
    CHECK(ring.vertexCount() == 6);
    CHECK(ring.edgeCount() == 6);
    CHECK(areIsomorphic(ring, th::cycle(6)).has_value());
}

TEST_CASE("joinGraphs") {
    CHECK(joinGraphs({th::complete(1), LabeledGraph({"w0"}, {})}).edgeCount() == 1);
    LabeledGraph pair1(th::letters(2), {});
    LabeledGraph pair2({"w0", "w1"}, {});
    LabeledGraph j = joinGraphs({pair1, pair2});
    CHECK(j.vertexCount() == 4);
    CHECK(j.edgeCount() == 4);
    CHECK(areIsomorphic(j, th::cycle(4)).has_value());
    CHECK_THROWS_AS(joinGraphs({pair1, pair1}), InputError);
}

TEST_CASE("universal vertices") {
    CHECK(universalVertices(th::complete(4)).size() == 4);
    CHECK(universalVertices(th::cycle(5)).empty());
    LabeledGraph tc3 = buildTCHypercube(3, false);
    std::vector<std::string> uni = universalVertices(tc3);
    REQUIRE(uni.size() == 2);
    CHECK(uni[0] == "(0,0,0)");
    CHECK(uni[1] == "(1,1,1)");
    LabeledGraph stripped = stripUniversal(tc3);
    CHECK(stripped.sameEdges(buildTCHypercube(3, true)));
}

TEST_CASE("isomorphism search") {
    CHECK(areIsomorphic(th::cycle(4), joinGraphs({LabeledGraph({"x0", "x1"}, {}),
                                                  LabeledGraph({"y0", "y1"}, {})}))
              .has_value());
    CHECK_FALSE(areIsomorphic(th::cycle(4), th::path(4)).has_value());

    auto witness = areIsomorphic(buildDivisorGraph(12), buildTCC({1, 2}));
    REQUIRE(witness.has_value());
    CHECK(isIsomorphismMap(buildDivisorGraph(12), buildTCC({1, 2}), *witness));

    // Same degree sequence, not isomorphic: C6 vs 2 triangles.
    LabeledGraph triangles(th::letters(6), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(areIsomorphic(th::cycle(6), triangles).has_value());

    CHECK_THROWS_AS(areIsomorphic(th::cycle(6), th::cycle(6), 5), CapacityError);
    CHECK_THROWS_AS(areIsomorphic(buildTCC({3, 3, 3, 3}), buildTCC({3, 3, 3, 3})), CapacityError);
}

TEST_CASE("isomorphism is symmetric") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 60; ++trial) {
        LabeledGraph a = th::randomGraph(6, 0.4, rng);
        LabeledGraph b = th::randomGraph(6, 0.4, rng);
        bool forward = areIsomorphic(a, b).has_value();
        bool backward = areIsomorphic(b, a).has_value();
        CAPTURE(trial);
        REQUIRE(forward == backward);
    }
    // Also on pairs that are isomorphic by construction (shuffled labels).
    for (int trial = 0; trial < 40; ++trial) {
        LabeledGraph a = th::randomGraph(7, 0.5, rng);
        std::vector<int> perm(7);
        for (int i = 0; i < 7; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> labels(7);
        for (int i = 0; i < 7; ++i)
            labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = "w" + std::to_string(i);
        std::vector<VertexPair> edges;
        for (auto [u, v] : a.edges())
            edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        LabeledGraph b(labels, edges);
        auto witness = areIsomorphic(a, b);
        REQUIRE(witness.has_value());
        REQUIRE(isIsomorphismMap(a, b, *witness));
        REQUIRE(areIsomorphic(b, a).has_value());
    }
}
