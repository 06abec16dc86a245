#include <doctest.h>

#include <random>

#include "boxikit/bounds.hpp"
#include "boxikit/families.hpp"
#include "boxikit/oracle.hpp"
#include "boxikit/recognition.hpp"
#include "test_helpers.hpp"

using namespace boxikit;
namespace th = boxikit::testing;

TEST_CASE("intervalCompletions") {
    SUBCASE("C4: the two single-diagonal completions") {
        std::vector<CompletionSet> completions =
            intervalCompletions(th::cycle(4), OracleMode::Boxicity);
        REQUIRE(completions.size() == 2);
        CHECK(completions[0].added.size() == 1);
        CHECK(completions[1].added.size() == 1);
    }
    SUBCASE("an interval graph: the single empty completion") {
        std::vector<CompletionSet> completions =
            intervalCompletions(th::path(5), OracleMode::Boxicity);
        REQUIRE(completions.size() == 1);
        CHECK(completions[0].added.empty());
    }
    SUBCASE("the claw needs non-empty completions in cubicity mode") {
        std::vector<CompletionSet> completions =
            intervalCompletions(th::star(3), OracleMode::Cubicity);
        REQUIRE_FALSE(completions.empty());
        for (const CompletionSet& c : completions) CHECK_FALSE(c.added.empty());
    }
    SUBCASE("capacity error past the cap") {
        CHECK_THROWS_AS(intervalCompletions(buildCrown(5), OracleMode::Boxicity, 18),
                        CapacityError);
    }
}

TEST_CASE("exact boxicity/cubicity on the named graphs") {
    CHECK(exactBoxicity(th::complete(5)).value == 0);
    CHECK(exactCubicity(th::complete(4)).value == 0);
    CHECK(exactBoxicity(th::cycle(4)).value == 2);
    CHECK(exactCubicity(th::path(4)).value == 1);
    CHECK(exactBoxicity(th::star(3)).value == 1);
    CHECK(exactCubicity(th::star(3)).value == 2); // claw: interval but not unit interval

    LabeledGraph tcc22 = buildTCC({2, 2});
    CHECK(exactBoxicity(tcc22).value == 2);
    CHECK(exactCubicity(tcc22).value == 2);
}

TEST_CASE("oracle agreement with recognition on small graphs") {
    std::mt19937 rng(24680);
    auto check = [](const LabeledGraph& g) {
        OracleResult box = exactBoxicity(g);
        OracleResult cub = exactCubicity(g);
        REQUIRE(box.value.has_value());
        REQUIRE(cub.value.has_value());
        REQUIRE((*box.value <= 1) == isIntervalGraph(g));
        REQUIRE((*cub.value <= 1) == isUnitIntervalGraph(g));
        REQUIRE(*box.value <= *cub.value);
    };
    for (int n = 1; n <= 4; ++n) {
        unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) check(th::fromEdgeMask(n, mask));
    }
    for (int trial = 0; trial < 120; ++trial) {
        LabeledGraph g = th::randomGraph(6 + trial % 3, 0.55 + 0.1 * (trial % 4), rng);
        if (g.nonEdges().size() > 16) continue;
        check(g);
    }
}

TEST_CASE("certificates intersect back to the graph") {
    std::mt19937 rng(11223);
    for (int trial = 0; trial < 60; ++trial) {
        LabeledGraph g = th::randomGraph(7, 0.6, rng);
        if (g.nonEdges().size() > 14) continue;
        OracleResult result = exactBoxicity(g);
        REQUIRE(result.value.has_value());
        if (*result.value == 0) continue;
        std::vector<LabeledGraph> supergraphs;
        for (const CompletionSet& c : result.certificate) {
            for (auto [u, v] : c.added) REQUIRE_FALSE(g.adjacent(u, v));
            LabeledGraph super = g.withAddedEdges(c.added);
            REQUIRE(isIntervalGraph(super));
            supergraphs.push_back(super);
        }
        REQUIRE(static_cast<int>(supergraphs.size()) == *result.value);
        REQUIRE(intersectionGraph(supergraphs).sameEdges(g));
    }
}

TEST_CASE("join additivity") {
    LabeledGraph k1 = th::complete(1);
    LabeledGraph k2 = th::complete(2);
    LabeledGraph twoK1 = th::edgeless(2);
    LabeledGraph p3 = th::path(3);
    LabeledGraph c4 = th::cycle(4);
    std::vector<std::pair<LabeledGraph, int>> parts{
        {k1, 0}, {k2, 0}, {twoK1, 1}, {p3, 1}, {c4, 2}};
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = 0; b < parts.size(); ++b) {
            // Disjoint label copies.
            std::vector<std::string> left, right;
            for (const std::string& l : parts[a].first.labels()) left.push_back("L" + l);
            for (const std::string& l : parts[b].first.labels()) right.push_back("R" + l);
            LabeledGraph lg(left, parts[a].first.edges());
            LabeledGraph rg(right, parts[b].first.edges());
            LabeledGraph joined = joinGraphs({lg, rg});
            if (joined.nonEdges().size() > 18) continue;
            OracleResult result = exactBoxicity(joined);
            CAPTURE(a);
            CAPTURE(b);
            REQUIRE(result.value.has_value());
            REQUIRE(*result.value == parts[a].second + parts[b].second);
        }
}

TEST_CASE("universal vertices do not change boxicity") {
    std::mt19937 rng(5544);
    for (int trial = 0; trial < 40; ++trial) {
        LabeledGraph g = th::randomGraph(6, 0.5, rng);
        if (g.nonEdges().size() > 15) continue;
        // Join a fresh universal vertex onto g.
        LabeledGraph withUniversal = joinGraphs({g, LabeledGraph({"hub"}, {})});
        OracleResult plain = exactBoxicity(g);
        OracleResult hubbed = exactBoxicity(withUniversal);
        OracleResult stripped = exactBoxicity(stripUniversal(withUniversal));
        REQUIRE(plain.value.has_value());
        REQUIRE(hubbed.value.has_value());
        REQUIRE(*plain.value == *hubbed.value);
        REQUIRE(*stripped.value == *plain.value);
    }
}

TEST_CASE("classical values: complete multipartite boxicity") {
    // box of a complete multipartite graph = number of parts of size >= 2.
    auto multipartite = [](const std::vector<int>& parts) {
        std::vector<std::string> labels;
        std::vector<int> part_of;
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (int i = 0; i < parts[p]; ++i) {
                labels.push_back("p" + std::to_string(p) + "_" + std::to_string(i));
                part_of.push_back(static_cast<int>(p));
            }
        std::vector<VertexPair> edges;
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = a + 1; b < labels.size(); ++b)
                if (part_of[a] != part_of[b])
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        return LabeledGraph(labels, edges);
    };
    auto expected = [](const std::vector<int>& parts) {
        int fat = 0;
        for (int p : parts)
            if (p >= 2) ++fat;
        return fat == 0 ? 0 : fat;
    };
    for (const std::vector<int>& parts :
         {std::vector<int>{2, 2}, {3, 3}, {2, 3}, {2, 2, 2}, {2, 2, 2, 2}, {1, 5},
          {1, 1, 2}, {2, 2, 3}, {1, 2, 2}}) {
        OracleResult result = exactBoxicity(multipartite(parts));
        CAPTURE(parts);
        REQUIRE(result.value.has_value());
        REQUIRE(*result.value == expected(parts));
    }
}

TEST_CASE("classical values: star cubicity is ceil(log2 of the leaf count)") {
    auto ceilLog2 = [](int x) {
        int bits = 0;
        while ((1 << bits) < x) ++bits;
        return bits;
    };
    for (int leaves = 2; leaves <= 6; ++leaves) {
        OracleResult result = exactCubicity(th::star(leaves));
        CAPTURE(leaves);
        REQUIRE(result.value.has_value());
        REQUIRE(*result.value == ceilLog2(leaves));
    }
}

TEST_CASE("boxicity is monotone under induced subgraphs") {
    std::mt19937 rng(31415);
    for (const std::vector<int>& m :
         {std::vector<int>{1, 1}, {1, 2}, {1, 3}, {2, 2}, {1, 1, 1}}) {
        LabeledGraph g = buildTCC(m);
        OracleResult whole = exactBoxicity(g);
        REQUIRE(whole.value.has_value());
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::string> keep;
            std::bernoulli_distribution coin(0.7);
            for (const std::string& label : g.labels())
                if (coin(rng)) keep.push_back(label);
            if (keep.empty()) continue;
            LabeledGraph h = inducedSubgraph(g, keep);
            if (h.nonEdges().size() > 18) continue;
            OracleResult part = exactBoxicity(h);
            CAPTURE(m);
            CAPTURE(trial);
            REQUIRE(part.value.has_value());
            REQUIRE(*part.value <= *whole.value);
        }
    }
}

TEST_CASE("crown boxicity values") {
    CHECK(exactBoxicity(buildCrown(3)).value == 2);
    CHECK(exactBoxicity(buildCrown(4)).value == 2);
}

TEST_CASE("maxK ceiling is reported, not silently truncated") {
    OracleConfig config;
    config.maxK = 1;
    OracleResult result = exactBoxicity(th::cycle(4), config);
    CHECK_FALSE(result.value.has_value());
    CHECK(result.exceededMaxK);
}

TEST_CASE("capacity errors") {
    OracleConfig config;
    config.maxNonEdges = 4;
    CHECK_THROWS_AS(exactBoxicity(th::cycle(6), config), CapacityError);
    OracleConfig huge;
    huge.maxNonEdges = 30;
    CHECK_THROWS_AS(exactBoxicity(th::cycle(6), huge), InputError); // beyond the hard ceiling
}

TEST_CASE("certifyRepresentationOptimal") {
    CertifyReport cube = certifyRepresentationOptimal({1, 1, 1});
    CHECK(cube.lower == 2);
    CHECK(cube.upper == 2);
    CHECK(cube.exactBoxicity == 2);
    CHECK(cube.exactCubicity == 2);
    CHECK(cube.oracleStatus == "exact");
    CHECK(cube.sandwichHolds);
    CHECK(cube.exactEqualsUpper);

    CertifyReport rect = certifyRepresentationOptimal({1, 2});
    CHECK(rect.lower == 1);
    CHECK(rect.upper == 1);
    CHECK(rect.exactBoxicity == 1);
    CHECK(rect.sandwichHolds);
    CHECK(rect.exactEqualsUpper);

    CertifyReport big = certifyRepresentationOptimal({1, 1, 1, 1});
    CHECK(big.lower == 2);
    CHECK(big.upper == 3);
    CHECK(big.oracleStatus == "skipped: oracle-infeasible");
    CHECK_FALSE(big.exactBoxicity.has_value());

    CertifyReport single = certifyRepresentationOptimal({3});
    CHECK(single.lower == 0);
    CHECK(single.upper == 0);
    CHECK(single.exactBoxicity == 0);
    CHECK(single.exactCubicity == 0);
    CHECK(single.sandwichHolds);

    CHECK_THROWS_AS(certifyRepresentationOptimal({2, 1}), InputError);
}
