#ifndef BOXIKIT_TEST_HELPERS_HPP
#define BOXIKIT_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "boxikit/graph.hpp"

namespace boxikit::testing {

inline std::vector<std::string> letters(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

inline LabeledGraph complete(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return LabeledGraph(letters(n), edges);
}

inline LabeledGraph path(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return LabeledGraph(letters(n), edges);
}

inline LabeledGraph cycle(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return LabeledGraph(letters(n), edges);
}

inline LabeledGraph edgeless(int n) { return LabeledGraph(letters(n), {}); }

/// Star K_{1,k}: vertex 0 is the center.
inline LabeledGraph star(int k) {
    std::vector<VertexPair> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return LabeledGraph(letters(k + 1), edges);
}

inline LabeledGraph completeMinusEdges(int n, const std::vector<VertexPair>& missing) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool skip = false;
            for (auto [a, b] : missing)
                if ((a == i && b == j) || (a == j && b == i)) skip = true;
            if (!skip) edges.emplace_back(i, j);
        }
    return LabeledGraph(letters(n), edges);
}

/// Graph on n vertices from an edge bitmask over the pairs (i,j), i < j,
/// in lexicographic order; lets tests sweep every labeled graph of a size.
inline LabeledGraph fromEdgeMask(int n, unsigned mask) {
    std::vector<VertexPair> edges;
    unsigned bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return LabeledGraph(letters(n), edges);
}

inline LabeledGraph randomGraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return LabeledGraph(letters(n), edges);
}

namespace detail {

// Backtracking over vertex orderings: extends a prefix while the interval
// ordering property (u < v < w, uw edge => uv edge; unit also => vw edge)
// still holds for the newly placed vertex.
inline bool orderingSearch(const LabeledGraph& g, bool unit, std::vector<int>& order,
                           std::vector<bool>& used) {
    const int n = g.vertexCount();
    if (static_cast<int>(order.size()) == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        bool fits = true;
        for (std::size_t a = 0; a < order.size() && fits; ++a) {
            if (!g.adjacent(order[a], w)) continue;
            for (std::size_t b = a + 1; b < order.size() && fits; ++b) {
                if (!g.adjacent(order[a], order[b])) fits = false;
                if (unit && fits && !g.adjacent(order[b], w)) fits = false;
            }
        }
        if (!fits) continue;
        order.push_back(w);
        used[static_cast<std::size_t>(w)] = true;
        if (orderingSearch(g, unit, order, used)) return true;
        order.pop_back();
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

} // namespace detail

/// Independent interval-graph oracle: exhaustive search for a left-endpoint
/// ordering.  Exponential; intended for graphs of at most ~8 vertices.
inline bool intervalByOrderingSearch(const LabeledGraph& g) {
    std::vector<int> order;
    std::vector<bool> used(static_cast<std::size_t>(g.vertexCount()), false);
    return detail::orderingSearch(g, false, order, used);
}

/// Independent unit-interval oracle: exhaustive search for a proper
/// (two-sided umbrella-free) ordering.
inline bool unitIntervalByOrderingSearch(const LabeledGraph& g) {
    std::vector<int> order;
    std::vector<bool> used(static_cast<std::size_t>(g.vertexCount()), false);
    return detail::orderingSearch(g, true, order, used);
}

} // namespace boxikit::testing

#endif
