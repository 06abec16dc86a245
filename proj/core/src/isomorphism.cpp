#include "boxikit/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace boxikit {

namespace {

// One round of color refinement across both graphs with a shared signature
// dictionary, so equal colors mean equal local structure in either graph.
// Returns false once the partition stabilizes.
bool refineOnce(const LabeledGraph& g1, const LabeledGraph& g2,
                std::vector<int>& c1, std::vector<int>& c2) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> dict;
    auto recolor = [&dict](const LabeledGraph& g, const std::vector<int>& old) {
        std::vector<int> fresh(old.size());
        for (int v = 0; v < g.vertexCount(); ++v) {
            std::vector<int> around;
            for (int u = 0; u < g.vertexCount(); ++u)
                if (g.adjacent(v, u)) around.push_back(old[static_cast<std::size_t>(u)]);
            std::sort(around.begin(), around.end());
            Signature sig{old[static_cast<std::size_t>(v)], std::move(around)};
            auto [it, _] = dict.emplace(std::move(sig), static_cast<int>(dict.size()));
            fresh[static_cast<std::size_t>(v)] = it->second;
        }
        return fresh;
    };
    std::vector<int> n1 = recolor(g1, c1);
    std::vector<int> n2 = recolor(g2, c2);
    bool changed = false;
    auto countColors = [](const std::vector<int>& c) {
        std::vector<int> s(c);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s.size();
    };
    if (countColors(n1) != countColors(c1)) changed = true;
    c1 = std::move(n1);
    c2 = std::move(n2);
    return changed;
}

bool colorHistogramsMatch(const std::vector<int>& c1, const std::vector<int>& c2) {
    std::vector<int> a(c1), b(c2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

struct Search {
    const LabeledGraph& g1;
    const LabeledGraph& g2;
    const std::vector<int>& color1;
    const std::vector<int>& color2;
    std::vector<int> map;   // g1 -> g2, -1 unset
    std::vector<bool> used; // g2 side

    bool consistent(int v, int w) const {
        if (color1[static_cast<std::size_t>(v)] != color2[static_cast<std::size_t>(w)]) return false;
        for (int u = 0; u < g1.vertexCount(); ++u) {
            int x = map[static_cast<std::size_t>(u)];
            if (x < 0) continue;
            if (g1.adjacent(v, u) != g2.adjacent(w, x)) return false;
        }
        return true;
    }

    // Unmapped g1 vertex with the fewest feasible g2 candidates.
    int pickNext(std::vector<int>& candidates) const {
        int best = -1;
        std::vector<int> best_cands;
        for (int v = 0; v < g1.vertexCount(); ++v) {
            if (map[static_cast<std::size_t>(v)] >= 0) continue;
            std::vector<int> cands;
            for (int w = 0; w < g2.vertexCount(); ++w)
                if (!used[static_cast<std::size_t>(w)] && consistent(v, w)) cands.push_back(w);
            if (best < 0 || cands.size() < best_cands.size()) {
                best = v;
                best_cands = std::move(cands);
                if (best_cands.empty()) break;
            }
        }
        candidates = std::move(best_cands);
        return best;
    }

    bool run() {
        std::vector<int> candidates;
        int v = pickNext(candidates);
        if (v < 0) return true; // everything mapped
        for (int w : candidates) {
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (run()) return true;
            map[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> areIsomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                                              int maxVertices) {
    if (g1.vertexCount() > maxVertices || g2.vertexCount() > maxVertices)
        throw CapacityError("areIsomorphic: graph exceeds the configured cap of " +
                            std::to_string(maxVertices) + " vertices");
    if (g1.vertexCount() != g2.vertexCount() || g1.edgeCount() != g2.edgeCount())
        return std::nullopt;
    const int n = g1.vertexCount();
    if (n == 0) return std::vector<int>{};

    std::vector<int> c1(static_cast<std::size_t>(n), 0), c2(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round)
        if (!refineOnce(g1, g2, c1, c2)) break;
    if (!colorHistogramsMatch(c1, c2)) return std::nullopt;

    Search search{g1, g2, c1, c2,
                  std::vector<int>(static_cast<std::size_t>(n), -1),
                  std::vector<bool>(static_cast<std::size_t>(n), false)};
    if (!search.run()) return std::nullopt;
    return search.map;
}

bool isIsomorphismMap(const LabeledGraph& g1, const LabeledGraph& g2,
                      const std::vector<int>& map) {
    const int n = g1.vertexCount();
    if (g2.vertexCount() != n || static_cast<int>(map.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        int w = map[static_cast<std::size_t>(v)];
        if (w < 0 || w >= n || hit[static_cast<std::size_t>(w)]) return false;
        hit[static_cast<std::size_t>(w)] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g1.adjacent(u, v) !=
                g2.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

} // namespace boxikit
