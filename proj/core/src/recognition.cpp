#include "boxikit/recognition.hpp"

#include <vector>

namespace boxikit {

namespace {

// Connected components of g restricted to the vertices where alive[v] is true.
// Returns a component id per vertex (-1 for dead vertices).
std::vector<int> componentsAvoiding(const LabeledGraph& g, const std::vector<bool>& alive) {
    const int n = g.vertexCount();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (!alive[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (alive[static_cast<std::size_t>(u)] && comp[static_cast<std::size_t>(u)] < 0 &&
                    g.adjacent(v, u)) {
                    comp[static_cast<std::size_t>(u)] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

} // namespace

bool isChordal(const LabeledGraph& g) {
    const int n = g.vertexCount();
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int round = 0; round < n; ++round) {
        int found = -1;
        for (int v = 0; v < n && found < 0; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            // v is simplicial iff its surviving neighbors form a clique.
            bool simplicial = true;
            for (int a = 0; a < n && simplicial; ++a) {
                if (removed[static_cast<std::size_t>(a)] || !g.adjacent(v, a)) continue;
                for (int b = a + 1; b < n && simplicial; ++b) {
                    if (removed[static_cast<std::size_t>(b)] || !g.adjacent(v, b)) continue;
                    if (!g.adjacent(a, b)) simplicial = false;
                }
            }
            if (simplicial) found = v;
        }
        if (found < 0) return false;
        removed[static_cast<std::size_t>(found)] = true;
    }
    return true;
}

bool isAsteroidalTripleFree(const LabeledGraph& g) {
    const int n = g.vertexCount();
    if (n < 3) return true;
    // comp_avoiding[z][v]: component of v in g minus N[z].
    std::vector<std::vector<int>> comp_avoiding(static_cast<std::size_t>(n));
    for (int z = 0; z < n; ++z) {
        std::vector<bool> alive(static_cast<std::size_t>(n), true);
        alive[static_cast<std::size_t>(z)] = false;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(z, u)) alive[static_cast<std::size_t>(u)] = false;
        comp_avoiding[static_cast<std::size_t>(z)] = componentsAvoiding(g, alive);
    }
    auto connectedAvoiding = [&](int x, int y, int z) {
        const auto& comp = comp_avoiding[static_cast<std::size_t>(z)];
        return comp[static_cast<std::size_t>(x)] >= 0 &&
               comp[static_cast<std::size_t>(x)] == comp[static_cast<std::size_t>(y)];
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                if (connectedAvoiding(x, y, z) && connectedAvoiding(y, z, x) &&
                    connectedAvoiding(x, z, y))
                    return false;
            }
        }
    return true;
}

bool hasInducedClaw(const LabeledGraph& g) {
    const int n = g.vertexCount();
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c]))
                        return true;
            }
    }
    return false;
}

bool isIntervalGraph(const LabeledGraph& g) {
    return isChordal(g) && isAsteroidalTripleFree(g);
}

bool isUnitIntervalGraph(const LabeledGraph& g) {
    return isIntervalGraph(g) && !hasInducedClaw(g);
}

} // namespace boxikit
