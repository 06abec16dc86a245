#include "boxikit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "boxikit/bounds.hpp"
#include "boxikit/recognition.hpp"
#include "boxikit/tcc_construction.hpp"

namespace boxikit {

namespace {

// Bitmask adjacency mirror of the public recognition routines for graphs of
// at most 32 vertices; the oracle calls these inside the 2^N subset loop.
// test_oracle.cpp pins their agreement with recognition.hpp.
struct FastGraph {
    int n = 0;
    std::uint32_t adj[32] = {};

    static FastGraph from(const LabeledGraph& g) {
        FastGraph f;
        f.n = g.vertexCount();
        for (int i = 0; i < f.n; ++i)
            for (int j = 0; j < f.n; ++j)
                if (i != j && g.adjacent(i, j)) f.adj[i] |= std::uint32_t{1} << j;
        return f;
    }

    void addEdge(int u, int v) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }

    std::uint32_t allMask() const {
        return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    }

    bool chordal() const {
        std::uint32_t alive = allMask();
        for (int round = 0; round < n; ++round) {
            int found = -1;
            for (int v = 0; v < n && found < 0; ++v) {
                if (!(alive >> v & 1)) continue;
                std::uint32_t nb = adj[v] & alive;
                bool simplicial = true;
                for (std::uint32_t rest = nb; rest && simplicial;) {
                    int a = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (nb & ~adj[a] & ~(std::uint32_t{1} << a)) simplicial = false;
                }
                if (simplicial) found = v;
            }
            if (found < 0) return false;
            alive &= ~(std::uint32_t{1} << found);
        }
        return true;
    }

    // Component labels of the subgraph on `alive`.
    void components(std::uint32_t alive, int* comp) const {
        for (int i = 0; i < n; ++i) comp[i] = -1;
        int next = 0;
        for (int s = 0; s < n; ++s) {
            if (!(alive >> s & 1) || comp[s] >= 0) continue;
            std::uint32_t frontier = std::uint32_t{1} << s;
            std::uint32_t seen = frontier;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                comp[v] = next;
                std::uint32_t fresh = adj[v] & alive & ~seen;
                seen |= fresh;
                frontier |= fresh;
            }
            ++next;
        }
    }

    bool asteroidalTripleFree() const {
        if (n < 3) return true;
        int comp[32][32];
        for (int z = 0; z < n; ++z) {
            std::uint32_t alive = allMask() & ~adj[z] & ~(std::uint32_t{1} << z);
            components(alive, comp[z]);
        }
        auto linked = [&](int x, int y, int z) {
            return comp[z][x] >= 0 && comp[z][x] == comp[z][y];
        };
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (adj[x] >> y & 1) continue;
                for (int z = y + 1; z < n; ++z) {
                    if ((adj[z] >> x & 1) || (adj[z] >> y & 1)) continue;
                    if (linked(x, y, z) && linked(y, z, x) && linked(x, z, y)) return false;
                }
            }
        return true;
    }

    bool clawFree() const {
        for (int v = 0; v < n; ++v) {
            std::uint32_t nb = adj[v];
            for (std::uint32_t ra = nb; ra;) {
                int a = std::countr_zero(ra);
                ra &= ra - 1;
                for (std::uint32_t rb = ra; rb;) {
                    int b = std::countr_zero(rb);
                    rb &= rb - 1;
                    if (adj[a] >> b & 1) continue;
                    std::uint32_t rc = rb & ~adj[a] & ~adj[b];
                    if (rc) return false;
                }
            }
        }
        return true;
    }

    bool interval() const { return chordal() && asteroidalTripleFree(); }
    bool unitInterval() const { return interval() && clawFree(); }
};

std::vector<VertexPair> maskToPairs(std::uint32_t mask, const std::vector<VertexPair>& nonEdges) {
    std::vector<VertexPair> out;
    for (std::uint32_t rest = mask; rest;) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        out.push_back(nonEdges[static_cast<std::size_t>(bit)]);
    }
    return out;
}

// Minimal feasible completion masks, ascending by popcount then value.
std::vector<std::uint32_t> minimalCompletionMasks(const LabeledGraph& g, OracleMode mode,
                                                  int maxNonEdges) {
    if (maxNonEdges > OracleConfig::kHardNonEdgeCeiling)
        throw InputError("oracle: maxNonEdges may not exceed " +
                         std::to_string(OracleConfig::kHardNonEdgeCeiling));
    const std::vector<VertexPair> non_edges = g.nonEdges();
    const int ne = static_cast<int>(non_edges.size());
    if (ne > maxNonEdges)
        throw CapacityError("oracle: " + std::to_string(ne) + " non-edges exceed the cap of " +
                            std::to_string(maxNonEdges));
    if (g.vertexCount() > 32)
        throw CapacityError("oracle: more than 32 vertices");

    const FastGraph base = FastGraph::from(g);
    std::vector<std::uint32_t> minimal;
    auto dominated = [&minimal](std::uint32_t mask) {
        for (std::uint32_t m : minimal)
            if ((mask & m) == m) return true;
        return false;
    };
    auto feasible = [&](std::uint32_t mask) {
        FastGraph f = base;
        for (std::uint32_t rest = mask; rest;) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            f.addEdge(non_edges[static_cast<std::size_t>(bit)].first,
                      non_edges[static_cast<std::size_t>(bit)].second);
        }
        return mode == OracleMode::Boxicity ? f.interval() : f.unitInterval();
    };

    // Size-ascending scan; any surviving feasible mask is minimal because
    // every smaller feasible mask is already in `minimal`.
    const std::uint32_t full = ne == 0 ? 0 : (std::uint32_t{1} << ne) - 1;
    for (int size = 0; size <= ne; ++size) {
        if (size == 0) {
            if (feasible(0)) minimal.push_back(0);
            continue;
        }
        std::uint32_t mask = (std::uint32_t{1} << size) - 1;
        while (mask <= full) {
            if (!dominated(mask) && feasible(mask)) minimal.push_back(mask);
            // Gosper's hack: next mask with the same popcount.
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            if (r > full || r < mask) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (!minimal.empty() && minimal.front() == 0) break; // already interval
    }
    return minimal;
}

struct CoverSearch {
    const std::vector<std::uint32_t>& broken; // per completion, within non-edges
    std::uint32_t all;

    // Lexicographically first index cover of size exactly k, if any.
    bool firstCover(int k, std::uint32_t covered, int from, std::vector<int>& chosen,
                    const std::vector<std::uint32_t>& suffixUnion) const {
        if (covered == all) return true;
        if (k == 0) return false;
        for (int i = from; i + k <= static_cast<int>(broken.size()); ++i) {
            if ((covered | suffixUnion[static_cast<std::size_t>(i)]) != all) break;
            if ((broken[static_cast<std::size_t>(i)] & ~covered) == 0) continue; // adds nothing
            chosen.push_back(i);
            if (firstCover(k - 1, covered | broken[static_cast<std::size_t>(i)], i + 1, chosen,
                           suffixUnion))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

OracleResult exactSearch(const LabeledGraph& g, const OracleConfig& config) {
    const std::vector<VertexPair> non_edges = g.nonEdges();
    OracleResult result;
    if (non_edges.empty()) {
        result.value = 0;
        return result;
    }

    std::vector<std::uint32_t> completions =
        minimalCompletionMasks(g, config.mode, config.maxNonEdges);
    const std::uint32_t full = (std::uint32_t{1} << non_edges.size()) - 1;
    std::vector<std::uint32_t> broken;
    broken.reserve(completions.size());
    for (std::uint32_t mask : completions) broken.push_back(full & ~mask);

    std::vector<std::uint32_t> suffix_union(broken.size() + 1, 0);
    for (int i = static_cast<int>(broken.size()) - 1; i >= 0; --i)
        suffix_union[static_cast<std::size_t>(i)] =
            suffix_union[static_cast<std::size_t>(i) + 1] | broken[static_cast<std::size_t>(i)];

    CoverSearch search{broken, full};
    for (int k = 1; k <= config.maxK; ++k) {
        std::vector<int> chosen;
        if (search.firstCover(k, 0, 0, chosen, suffix_union)) {
            result.value = k;
            for (int i : chosen)
                result.certificate.push_back(
                    CompletionSet{maskToPairs(completions[static_cast<std::size_t>(i)], non_edges)});
            // Certificate soundness: the supergraphs must intersect to g.
            std::vector<LabeledGraph> supergraphs;
            for (const CompletionSet& c : result.certificate)
                supergraphs.push_back(g.withAddedEdges(c.added));
            if (!intersectionGraph(supergraphs).sameEdges(g))
                throw std::logic_error("oracle: certificate failed the intersection cross-check");
            return result;
        }
    }
    result.exceededMaxK = true;
    return result;
}

} // namespace

std::vector<CompletionSet> intervalCompletions(const LabeledGraph& g, OracleMode mode,
                                               int maxNonEdges) {
    std::vector<VertexPair> non_edges = g.nonEdges();
    std::vector<CompletionSet> out;
    for (std::uint32_t mask : minimalCompletionMasks(g, mode, maxNonEdges))
        out.push_back(CompletionSet{maskToPairs(mask, non_edges)});
    return out;
}

OracleResult exactBoxicity(const LabeledGraph& g, const OracleConfig& config) {
    OracleConfig boxConfig = config;
    boxConfig.mode = OracleMode::Boxicity;
    return exactSearch(g, boxConfig);
}

OracleResult exactCubicity(const LabeledGraph& g, const OracleConfig& config) {
    OracleConfig cubConfig = config;
    cubConfig.mode = OracleMode::Cubicity;
    return exactSearch(g, cubConfig);
}

CertifyReport certifyRepresentationOptimal(const std::vector<int>& m, const OracleConfig& config) {
    if (!std::is_sorted(m.begin(), m.end()))
        throw InputError("certifyRepresentationOptimal: exponents must be non-decreasing");
    CertifyReport report;
    report.m = m;
    const int d = static_cast<int>(m.size());
    report.upper = upperBound(m);
    report.lower = d >= 2 ? lowerBound(m) : 0;

    LabeledGraph graph = buildTCC(m);
    TccRepresentation rep = tccCubeRepresentation(m);
    report.constructionDimension = rep.rep.dimension();
    report.constructionVerified = verifyRepresentation(graph, rep.rep).ok;

    try {
        OracleResult box = exactBoxicity(graph, config);
        OracleResult cub = exactCubicity(graph, config);
        if (!box.value || !cub.value) {
            report.oracleStatus = "skipped: oracle-infeasible";
            return report;
        }
        report.exactBoxicity = box.value;
        report.exactCubicity = cub.value;
        report.oracleStatus = "exact";
        report.sandwichHolds = report.lower <= *box.value && *box.value <= *cub.value &&
                               *cub.value <= report.upper;
        if (d <= 3)
            report.exactEqualsUpper = *box.value == report.upper && *cub.value == report.upper;
    } catch (const CapacityError&) {
        report.oracleStatus = "skipped: oracle-infeasible";
    }
    return report;
}

} // namespace boxikit
