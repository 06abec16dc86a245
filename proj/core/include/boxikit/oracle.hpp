#ifndef BOXIKIT_ORACLE_HPP
#define BOXIKIT_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "boxikit/graph.hpp"

namespace boxikit {

enum class OracleMode { Boxicity, Cubicity };

struct OracleConfig {
    int maxNonEdges = 18; ///< instances with more non-edges are refused
    int maxK = 24;        ///< answers above this are reported, not computed
    OracleMode mode = OracleMode::Boxicity;

    /// Engineering ceiling on maxNonEdges; the subset enumeration is 2^N.
    static constexpr int kHardNonEdgeCeiling = 24;
};

/// A set of non-edges of a base graph whose addition produces an interval
/// (or unit interval) supergraph.
struct CompletionSet {
    std::vector<VertexPair> added; ///< index pairs, i < j, sorted
};

/// All inclusion-minimal completion sets: subsets S of non-edges such that
/// g + S is an interval graph (mode Boxicity) or unit interval graph
/// (mode Cubicity) and no proper subset of S is.  Sorted by size, then
/// lexicographically.  Throws CapacityError past maxNonEdges.
std::vector<CompletionSet> intervalCompletions(const LabeledGraph& g, OracleMode mode,
                                               int maxNonEdges = OracleConfig{}.maxNonEdges);

struct OracleResult {
    /// Minimum k, present unless the answer exceeded maxK.
    std::optional<int> value;
    /// k completions whose supergraphs intersect to exactly g; the
    /// lexicographically smallest cover by completion index.
    std::vector<CompletionSet> certificate;
    bool exceededMaxK = false;
};

/// Exact boxicity with certificate: minimum number of interval completions
/// whose broken non-edge sets cover every non-edge.  Complete graphs give 0.
OracleResult exactBoxicity(const LabeledGraph& g, const OracleConfig& config = {});

/// Exact cubicity: same search over unit interval completions.
OracleResult exactCubicity(const LabeledGraph& g, const OracleConfig& config = {});

/// Pipeline report tying the cube construction (upper bound), the bound
/// formulas (lower bound) and, when feasible, the oracle (exact value)
/// together for TCC(m).
struct CertifyReport {
    std::vector<int> m;
    long long lower = 0; ///< 0 when d = 1 (complete graph)
    long long upper = 0;
    int constructionDimension = 0;
    bool constructionVerified = false;
    std::optional<int> exactBoxicity;
    std::optional<int> exactCubicity;
    std::string oracleStatus; ///< "exact" or "skipped: oracle-infeasible"
    bool sandwichHolds = false;    ///< lower <= box <= cub <= upper (when exact)
    bool exactEqualsUpper = false; ///< box = cub = upper, checked when d <= 3
};

/// Requires non-decreasing m.  Oracle capacity problems degrade the report
/// to "skipped: oracle-infeasible" instead of failing.
CertifyReport certifyRepresentationOptimal(const std::vector<int>& m,
                                           const OracleConfig& config = {});

} // namespace boxikit

#endif
