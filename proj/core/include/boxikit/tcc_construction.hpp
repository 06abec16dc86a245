#ifndef BOXIKIT_TCC_CONSTRUCTION_HPP
#define BOXIKIT_TCC_CONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxikit/box_representation.hpp"
#include "boxikit/families.hpp"
#include "boxikit/graph.hpp"

namespace boxikit {

/// One recursion level of the cube construction.  Level s (2-based) adds
/// type2Dims new dimensions of common interval length S on top of the
/// type1Dims dimensions copied unchanged from the deeper levels.
struct TraceLevel {
    int level;         ///< recursion depth s, from 2 upward
    std::int64_t S;    ///< sum of the bounds handled by deeper levels
    int type1Dims;     ///< dimensions copied from level s-1
    int type2Dims;     ///< new dimensions introduced at this level
};

struct ConstructionTrace {
    std::vector<TraceLevel> perLevel;
    /// True when the input was a single complete graph (d < 2) and the
    /// 0-dimensional representation was returned instead of running the
    /// recursion.
    bool completeGraphFallback = false;
};

struct TccRepresentation {
    BoxRepresentation rep;
    ConstructionTrace trace;
};

/// Cube representation of buildTCC(m) with dimension sum(m) - max(m).
///
/// The recursion consumes the coordinate positions ordered by bound,
/// largest first (ties by position), so the largest exponent lands in the
/// 0-dimensional base case and the resulting dimension matches the tight
/// m_1 + ... + m_{d-1} count for non-decreasing m.  Each level s assigns,
/// for 1 <= a <= a_s, the interval [|x|, S+|x|] to vertices whose level
/// coordinate is below a and [|x|-S, |x|] to the rest, where |x| sums the
/// deeper coordinates.  Verifies exactly against buildTCC(m) before
/// returning.
TccRepresentation tccCubeRepresentation(const std::vector<int>& m);

enum class MismatchKind { MissingEdge, SpuriousEdge };

struct VerifyResult {
    bool ok = false;
    /// First offending pair in canonical vertex order, when not ok.
    std::optional<std::pair<std::string, std::string>> pair;
    MismatchKind kind = MismatchKind::MissingEdge;
};

/// Exact edge-set comparison of g against the intersection graph of rep.
VerifyResult verifyRepresentation(const LabeledGraph& g, const BoxRepresentation& rep);

/// Scales each dimension by the reciprocal of its recorded unit length so
/// every interval gets length 1; all-degenerate dimensions are dropped.
/// The intersection graph is re-derived and must be unchanged.
BoxRepresentation normalizeToUnit(const BoxRepresentation& rep);

/// Shifts each dimension so its leftmost endpoint is 0 (display aid; the
/// intersection graph is unaffected by per-dimension translation).
BoxRepresentation translateToOrigin(const BoxRepresentation& rep);

/// Gives every element of Z_n the box of its equivalence class in the
/// reduced power graph.  The input must verify against
/// buildReducedPowerGraphCyclic(n); the output verifies against
/// buildPowerGraphCyclic(n) and keeps the input dimension.
BoxRepresentation liftToPowerGraph(std::int64_t n, const BoxRepresentation& repReduced);

/// Verified representation of buildDivisorGraph(n): the cube construction on
/// the sorted exponents of n, transported along the divisor -> exponent-tuple
/// isomorphism.
TccRepresentation representationForDivisorGraph(std::int64_t n);

/// Verified representation of buildPowerGraphCyclic(n): the divisor-graph
/// representation lifted through the order classes.
TccRepresentation representationForPowerGraphCyclic(std::int64_t n);

} // namespace boxikit

#endif
