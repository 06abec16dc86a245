#ifndef BOXIKIT_FAMILIES_HPP
#define BOXIKIT_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "boxikit/graph.hpp"

namespace boxikit {

/// Canonical tuple label "(x1,x2,...,xs)"; edge-set equality between
/// differently constructed copies of the same family relies on it.
std::string tupleLabel(const std::vector<int>& coords);

/// All tuples 0 <= x_i <= m_i in lexicographic order.
std::vector<std::vector<int>> tupleRange(const std::vector<int>& m);

/// Componentwise comparability of distinct tuples (x <= y or x >= y).
bool tuplesComparable(const std::vector<int>& x, const std::vector<int>& y);

/// Transitive closure of the Cartesian product of the complete graphs
/// K_{m_i + 1}: vertices are the tuples of tupleRange(m), adjacent iff
/// distinct and componentwise comparable.
LabeledGraph buildTCC(const std::vector<int>& m);

/// Divisors of n (ascending decimal labels), adjacent iff one divides the other.
LabeledGraph buildDivisorGraph(std::int64_t n);

/// Power graph of the additive group Z_n: vertices "0".."n-1", adjacent iff
/// one element is an integer multiple of the other mod n, i.e. one's cyclic
/// subgroup contains the other.  Membership x in <y> tested as gcd(y,n) | x.
LabeledGraph buildPowerGraphCyclic(std::int64_t n);

struct ReducedPowerGraph {
    /// One vertex per divisor d of n, labeled by d: the class of elements of
    /// order d.  Adjacent iff the orders divide one another.
    LabeledGraph graph;
    /// classOf[x] for x in Z_n: the label of x's class, n/gcd(x,n).
    std::vector<std::string> classOf;
};

ReducedPowerGraph buildReducedPowerGraphCyclic(std::int64_t n);

/// Comparability graph of the Boolean lattice on s coordinates
/// (= buildTCC([1]*s)); truncated removes the all-zero and all-one tuples.
LabeledGraph buildTCHypercube(int s, bool truncated);

/// Non-uniform s-tuples over {k-1, k}, adjacent by componentwise comparability.
LabeledGraph buildLifted(int s, int k);

/// Complete bipartite K_{s,s} minus a perfect matching: parts a1..as / b1..bs,
/// edge {a_i, b_j} iff i != j.
LabeledGraph buildCrown(int s);

struct Factorization {
    std::vector<std::int64_t> primes; ///< ascending
    std::vector<int> exponents;       ///< aligned with primes
    std::vector<int> sortedExponents; ///< ascending
};

/// Prime factorization by trial division; n = 1 gives the empty factorization.
Factorization exponentsOf(std::int64_t n);

/// Parameterized description of a graph family, as accepted from JSON/CLI.
struct FamilySpec {
    enum class Kind {
        Tcc,
        Divisor,
        PowerCyclic,
        ReducedPowerCyclic,
        HypercubeTc,
        HypercubeTcTruncated,
        Lifted,
        Crown,
    };
    Kind kind;
    std::vector<std::int64_t> params;
};

std::string familyKindName(FamilySpec::Kind kind);
FamilySpec::Kind familyKindFromName(const std::string& name);

/// Dispatches to the family builders, validating parameter counts/ranges.
LabeledGraph buildFamily(const FamilySpec& spec);

} // namespace boxikit

#endif
