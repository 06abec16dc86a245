#ifndef BOXIKIT_BOUNDS_HPP
#define BOXIKIT_BOUNDS_HPP

#include <functional>
#include <string>
#include <vector>

#include "boxikit/rational.hpp"

namespace boxikit {

/// m_1 + ... + m_{d-1} for non-decreasing m (0 when d = 1): the dimension
/// the cube construction achieves.  Unsorted input is an error; sorting is
/// the caller's duty.
long long upperBound(const std::vector<int>& m);

/// The alternating-sum lower bound for non-decreasing m, d >= 2:
/// m_1 for d = 2; (m_1 + m_3 + ... + m_{d-2}) + m_{d-1} for odd d;
/// (m_2 + m_4 + ... + m_{d-2}) + m_{d-1} for even d.
long long lowerBound(const std::vector<int>& m);

/// m_1 f(d) + (m_2 - m_1) f(d-1) + ... + (m_{d-1} - m_{d-2}) f(2), where
/// f(s) is a lower bound for the boxicity of the order complex of the
/// s-dimensional hypercube.  With f(s) = ceil(s/2) this equals lowerBound.
long long generalLowerBound(const std::vector<int>& m,
                            const std::function<long long(int)>& f);

struct ComparisonQuantities {
    long long eq1; ///< s * sum(a_i): dimension-times-chain bound
    long long eq2; ///< eq1 * ceil(log2 of the divisor count)
    Rational eq3;  ///< s/2: the dimension-halving lower bound
};

/// The three reference quantities the new bounds are measured against,
/// evaluated from the exponent list of n.
ComparisonQuantities comparisonQuantities(const std::vector<int>& exponents);

struct BoundReport {
    std::vector<int> m;
    long long lower = 0; ///< 0 when d = 1
    long long upper = 0;
    long long generalLower = 0;
    long long eq1 = 0;
    long long eq2 = 0;
    Rational eq3;
    long long chain = 0; ///< longest chain: sum(m) + 1
};

/// Evaluates every bound for non-decreasing m.
BoundReport boundReport(const std::vector<int>& m);

/// One piece of the lower-bound witness: an induced subgraph of TCC(m)
/// isomorphic to the truncated hypercube closure of the given order.
struct WitnessComponent {
    std::vector<std::string> vertices; ///< tuple labels inside TCC(m)
    int hypercubeOrder;                ///< s' with component == TC*(H_{s'})
    int level;                         ///< the k of the lifted copy {k-1, k}
};

struct WitnessDecomposition {
    std::vector<WitnessComponent> components;
    bool componentsVerified = false; ///< each component matched its hypercube
    bool joinVerified = false;       ///< all cross pairs adjacent, parts disjoint
};

/// Extracts the disjoint lifted-hypercube family whose join realizes the
/// lower bound: m_1 copies of TC*(H_d) plus, for each ascent m_l < m_{l+1},
/// m_{l+1} - m_l copies of TC*(H_{d-l}).  Verifies disjointness, the join
/// property and each component's structure before returning.
WitnessDecomposition extractWitness(const std::vector<int>& m);

/// The crown witness inside the full hypercube closure: weight-1 tuples A,
/// weight-(s-1) tuples B, matched by bitwise complement; A u B induces the
/// crown graph K_{s,s} minus a perfect matching.
struct CrownWitness {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::vector<std::pair<std::string, std::string>> matching;
};

/// Requires s >= 3.  Asserts the induced subgraph is the crown graph.
CrownWitness extractCrown(int s);

} // namespace boxikit

#endif
