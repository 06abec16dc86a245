#ifndef BOXIKIT_POSET_HPP
#define BOXIKIT_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxikit/graph.hpp"

namespace boxikit {

/// Finite poset as a ground list plus its strict order, validated to be
/// irreflexive, antisymmetric and transitively closed on construction.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<std::string> ground, std::vector<std::vector<bool>> strictLess);

    int size() const { return static_cast<int>(ground_.size()); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::string& label(int i) const { return ground_[static_cast<std::size_t>(i)]; }
    int indexOf(const std::string& label) const;
    bool less(int a, int b) const { return less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    /// Unordered incomparable pairs (i < j).
    std::vector<VertexPair> incomparablePairs() const;

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<bool>> less_;
};

/// Divisibility poset on a set of distinct positive integers (sorted
/// ascending): a below b iff a divides b.
Poset divisibilityPoset(std::vector<std::int64_t> ground);

/// Edge per comparable pair.
LabeledGraph comparabilityGraph(const Poset& p);

struct LinearExtension {
    std::vector<std::string> order;
};

struct Realizer {
    std::vector<LinearExtension> extensions;
};

/// The block-concatenation realizer of the divisibility poset on the
/// divisors of n: one extension per prime p of n, concatenating the
/// "exponent of p equals j" blocks for j = 0, 1, ..., each block sorted by
/// numeric value.  n = 1 yields an empty realizer over the 1-element poset.
Realizer buildDivisibilityRealizer(std::int64_t n);

struct RealizerVerdict {
    bool ok = false;
    /// "extension-violation": some list is not a linear extension (pair +
    /// extension index set); "pair": an incomparable pair never reversed.
    std::string failure;
    std::optional<std::pair<std::string, std::string>> pair;
    std::optional<int> extensionIndex;
};

/// Checks that every extension is a linear extension of p and that every
/// incomparable pair is reversed between some two extensions.
RealizerVerdict verifyRealizer(const Poset& p, const Realizer& r);

/// All linear extensions as index orders; throws CapacityError when more
/// than cap exist.
std::vector<std::vector<int>> allLinearExtensions(const Poset& p, int cap);

inline constexpr int kDefaultExtensionCap = 5000;
inline constexpr int kDefaultDimensionCap = 8;

/// Exact poset dimension by enumerating all linear extensions and solving
/// the minimum cover of incomparable ordered pairs by exact branch and
/// bound.  A partial search never reports: exceeding either cap throws
/// CapacityError.  Chains (and the 1-element poset) have dimension 1.
int exactPosetDimension(const Poset& p, int capExtensions = kDefaultExtensionCap,
                        int capK = kDefaultDimensionCap);

/// Maximum number of pairwise comparable elements.
int longestChain(const Poset& p);

} // namespace boxikit

#endif
