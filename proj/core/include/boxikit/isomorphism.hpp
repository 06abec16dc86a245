#ifndef BOXIKIT_ISOMORPHISM_HPP
#define BOXIKIT_ISOMORPHISM_HPP

#include <optional>

#include "boxikit/graph.hpp"

namespace boxikit {

/// Default vertex-count ceiling for the isomorphism search.
inline constexpr int kDefaultIsomorphismCap = 64;

/// Searches for a vertex bijection g1 -> g2 preserving adjacency both ways.
/// Returns the mapping as g2-indices positioned by g1-index, or nullopt.
/// Backtracking over color classes produced by iterated degree refinement.
/// Throws CapacityError when either graph exceeds maxVertices.
std::optional<std::vector<int>> areIsomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                                              int maxVertices = kDefaultIsomorphismCap);

/// Checks that a given vertex mapping (g2-index per g1-index) is a bijection
/// preserving adjacency both ways.
bool isIsomorphismMap(const LabeledGraph& g1, const LabeledGraph& g2,
                      const std::vector<int>& map);

} // namespace boxikit

#endif
