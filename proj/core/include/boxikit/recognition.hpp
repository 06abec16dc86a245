#ifndef BOXIKIT_RECOGNITION_HPP
#define BOXIKIT_RECOGNITION_HPP

#include "boxikit/graph.hpp"

namespace boxikit {

/// True iff g has a perfect elimination ordering (greedy simplicial-vertex
/// elimination; valid because chordality is hereditary).
bool isChordal(const LabeledGraph& g);

/// True iff no asteroidal triple exists: three pairwise non-adjacent
/// vertices such that each pair is connected by a path avoiding the
/// closed neighborhood of the third.
bool isAsteroidalTripleFree(const LabeledGraph& g);

/// True iff some vertex has three pairwise non-adjacent neighbors.
bool hasInducedClaw(const LabeledGraph& g);

/// Interval recognition via the chordal + AT-free characterization.
bool isIntervalGraph(const LabeledGraph& g);

/// Unit interval recognition: interval and claw-free.
bool isUnitIntervalGraph(const LabeledGraph& g);

} // namespace boxikit

#endif
