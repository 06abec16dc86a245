#ifndef BOXIKIT_GRAPH_HPP
#define BOXIKIT_GRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boxikit/errors.hpp"

namespace boxikit {

using VertexPair = std::pair<int, int>;

/// Finite simple undirected graph over an ordered list of distinct printable
/// labels.  Immutable after construction; the adjacency relation is kept
/// symmetric and irreflexive by the constructor.
class LabeledGraph {
public:
    LabeledGraph() = default;

    /// Edges are given as index pairs into `labels`; order and duplicates
    /// are tolerated, self-loops are rejected.
    LabeledGraph(std::vector<std::string> labels, const std::vector<VertexPair>& edges);

    int vertexCount() const { return static_cast<int>(labels_.size()); }
    std::size_t edgeCount() const { return edge_count_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// Index of a label, or -1 when absent.
    int indexOf(const std::string& label) const;

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    bool adjacentLabels(const std::string& u, const std::string& v) const;

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    /// All edges as index pairs with i < j, sorted lexicographically.
    std::vector<VertexPair> edges() const;
    /// All non-adjacent index pairs with i < j, sorted lexicographically.
    std::vector<VertexPair> nonEdges() const;

    /// Copy of this graph with the given index pairs added as edges.
    LabeledGraph withAddedEdges(std::span<const VertexPair> extra) const;

    bool sameVertexLabels(const LabeledGraph& other) const { return labels_ == other.labels_; }

    /// Exact equality: identical label list (in order) and identical edge set.
    bool sameEdges(const LabeledGraph& other) const;

    /// First pair of indices (i < j) where the adjacency relations differ,
    /// if any.  Requires identical label lists.
    std::vector<VertexPair> edgeDifference(const LabeledGraph& other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<bool>> adj_;
    std::size_t edge_count_ = 0;
};

/// Edge-set intersection of graphs over the same labeled vertex list.
LabeledGraph intersectionGraph(const std::vector<LabeledGraph>& graphs);

/// Subgraph induced by the given labels (which must all exist in g).
LabeledGraph inducedSubgraph(const LabeledGraph& g, const std::vector<std::string>& keep);

/// Disjoint union plus all cross edges; label sets must be pairwise disjoint.
LabeledGraph joinGraphs(const std::vector<LabeledGraph>& parts);

/// Labels of the vertices adjacent to every other vertex.
std::vector<std::string> universalVertices(const LabeledGraph& g);

/// g with its universal vertices removed.
LabeledGraph stripUniversal(const LabeledGraph& g);

} // namespace boxikit

#endif
