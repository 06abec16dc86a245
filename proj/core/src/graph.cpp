#include "boxikit/graph.hpp"

#include <algorithm>

namespace boxikit {

LabeledGraph::LabeledGraph(std::vector<std::string> labels,
                           const std::vector<VertexPair>& edges)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!inserted)
            throw InputError("LabeledGraph: duplicate vertex label '" + labels_[i] + "'");
    }
    adj_.assign(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= static_cast<int>(n) || v >= static_cast<int>(n))
            throw InputError("LabeledGraph: edge index out of range");
        if (u == v)
            throw InputError("LabeledGraph: self-loop at '" + labels_[static_cast<std::size_t>(u)] + "'");
        if (!adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
            adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
            ++edge_count_;
        }
    }
}

int LabeledGraph::indexOf(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

bool LabeledGraph::adjacentLabels(const std::string& u, const std::string& v) const {
    int iu = indexOf(u), iv = indexOf(v);
    if (iu < 0) throw InputError("LabeledGraph: unknown label '" + u + "'");
    if (iv < 0) throw InputError("LabeledGraph: unknown label '" + v + "'");
    return adjacent(iu, iv);
}

std::vector<int> LabeledGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < vertexCount(); ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

int LabeledGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < vertexCount(); ++u)
        if (adjacent(v, u)) ++d;
    return d;
}

std::vector<VertexPair> LabeledGraph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (int i = 0; i < vertexCount(); ++i)
        for (int j = i + 1; j < vertexCount(); ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<VertexPair> LabeledGraph::nonEdges() const {
    std::vector<VertexPair> out;
    for (int i = 0; i < vertexCount(); ++i)
        for (int j = i + 1; j < vertexCount(); ++j)
            if (!adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

LabeledGraph LabeledGraph::withAddedEdges(std::span<const VertexPair> extra) const {
    std::vector<VertexPair> all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return LabeledGraph(labels_, all);
}

bool LabeledGraph::sameEdges(const LabeledGraph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
}

std::vector<VertexPair> LabeledGraph::edgeDifference(const LabeledGraph& other) const {
    if (labels_ != other.labels_)
        throw InputError("edgeDifference: vertex lists differ");
    std::vector<VertexPair> diff;
    for (int i = 0; i < vertexCount(); ++i)
        for (int j = i + 1; j < vertexCount(); ++j)
            if (adjacent(i, j) != other.adjacent(i, j)) diff.emplace_back(i, j);
    return diff;
}

LabeledGraph intersectionGraph(const std::vector<LabeledGraph>& graphs) {
    if (graphs.empty())
        throw InputError("intersectionGraph: empty graph list");
    const LabeledGraph& first = graphs.front();
    for (const LabeledGraph& g : graphs) {
        if (g.vertexCount() != first.vertexCount())
            throw InputError("intersectionGraph: vertex count mismatch");
        for (int i = 0; i < first.vertexCount(); ++i)
            if (g.label(i) != first.label(i))
                throw InputError("intersectionGraph: mismatched vertex label '" + g.label(i) + "'");
    }
    std::vector<VertexPair> kept;
    for (int i = 0; i < first.vertexCount(); ++i) {
        for (int j = i + 1; j < first.vertexCount(); ++j) {
            bool everywhere = true;
            for (const LabeledGraph& g : graphs)
                if (!g.adjacent(i, j)) { everywhere = false; break; }
            if (everywhere) kept.emplace_back(i, j);
        }
    }
    return LabeledGraph(first.labels(), kept);
}

LabeledGraph inducedSubgraph(const LabeledGraph& g, const std::vector<std::string>& keep) {
    std::vector<int> old_index;
    old_index.reserve(keep.size());
    for (const std::string& label : keep) {
        int v = g.indexOf(label);
        if (v < 0) throw InputError("inducedSubgraph: unknown label '" + label + "'");
        old_index.push_back(v);
    }
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < old_index.size(); ++i)
        for (std::size_t j = i + 1; j < old_index.size(); ++j)
            if (g.adjacent(old_index[i], old_index[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return LabeledGraph(keep, edges);
}

LabeledGraph joinGraphs(const std::vector<LabeledGraph>& parts) {
    std::vector<std::string> labels;
    std::vector<VertexPair> edges;
    std::vector<std::pair<int, int>> ranges; // [begin, end) of each part
    for (const LabeledGraph& part : parts) {
        int offset = static_cast<int>(labels.size());
        for (const std::string& label : part.labels()) labels.push_back(label);
        for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
        ranges.emplace_back(offset, offset + part.vertexCount());
    }
    // Cross edges between distinct parts.
    for (std::size_t a = 0; a < ranges.size(); ++a)
        for (std::size_t b = a + 1; b < ranges.size(); ++b)
            for (int u = ranges[a].first; u < ranges[a].second; ++u)
                for (int v = ranges[b].first; v < ranges[b].second; ++v)
                    edges.emplace_back(u, v);
    try {
        return LabeledGraph(labels, edges);
    } catch (const InputError&) {
        throw InputError("joinGraphs: label sets are not pairwise disjoint");
    }
}

std::vector<std::string> universalVertices(const LabeledGraph& g) {
    std::vector<std::string> out;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) == g.vertexCount() - 1) out.push_back(g.label(v));
    return out;
}

LabeledGraph stripUniversal(const LabeledGraph& g) {
    std::vector<std::string> keep;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) != g.vertexCount() - 1) keep.push_back(g.label(v));
    return inducedSubgraph(g, keep);
}

} // namespace boxikit
