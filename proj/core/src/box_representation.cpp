#include "boxikit/box_representation.hpp"

#include <algorithm>

namespace boxikit {

BoxRepresentation::BoxRepresentation(
    int dimension, std::vector<std::string> vertexOrder,
    std::unordered_map<std::string, std::vector<Interval>> boxes,
    std::optional<std::vector<Rational>> unitLengths)
    : dimension_(dimension),
      vertex_order_(std::move(vertexOrder)),
      boxes_(std::move(boxes)),
      unit_lengths_(std::move(unitLengths)) {
    if (dimension_ < 0) throw InputError("BoxRepresentation: negative dimension");
    if (vertex_order_.size() != boxes_.size())
        throw InputError("BoxRepresentation: vertex order and box map sizes differ");
    for (const std::string& v : vertex_order_) {
        auto it = boxes_.find(v);
        if (it == boxes_.end())
            throw InputError("BoxRepresentation: no box for vertex '" + v + "'");
        if (static_cast<int>(it->second.size()) != dimension_)
            throw InputError("BoxRepresentation: box of '" + v + "' has " +
                             std::to_string(it->second.size()) + " intervals, expected " +
                             std::to_string(dimension_));
    }
    if (unit_lengths_) {
        if (static_cast<int>(unit_lengths_->size()) != dimension_)
            throw InputError("BoxRepresentation: unit length list has wrong dimension");
        for (const std::string& v : vertex_order_) {
            const auto& box = boxes_.at(v);
            for (int i = 0; i < dimension_; ++i)
                if (box[static_cast<std::size_t>(i)].length() != (*unit_lengths_)[static_cast<std::size_t>(i)])
                    throw InputError("BoxRepresentation: interval of '" + v + "' in dimension " +
                                     std::to_string(i) + " does not have the declared unit length");
        }
    }
}

const std::vector<Interval>& BoxRepresentation::box(const std::string& label) const {
    auto it = boxes_.find(label);
    if (it == boxes_.end())
        throw InputError("BoxRepresentation: no box for vertex '" + label + "'");
    return it->second;
}

bool BoxRepresentation::coversExactly(const std::vector<std::string>& vertices) const {
    if (vertices.size() != vertex_order_.size()) return false;
    return std::all_of(vertices.begin(), vertices.end(),
                       [this](const std::string& v) { return covers(v); });
}

BoxRepresentation BoxRepresentation::relabeled(
    const std::vector<std::pair<std::string, std::string>>& mapping) const {
    if (mapping.size() != vertex_order_.size())
        throw InputError("BoxRepresentation::relabeled: mapping size mismatch");
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<Interval>> boxes;
    order.reserve(mapping.size());
    for (const auto& [from, to] : mapping) {
        order.push_back(to);
        if (!boxes.emplace(to, box(from)).second)
            throw InputError("BoxRepresentation::relabeled: duplicate target label '" + to + "'");
    }
    return BoxRepresentation(dimension_, std::move(order), std::move(boxes), unit_lengths_);
}

LabeledGraph representationToGraph(const BoxRepresentation& rep,
                                   const std::vector<std::string>& vertices) {
    if (!rep.coversExactly(vertices))
        throw InputError("representationToGraph: representation does not cover exactly the given vertices");
    std::vector<const std::vector<Interval>*> boxes;
    boxes.reserve(vertices.size());
    for (const std::string& v : vertices) boxes.push_back(&rep.box(v));
    std::vector<VertexPair> edges;
    const int n = static_cast<int>(vertices.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool everywhere = true;
            for (int d = 0; d < rep.dimension() && everywhere; ++d)
                if (!overlaps((*boxes[static_cast<std::size_t>(i)])[static_cast<std::size_t>(d)],
                              (*boxes[static_cast<std::size_t>(j)])[static_cast<std::size_t>(d)]))
                    everywhere = false;
            if (everywhere) edges.emplace_back(i, j);
        }
    return LabeledGraph(vertices, edges);
}

LabeledGraph representationToGraph(const BoxRepresentation& rep) {
    return representationToGraph(rep, rep.vertexOrder());
}

} // namespace boxikit
