#ifndef BOXIKIT_BOX_REPRESENTATION_HPP
#define BOXIKIT_BOX_REPRESENTATION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "boxikit/graph.hpp"
#include "boxikit/interval.hpp"

namespace boxikit {

/// Assignment of a k-box (list of k closed intervals, one per dimension) to
/// every vertex of some graph.  k = 0 is legal and denotes a complete graph.
/// unitLengths, when present, records the common interval length of each
/// dimension; dimension i may only carry it if every interval there has
/// exactly that length.
class BoxRepresentation {
public:
    BoxRepresentation() = default;
    BoxRepresentation(int dimension, std::vector<std::string> vertexOrder,
                      std::unordered_map<std::string, std::vector<Interval>> boxes,
                      std::optional<std::vector<Rational>> unitLengths = std::nullopt);

    int dimension() const { return dimension_; }
    const std::vector<std::string>& vertexOrder() const { return vertex_order_; }
    const std::vector<Interval>& box(const std::string& label) const;
    bool covers(const std::string& label) const { return boxes_.count(label) > 0; }
    const std::optional<std::vector<Rational>>& unitLengths() const { return unit_lengths_; }

    /// Same vertex set (as a set, ignoring order)?
    bool coversExactly(const std::vector<std::string>& vertices) const;

    /// Re-key every box through label -> newLabel (bijective on the vertex
    /// set); used to transport representations along explicit isomorphisms.
    BoxRepresentation relabeled(
        const std::vector<std::pair<std::string, std::string>>& mapping) const;

private:
    int dimension_ = 0;
    std::vector<std::string> vertex_order_;
    std::unordered_map<std::string, std::vector<Interval>> boxes_;
    std::optional<std::vector<Rational>> unit_lengths_;
};

/// Intersection graph of the boxes over the given vertex list: an edge
/// wherever the boxes overlap in every dimension.
LabeledGraph representationToGraph(const BoxRepresentation& rep,
                                   const std::vector<std::string>& vertices);

/// Same, over the representation's own vertex order.
LabeledGraph representationToGraph(const BoxRepresentation& rep);

} // namespace boxikit

#endif
