#ifndef BOXIKIT_JSON_IO_HPP
#define BOXIKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "boxikit/box_representation.hpp"
#include "boxikit/families.hpp"
#include "boxikit/graph.hpp"
#include "boxikit/poset.hpp"

namespace boxikit {

// ordered_json keeps insertion order, which is what makes CLI output
// byte-deterministic.
using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [[i, j], ...]} with i < j, sorted.
Json graphToJson(const LabeledGraph& g);
LabeledGraph graphFromJson(const Json& j);

/// {"dimension": k, "boxes": {label: [["p/q","p/q"], ...]}, "unit_lengths": [...]}
/// Rationals in canonical "p/q" form; unit_lengths present only when recorded.
Json representationToJson(const BoxRepresentation& rep);
BoxRepresentation representationFromJson(const Json& j);

/// {"extensions": [["label", ...], ...]}
Json realizerToJson(const Realizer& r);
Realizer realizerFromJson(const Json& j);

/// {"kind": "tcc", "params": [1, 2, 3]}
Json familySpecToJson(const FamilySpec& spec);
FamilySpec familySpecFromJson(const Json& j);

/// Parses text (or a file) into Json, turning parse failures into InputError.
Json parseJsonText(const std::string& text, const std::string& what);
Json loadJsonFile(const std::string& path);

} // namespace boxikit

#endif
