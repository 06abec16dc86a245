#include "boxikit/json_io.hpp"

#include <fstream>

namespace boxikit {

Json graphToJson(const LabeledGraph& g) {
    Json j;
    j["vertices"] = g.labels();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

LabeledGraph graphFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON: expected an object with 'vertices' and 'edges'");
    std::vector<std::string> labels;
    for (const Json& v : j.at("vertices")) {
        if (!v.is_string()) throw InputError("graph JSON: vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<VertexPair> edges;
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("graph JSON: edges must be [i, j] index pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return LabeledGraph(std::move(labels), edges);
    } catch (const InputError& err) {
        throw InputError(std::string("graph JSON: ") + err.what());
    }
}

namespace {

Json intervalToJson(const Interval& iv) {
    return Json::array({iv.lo.str(), iv.hi.str()});
}

Interval intervalFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw InputError("representation JSON: intervals must be [\"lo\", \"hi\"] rational strings");
    return Interval(Rational::parse(j[0].get<std::string>()),
                    Rational::parse(j[1].get<std::string>()));
}

} // namespace

Json representationToJson(const BoxRepresentation& rep) {
    Json j;
    j["dimension"] = rep.dimension();
    Json boxes = Json::object();
    for (const std::string& v : rep.vertexOrder()) {
        Json list = Json::array();
        for (const Interval& iv : rep.box(v)) list.push_back(intervalToJson(iv));
        boxes[v] = std::move(list);
    }
    j["boxes"] = std::move(boxes);
    if (rep.unitLengths()) {
        Json lengths = Json::array();
        for (const Rational& r : *rep.unitLengths()) lengths.push_back(r.str());
        j["unit_lengths"] = std::move(lengths);
    }
    return j;
}

BoxRepresentation representationFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("boxes"))
        throw InputError("representation JSON: expected an object with 'dimension' and 'boxes'");
    if (!j.at("dimension").is_number_integer())
        throw InputError("representation JSON: 'dimension' must be an integer");
    int dimension = j.at("dimension").get<int>();
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<Interval>> boxes;
    for (const auto& [label, list] : j.at("boxes").items()) {
        std::vector<Interval> box;
        for (const Json& iv : list) box.push_back(intervalFromJson(iv));
        order.push_back(label);
        boxes.emplace(label, std::move(box));
    }
    std::optional<std::vector<Rational>> unit_lengths;
    if (j.contains("unit_lengths")) {
        std::vector<Rational> lengths;
        for (const Json& r : j.at("unit_lengths")) {
            if (!r.is_string())
                throw InputError("representation JSON: unit lengths must be rational strings");
            lengths.push_back(Rational::parse(r.get<std::string>()));
        }
        unit_lengths = std::move(lengths);
    }
    try {
        return BoxRepresentation(dimension, std::move(order), std::move(boxes),
                                 std::move(unit_lengths));
    } catch (const InputError& err) {
        throw InputError(std::string("representation JSON: ") + err.what());
    }
}

Json realizerToJson(const Realizer& r) {
    Json extensions = Json::array();
    for (const LinearExtension& ext : r.extensions) extensions.push_back(ext.order);
    Json j;
    j["extensions"] = std::move(extensions);
    return j;
}

Realizer realizerFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("extensions"))
        throw InputError("realizer JSON: expected an object with 'extensions'");
    Realizer out;
    for (const Json& ext : j.at("extensions")) {
        LinearExtension le;
        for (const Json& label : ext) {
            if (!label.is_string())
                throw InputError("realizer JSON: extension entries must be labels");
            le.order.push_back(label.get<std::string>());
        }
        out.extensions.push_back(std::move(le));
    }
    return out;
}

Json familySpecToJson(const FamilySpec& spec) {
    Json j;
    j["kind"] = familyKindName(spec.kind);
    j["params"] = spec.params;
    return j;
}

FamilySpec familySpecFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("params"))
        throw InputError("family JSON: expected an object with 'kind' and 'params'");
    if (!j.at("kind").is_string())
        throw InputError("family JSON: 'kind' must be a string");
    FamilySpec spec;
    spec.kind = familyKindFromName(j.at("kind").get<std::string>());
    for (const Json& p : j.at("params")) {
        if (!p.is_number_integer())
            throw InputError("family JSON: params must be integers");
        spec.params.push_back(p.get<std::int64_t>());
    }
    return spec;
}

Json parseJsonText(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw InputError(what + ": not valid JSON");
    return j;
}

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parseJsonText(text, "file '" + path + "'");
}

} // namespace boxikit
