#pragma once

// File formats.
//
// R-graph:
//   {"vertices": ["p", ...],
//    "edges": [{"id": "a1m", "sign": "minus", "source": "p", "target": "p"}, ...],
//    "relations": [["a1m", "a1p"], ...]}
// Unknown keys and duplicate ids are rejected.
//
// Expansion steps: [{"sigma": "a1m"}, ...]; bullets are named by the presentation.

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rgsd/flow.hpp"
#include "rgsd/rgraph.hpp"

namespace rgsd::io {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::ranges::find(allowed, key) == allowed.end())
            throw ParseError(std::string(where) + ": unknown key '" + key + "'");
    }
}

inline const json& required(const json& obj, const char* key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string(where) + ": missing key '" + key + "'");
    return *it;
}

inline std::string string_at(const json& j, std::string_view where) {
    if (!j.is_string()) throw ParseError(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

} // namespace detail

inline RGraphData graph_from_json(const json& j) {
    using detail::required;
    using detail::string_at;
    if (!j.is_object()) throw ParseError("graph: expected a JSON object");
    detail::only_keys(j, {"vertices", "edges", "relations"}, "graph");

    RGraphData g;
    const auto& vertices = required(j, "vertices", "graph");
    if (!vertices.is_array()) throw ParseError("graph: 'vertices' must be an array");
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        auto name = string_at(v, "vertices[]");
        if (!seen.insert(name).second) throw ParseError("graph: duplicate vertex '" + name + "'");
        g.vertices.push_back(std::move(name));
    }

    const auto& edges = required(j, "edges", "graph");
    if (!edges.is_array()) throw ParseError("graph: 'edges' must be an array");
    seen.clear();
    for (const auto& e : edges) {
        if (!e.is_object()) throw ParseError("edges[]: expected an object");
        detail::only_keys(e, {"id", "sign", "source", "target"}, "edges[]");
        EdgeData d;
        d.id = string_at(required(e, "id", "edges[]"), "edges[].id");
        auto sign = string_at(required(e, "sign", "edges[]"), "edges[].sign");
        if (sign == "minus") d.sign = Sign::minus;
        else if (sign == "plus") d.sign = Sign::plus;
        else throw ParseError("edges[]: sign must be \"minus\" or \"plus\", got \"" + sign + "\"");
        d.source = string_at(required(e, "source", "edges[]"), "edges[].source");
        d.target = string_at(required(e, "target", "edges[]"), "edges[].target");
        if (!seen.insert(d.id).second) throw ParseError("graph: duplicate edge id '" + d.id + "'");
        g.edges.push_back(std::move(d));
    }

    const auto& relations = required(j, "relations", "graph");
    if (!relations.is_array()) throw ParseError("graph: 'relations' must be an array");
    for (const auto& r : relations) {
        if (!r.is_array() || r.size() != 2) throw ParseError("relations[]: expected [minus_id, plus_id]");
        g.relations.emplace_back(string_at(r[0], "relations[][0]"), string_at(r[1], "relations[][1]"));
    }
    return g;
}

inline json graph_to_json(const RGraphData& g) {
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"id", e.id}, {"sign", std::string(to_string(e.sign))}, {"source", e.source}, {"target", e.target}});
    json relations = json::array();
    for (const auto& [f, p] : g.relations) relations.push_back(json::array({f, p}));
    return {{"vertices", g.vertices}, {"edges", std::move(edges)}, {"relations", std::move(relations)}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline RGraphData read_graph(const std::string& path) {
    auto j = read_json_file(path);
    try {
        return graph_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_graph(const std::string& path, const RGraphData& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << graph_to_json(g).dump(2) << '\n';
}

inline std::vector<StepRequest> steps_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("steps: expected a JSON array");
    std::vector<StepRequest> out;
    for (const auto& s : j) {
        if (!s.is_object()) throw ParseError("steps[]: expected an object");
        detail::only_keys(s, {"sigma"}, "steps[]");
        out.push_back({detail::string_at(detail::required(s, "sigma", "steps[]"), "steps[].sigma"), std::nullopt});
    }
    return out;
}

inline json report_to_json(const LemmaReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"lemma", r.lemma},
            {"params", std::move(params)},
            {"checked", r.checked},
            {"skipped", r.skipped},
            {"counterexamples", r.counterexamples}};
}

} // namespace rgsd::io
