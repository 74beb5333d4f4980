#include "sft/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sft {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw validation_error("malformed JSON in " + what);
    return doc;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw validation_error(what + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

Graph parse_graph_json(const std::string& text) {
    const json doc = parse(text, "graph description");
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw validation_error("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> vertices = string_list(doc["vertices"], "\"vertices\"");
    std::vector<EdgeSpec> edges;
    if (!doc["edges"].is_array()) throw validation_error("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("id") || !e.contains("from") || !e.contains("to"))
            throw validation_error("each edge needs \"id\", \"from\" and \"to\"");
        edges.push_back(EdgeSpec{e["id"].get<std::string>(), e["from"].get<std::string>(),
                                 e["to"].get<std::string>()});
    }
    return make_graph(std::move(vertices), std::move(edges));
}

Graph load_graph_json(const std::string& path) { return parse_graph_json(read_file(path)); }

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex_id(v));
    doc["edges"] = nlohmann::ordered_json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        nlohmann::ordered_json edge;
        edge["id"] = g.edge(e).id;
        edge["from"] = g.vertex_id(g.source(e));
        edge["to"] = g.vertex_id(g.target(e));
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

ShiftPoint parse_point_json(const Graph& g, const std::string& text) {
    const json doc = parse(text, "point description");
    if (!doc.is_object() || !doc.contains("left_cycle") || !doc.contains("core") ||
        !doc.contains("right_cycle") || !doc.contains("core_start"))
        throw validation_error(
            "point JSON needs \"left_cycle\", \"core\", \"right_cycle\" and \"core_start\"");
    if (!doc["core_start"].is_number_integer())
        throw validation_error("\"core_start\" must be an integer");
    return make_point(g, string_list(doc["left_cycle"], "\"left_cycle\""),
                      string_list(doc["core"], "\"core\""),
                      string_list(doc["right_cycle"], "\"right_cycle\""),
                      doc["core_start"].get<std::int64_t>());
}

ShiftPoint load_point_json(const Graph& g, const std::string& path) {
    return parse_point_json(g, read_file(path));
}

std::string point_to_json(const Graph& g, const ShiftPoint& z) {
    nlohmann::ordered_json doc;
    auto words = [&](const std::vector<EdgeIndex>& w) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (EdgeIndex e : w) arr.push_back(g.edge(e).id);
        return arr;
    };
    doc["left_cycle"] = words(z.left_cycle);
    doc["core"] = words(z.core);
    doc["right_cycle"] = words(z.right_cycle);
    doc["core_start"] = z.core_start;
    return doc.dump(2) + "\n";
}

OneBlockCode load_code_json(const std::string& path) {
    const json doc = parse(read_file(path), "code description");
    if (!doc.is_object() || !doc.contains("domain") || !doc.contains("codomain") ||
        !doc.contains("edge_map"))
        throw validation_error("code JSON needs \"domain\", \"codomain\" and \"edge_map\"");
    const auto dir = std::filesystem::path(path).parent_path();
    const auto resolve = [&](const std::string& p) {
        const std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (dir / fp).string();
    };
    Graph domain = load_graph_json(resolve(doc["domain"].get<std::string>()));
    Graph codomain = load_graph_json(resolve(doc["codomain"].get<std::string>()));
    if (!doc["edge_map"].is_object())
        throw validation_error("\"edge_map\" must be an object");
    std::map<std::string, std::string> edge_map;
    for (const auto& [key, value] : doc["edge_map"].items()) {
        if (!value.is_string()) throw validation_error("edge_map values must be strings");
        edge_map[key] = value.get<std::string>();
    }
    return validate_code(std::move(domain), std::move(codomain), edge_map);
}

} // namespace sft
