#include "rtdg/graph_io.hpp"

#include <sstream>

#include "json.hpp"
#include "rtdg/errors.hpp"

namespace rtdg {

GraphDocument GraphDocument::from_distance_graph(const DistanceGraph& dg) {
    GraphDocument doc;
    doc.graph = dg.graph;
    doc.space = dg.space;
    doc.distances = dg.distances;
    doc.labels = dg.labels;
    return doc;
}

std::string document_to_json(const GraphDocument& doc, bool pretty) {
    nlohmann::ordered_json j;
    if (doc.space) {
        j["space"] = doc.space->to_string();
        j["distances"] = doc.distances.values();
    }
    if (!doc.expr.empty()) {
        j["expr"] = doc.expr;
    }
    j["vertex_count"] = doc.graph.vertex_count();
    if (!doc.labels.empty()) {
        auto labels = nlohmann::ordered_json::array();
        for (const Point& p : doc.labels) labels.push_back(p.coords());
        j["labels"] = std::move(labels);
    }
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : doc.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return pretty ? j.dump(2) + "\n" : j.dump();
}

GraphDocument document_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("graph JSON must be an object");

    GraphDocument doc;
    try {
        int vertex_count = j.at("vertex_count").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("each edge must be a two-element array");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        doc.graph = Graph(vertex_count, std::move(edges));

        if (j.contains("space")) {
            doc.space = SpaceSpec::parse(j.at("space").get<std::string>());
            if (j.contains("distances")) {
                std::vector<int> ds = j.at("distances").get<std::vector<int>>();
                doc.distances = DistanceSet(std::move(ds));
                doc.distances.require_valid_for(*doc.space);
            }
        }
        if (j.contains("labels")) {
            if (!doc.space) throw ParseError("labels require a space field");
            const auto& labels = j.at("labels");
            if (static_cast<int>(labels.size()) != vertex_count) {
                throw ParseError("label count does not match vertex_count");
            }
            for (const auto& coords : labels) {
                doc.labels.emplace_back(*doc.space, coords.get<std::vector<int>>());
            }
        }
        if (j.contains("expr")) doc.expr = j.at("expr").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    return doc;
}

std::string document_to_dot(const GraphDocument& doc) {
    std::ostringstream out;
    out << "graph distance_graph {\n";
    for (int v = 0; v < doc.graph.vertex_count(); ++v) {
        out << "  " << v;
        if (!doc.labels.empty()) out << " [label=\"" << doc.labels[static_cast<std::size_t>(v)].to_string() << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : doc.graph.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rtdg
