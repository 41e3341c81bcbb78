#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtdg/graph.hpp"
#include "rtdg/space.hpp"

namespace rtdg {

/// A graph plus whatever provenance is known about it. Graphs built from a
/// space carry the space, distance set and vertex labels; graphs evaluated
/// from an expression carry the expression text instead.
struct GraphDocument {
    Graph graph{0, {}};
    std::optional<SpaceSpec> space;
    DistanceSet distances;
    std::vector<Point> labels; // empty or one per vertex, in vertex order
    std::string expr;          // empty when not built from an expression

    static GraphDocument from_distance_graph(const DistanceGraph& dg);
};

/// Serializes to a single JSON object with fixed field names and ordering:
/// "space" and "labels" (and "distances") when space-built, "expr" when
/// expression-built, always "vertex_count" and "edges" (u < v, sorted).
std::string document_to_json(const GraphDocument& doc, bool pretty = true);

/// Inverse of document_to_json; validates edges, labels and distances.
GraphDocument document_from_json(const std::string& text);

/// Graphviz "graph { ... }" output; vertex labels are comma-joined
/// coordinates when present, vertex ids otherwise.
std::string document_to_dot(const GraphDocument& doc);

} // namespace rtdg
