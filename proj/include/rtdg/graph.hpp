#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rtdg/space.hpp"

namespace rtdg {

/// Undirected simple graph, immutable after construction. Adjacency is kept
/// as sorted neighbor lists, plus a dense bit matrix for graphs of up to
/// kDenseVertexLimit vertices (brute-force spaces are small; S_7 with 5040
/// vertices is the first one past the dense cutoff).
class Graph {
public:
    static constexpr int kDenseVertexLimit = 4096;

    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_; // n_*n_ bit matrix when n_ <= kDenseVertexLimit

    bool dense() const { return !bits_.empty(); }
    void set_bit(int u, int v);
};

struct ComponentPartition {
    std::vector<int> component_id; // per vertex, ids are dense 0..count-1
    int component_count = 0;
    std::vector<int> component_sizes;
};

/// Result of brute-force distance-graph construction: the graph plus the
/// space, distance set and per-vertex point labels in enumeration order.
struct DistanceGraph {
    Graph graph;
    SpaceSpec space;
    DistanceSet distances;
    std::vector<Point> labels;
};

/// Builds G(space, D) by exhaustive pairwise RT distances. Vertices follow the
/// enumeration order; edge {x,y} present iff rho(x,y) is in D. An empty D
/// yields the edgeless graph.
DistanceGraph build_distance_graph(const SpaceSpec& spec, const DistanceSet& distances,
                                   std::size_t max_points = kDefaultMaxPoints);

std::vector<int> degree_sequence(const Graph& g);

/// The common degree when the graph is regular, nothing otherwise.
std::optional<int> is_regular(const Graph& g);

ComponentPartition connected_components(const Graph& g);

/// Subgraph induced by the given vertices; vertex i of the result corresponds
/// to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace rtdg
