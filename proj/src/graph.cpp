#include "rtdg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rtdg {

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw Error("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n_));
    if (n_ <= kDenseVertexLimit && n_ > 0)
        bits_.assign((static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) + 63) / 64, 0);
}

void Graph::set_bit(int u, int v) {
    std::size_t idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(v);
    bits_[idx >> 6] |= std::uint64_t(1) << (idx & 63);
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : Graph(vertex_count) {
    for (auto& [u, v] : edge_list) {
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error("edge endpoint out of range: " + std::to_string(u) + "-" +
                        std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    for (const auto& [u, v] : edge_list) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        if (dense()) {
            set_bit(u, v);
            set_bit(v, u);
        }
    }
    for (auto& list : adj_) list.shrink_to_fit();
    // Neighbor lists sorted: u-side appended in sorted edge order, v-side needs a pass.
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    edge_count_ = static_cast<std::int64_t>(edge_list.size());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (dense()) {
        std::size_t idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                          static_cast<std::size_t>(v);
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DistanceGraph build_distance_graph(const SpaceSpec& spec, const DistanceSet& distances,
                                   std::size_t max_points) {
    distances.require_valid_for(spec);
    std::vector<Point> points = enumerate_space(spec, max_points);
    const int count = static_cast<int>(points.size());
    const int n = spec.n();

    std::vector<char> wanted(static_cast<std::size_t>(n) + 1, 0);
    for (int d : distances.values()) wanted[static_cast<std::size_t>(d)] = 1;

    // rho(x,y) is the largest position of disagreement for all three families
    // (for words this equals the weight of the mod-q difference; the identity
    // is asserted exhaustively in the test suite).
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < count; ++i) {
        const auto& a = points[static_cast<std::size_t>(i)].coords();
        for (int j = i + 1; j < count; ++j) {
            const auto& b = points[static_cast<std::size_t>(j)].coords();
            for (int pos = n - 1; pos >= 0; --pos) {
                if (a[static_cast<std::size_t>(pos)] != b[static_cast<std::size_t>(pos)]) {
                    if (wanted[static_cast<std::size_t>(pos) + 1]) edge_list.emplace_back(i, j);
                    break;
                }
            }
        }
    }
    return DistanceGraph{Graph(count, std::move(edge_list)), spec, distances,
                         std::move(points)};
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        degrees[static_cast<std::size_t>(v)] = g.degree(v);
    return degrees;
}

std::optional<int> is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

ComponentPartition connected_components(const Graph& g) {
    ComponentPartition parts;
    parts.component_id.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> stack;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (parts.component_id[static_cast<std::size_t>(root)] != -1) continue;
        int id = parts.component_count++;
        int size = 0;
        stack.push_back(root);
        parts.component_id[static_cast<std::size_t>(root)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.neighbors(v)) {
                if (parts.component_id[static_cast<std::size_t>(w)] == -1) {
                    parts.component_id[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        parts.component_sizes.push_back(size);
    }
    return parts;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edge_list;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int w : g.neighbors(vertices[i])) {
            int j = position[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edge_list.emplace_back(static_cast<int>(i), j);
        }
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edge_list));
}

} // namespace rtdg
