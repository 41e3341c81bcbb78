#include "rtdg/coloring.hpp"

#include <algorithm>

namespace rtdg {

namespace {

// Uncolored vertex with maximal saturation; ties by larger degree, then by
// lowest vertex id. Returns -1 when everything is colored.
int pick_dsatur_vertex(const Graph& g, const std::vector<int>& color,
                       const std::vector<int>& saturation) {
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (color[static_cast<std::size_t>(v)] != -1) continue;
        if (best == -1) {
            best = v;
            continue;
        }
        int sv = saturation[static_cast<std::size_t>(v)];
        int sb = saturation[static_cast<std::size_t>(best)];
        if (sv > sb || (sv == sb && g.degree(v) > g.degree(best))) best = v;
    }
    return best;
}

struct BranchAndBound {
    const Graph& g;
    long long& budget;
    bool exhausted = false;

    std::vector<int> color;
    std::vector<int> best; // complete coloring with fewest colors found so far
    int best_count = 0;

    // True saturation (distinct neighbor colors) per vertex, maintained
    // incrementally via per-vertex color counters.
    std::vector<std::vector<int>> neighbor_color_count;
    std::vector<int> saturation;

    BranchAndBound(const Graph& graph, int max_colors, long long& node_budget)
        : g(graph), budget(node_budget) {
        auto n = static_cast<std::size_t>(g.vertex_count());
        color.assign(n, -1);
        neighbor_color_count.assign(n, std::vector<int>(static_cast<std::size_t>(max_colors), 0));
        saturation.assign(n, 0);
    }

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        for (int w : g.neighbors(v)) {
            auto& cnt = neighbor_color_count[static_cast<std::size_t>(w)];
            if (cnt[static_cast<std::size_t>(c)]++ == 0) ++saturation[static_cast<std::size_t>(w)];
        }
    }

    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        for (int w : g.neighbors(v)) {
            auto& cnt = neighbor_color_count[static_cast<std::size_t>(w)];
            if (--cnt[static_cast<std::size_t>(c)] == 0) --saturation[static_cast<std::size_t>(w)];
        }
    }

    // Searches for a proper coloring with at most `target` colors. Returns
    // true when one is found (stored in `best`), false when none exists.
    // `exhausted` is set when the node budget ran out before the answer.
    bool search(int colored, int used, int target) {
        if (exhausted) return false;
        if (--budget < 0) {
            exhausted = true;
            return false;
        }
        if (colored == g.vertex_count()) {
            best = color;
            best_count = used;
            return true;
        }
        int v = pick_dsatur_vertex(g, color, saturation);
        const auto& cnt = neighbor_color_count[static_cast<std::size_t>(v)];
        // Existing classes first, then at most one fresh class: classes beyond
        // `used` are interchangeable, trying one of them is enough.
        int limit = std::min(used + 1, target);
        for (int c = 0; c < limit; ++c) {
            if (cnt[static_cast<std::size_t>(c)] != 0) continue;
            assign(v, c);
            if (search(colored + 1, std::max(used, c + 1), target)) return true;
            unassign(v, c);
            if (exhausted) return false;
        }
        return false;
    }
};

struct ComponentResult {
    int lower = 0;
    int upper = 0;
    std::vector<int> colors;
    long long nodes = 0;
    bool budget_exhausted = false;
};

ComponentResult solve_component(const Graph& comp, const ColoringLimits& limits,
                                long long& budget) {
    ComponentResult result;
    result.lower = greedy_clique_lower_bound(comp);
    Coloring heuristic = dsatur_coloring(comp);
    result.upper = heuristic.color_count;
    result.colors = heuristic.color;
    if (result.lower == result.upper) return result;

    if (comp.vertex_count() > limits.max_component_vertices || budget <= 0) {
        result.budget_exhausted = true;
        return result;
    }

    while (result.lower < result.upper) {
        int target = result.upper - 1;
        long long before = budget;
        BranchAndBound bnb(comp, target, budget);
        bool found = bnb.search(0, 0, target);
        result.nodes += before - budget;
        if (bnb.exhausted) {
            result.budget_exhausted = true;
            break;
        }
        if (found) {
            result.upper = bnb.best_count;
            result.colors = bnb.best;
        } else {
            result.lower = result.upper; // no (upper-1)-coloring exists
        }
    }
    return result;
}

} // namespace

int greedy_clique_lower_bound(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    std::vector<int> candidates(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) candidates[static_cast<std::size_t>(v)] = v;
    std::vector<char> in_cand(static_cast<std::size_t>(g.vertex_count()), 1);
    int clique_size = 0;
    while (!candidates.empty()) {
        int pick = -1, pick_deg = -1;
        for (int v : candidates) {
            int deg = 0;
            for (int w : g.neighbors(v))
                if (in_cand[static_cast<std::size_t>(w)]) ++deg;
            if (deg > pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        ++clique_size;
        std::vector<int> next;
        for (int v : candidates) in_cand[static_cast<std::size_t>(v)] = 0;
        for (int w : g.neighbors(pick)) in_cand[static_cast<std::size_t>(w)] = 1;
        for (int v : candidates)
            if (in_cand[static_cast<std::size_t>(v)] && v != pick) next.push_back(v);
        for (int v : candidates) in_cand[static_cast<std::size_t>(v)] = 0;
        for (int v : next) in_cand[static_cast<std::size_t>(v)] = 1;
        candidates = std::move(next);
    }
    return clique_size;
}

Coloring dsatur_coloring(const Graph& g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    Coloring result;
    result.color.assign(n, -1);
    if (n == 0) return result;

    int max_colors = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_colors = std::max(max_colors, g.degree(v) + 1);
    std::vector<std::vector<int>> neighbor_color_count(
        n, std::vector<int>(static_cast<std::size_t>(max_colors), 0));
    std::vector<int> saturation(n, 0);

    for (int step = 0; step < g.vertex_count(); ++step) {
        int v = pick_dsatur_vertex(g, result.color, saturation);
        const auto& cnt = neighbor_color_count[static_cast<std::size_t>(v)];
        int c = 0;
        while (cnt[static_cast<std::size_t>(c)] != 0) ++c;
        result.color[static_cast<std::size_t>(v)] = c;
        result.color_count = std::max(result.color_count, c + 1);
        for (int w : g.neighbors(v)) {
            auto& wc = neighbor_color_count[static_cast<std::size_t>(w)];
            if (wc[static_cast<std::size_t>(c)]++ == 0) ++saturation[static_cast<std::size_t>(w)];
        }
    }
    return result;
}

bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
    if (static_cast<int>(coloring.color.size()) != g.vertex_count()) return false;
    int distinct = 0;
    std::vector<char> seen(coloring.color.empty() ? 1 : coloring.color.size(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = coloring.color[static_cast<std::size_t>(v)];
        if (c < 0 || c >= static_cast<int>(coloring.color.size())) return false;
        if (!seen[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = 1;
            ++distinct;
        }
        for (int w : g.neighbors(v))
            if (coloring.color[static_cast<std::size_t>(w)] == c) return false;
    }
    return distinct == coloring.color_count;
}

ChromaticResult chromatic_number_exact(const Graph& g, const ColoringLimits& limits) {
    ChromaticResult result;
    result.witness.color.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    if (g.vertex_count() == 0) {
        result.exact = true;
        return result;
    }

    long long budget = limits.node_budget;
    ComponentPartition parts = connected_components(g);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(parts.component_count));
    for (int v = 0; v < g.vertex_count(); ++v)
        members[static_cast<std::size_t>(parts.component_id[static_cast<std::size_t>(v)])]
            .push_back(v);

    for (const auto& vertices : members) {
        Graph comp = induced_subgraph(g, vertices);
        ComponentResult comp_result = solve_component(comp, limits, budget);
        result.nodes += comp_result.nodes;
        result.lower = std::max(result.lower, comp_result.lower);
        result.upper = std::max(result.upper, comp_result.upper);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            result.witness.color[static_cast<std::size_t>(vertices[i])] = comp_result.colors[i];
    }
    result.witness.color_count = result.upper;
    result.exact = result.lower == result.upper;
    return result;
}

} // namespace rtdg
