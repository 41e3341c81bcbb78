#include "rtdg/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace rtdg {

namespace {

using ColorVec = std::vector<int>;
using Signature = std::pair<int, std::vector<int>>; // (old color, sorted neighbor colors)

std::vector<Signature> signatures(const Graph& g, const ColorVec& colors) {
    std::vector<Signature> sigs(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> around;
        around.reserve(g.neighbors(v).size());
        for (int w : g.neighbors(v)) around.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(around.begin(), around.end());
        sigs[static_cast<std::size_t>(v)] = {colors[static_cast<std::size_t>(v)],
                                             std::move(around)};
    }
    return sigs;
}

// One joint refinement to a fixpoint. New color ids are ranks in the sorted
// joint signature set, so classes stay aligned between the two graphs.
// Returns false as soon as the class-size histograms disagree.
bool parallel_refine(const Graph& g, const Graph& h, ColorVec& cg, ColorVec& ch,
                     int& color_count) {
    for (;;) {
        auto sg = signatures(g, cg);
        auto sh = signatures(h, ch);

        std::map<Signature, int> ids;
        for (const auto& s : sg) ids.emplace(s, 0);
        for (const auto& s : sh) ids.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;

        std::vector<int> count_g(static_cast<std::size_t>(next), 0);
        std::vector<int> count_h(static_cast<std::size_t>(next), 0);
        for (std::size_t v = 0; v < sg.size(); ++v) {
            cg[v] = ids[sg[v]];
            ++count_g[static_cast<std::size_t>(cg[v])];
        }
        for (std::size_t v = 0; v < sh.size(); ++v) {
            ch[v] = ids[sh[v]];
            ++count_h[static_cast<std::size_t>(ch[v])];
        }
        if (count_g != count_h) return false;
        if (next == color_count) return true; // no class split, fixpoint
        color_count = next;
    }
}

struct ComponentMatcher {
    const Graph& g;
    const Graph& h;
    long long& budget;

    // Mapping for a discrete aligned partition: color c holds exactly one
    // vertex on each side.
    std::optional<std::vector<int>> extract(const ColorVec& cg, const ColorVec& ch,
                                            int color_count) const {
        std::vector<int> g_of_color(static_cast<std::size_t>(color_count), -1);
        std::vector<int> h_of_color(static_cast<std::size_t>(color_count), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            g_of_color[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])] = v;
        for (int v = 0; v < h.vertex_count(); ++v)
            h_of_color[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)])] = v;
        std::vector<int> map(static_cast<std::size_t>(g.vertex_count()));
        for (int c = 0; c < color_count; ++c)
            map[static_cast<std::size_t>(g_of_color[static_cast<std::size_t>(c)])] =
                h_of_color[static_cast<std::size_t>(c)];
        if (!verify_isomorphism(g, h, map)) return std::nullopt;
        return map;
    }

    std::optional<std::vector<int>> search(ColorVec cg, ColorVec ch, int color_count) {
        if (--budget < 0) throw SizeLimitError("isomorphism search node budget exceeded");
        if (!parallel_refine(g, h, cg, ch, color_count)) return std::nullopt;

        // First smallest non-singleton class.
        std::vector<int> class_size(static_cast<std::size_t>(color_count), 0);
        for (int c : cg) ++class_size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < color_count; ++c) {
            int s = class_size[static_cast<std::size_t>(c)];
            if (s >= 2 && (target == -1 || s < class_size[static_cast<std::size_t>(target)]))
                target = c;
        }
        if (target == -1) return extract(cg, ch, color_count);

        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (cg[static_cast<std::size_t>(u)] == target) {
                v = u;
                break;
            }
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (ch[static_cast<std::size_t>(w)] != target) continue;
            ColorVec cg2 = cg;
            ColorVec ch2 = ch;
            cg2[static_cast<std::size_t>(v)] = color_count;
            ch2[static_cast<std::size_t>(w)] = color_count;
            if (auto map = search(std::move(cg2), std::move(ch2), color_count + 1)) return map;
        }
        return std::nullopt;
    }
};

std::optional<std::vector<int>> component_isomorphism(const Graph& g, const Graph& h,
                                                      long long& budget) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    ComponentMatcher matcher{g, h, budget};
    ColorVec cg(static_cast<std::size_t>(g.vertex_count()), 0);
    ColorVec ch(static_cast<std::size_t>(h.vertex_count()), 0);
    return matcher.search(std::move(cg), std::move(ch), 1);
}

// Cheap component invariant: (size, edges, degree multiset).
std::tuple<int, std::int64_t, std::vector<int>> component_key(const Graph& comp) {
    std::vector<int> degrees = degree_sequence(comp);
    std::sort(degrees.begin(), degrees.end());
    return {comp.vertex_count(), comp.edge_count(), std::move(degrees)};
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h,
                                               const IsoLimits& limits) {
    if (g.vertex_count() + h.vertex_count() > limits.max_combined_vertices)
        throw SizeLimitError("isomorphism limited to " +
                             std::to_string(limits.max_combined_vertices) +
                             " combined vertices, got " +
                             std::to_string(g.vertex_count() + h.vertex_count()));
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    {
        std::vector<int> dg = degree_sequence(g);
        std::vector<int> dh = degree_sequence(h);
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        if (dg != dh) return std::nullopt;
    }

    // Match components one by one; components isomorphic to each other are
    // interchangeable, which makes the greedy pairing safe.
    ComponentPartition pg = connected_components(g);
    ComponentPartition ph = connected_components(h);
    if (pg.component_count != ph.component_count) return std::nullopt;

    auto collect = [](const Graph& graph, const ComponentPartition& parts) {
        std::vector<std::vector<int>> members(static_cast<std::size_t>(parts.component_count));
        for (int v = 0; v < graph.vertex_count(); ++v)
            members[static_cast<std::size_t>(parts.component_id[static_cast<std::size_t>(v)])]
                .push_back(v);
        return members;
    };
    std::vector<std::vector<int>> members_g = collect(g, pg);
    std::vector<std::vector<int>> members_h = collect(h, ph);

    std::vector<Graph> comps_g, comps_h;
    comps_g.reserve(members_g.size());
    comps_h.reserve(members_h.size());
    for (const auto& m : members_g) comps_g.push_back(induced_subgraph(g, m));
    for (const auto& m : members_h) comps_h.push_back(induced_subgraph(h, m));

    long long budget = limits.node_budget;
    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> used(members_h.size(), 0);
    for (std::size_t i = 0; i < comps_g.size(); ++i) {
        auto key_i = component_key(comps_g[i]);
        bool matched = false;
        for (std::size_t j = 0; j < comps_h.size(); ++j) {
            if (used[j] || component_key(comps_h[j]) != key_i) continue;
            auto comp_map = component_isomorphism(comps_g[i], comps_h[j], budget);
            if (!comp_map) continue;
            used[j] = 1;
            for (std::size_t v = 0; v < members_g[i].size(); ++v)
                map[static_cast<std::size_t>(members_g[i][v])] =
                    members_h[j][static_cast<std::size_t>((*comp_map)[v])];
            matched = true;
            break;
        }
        if (!matched) return std::nullopt;
    }

    if (!verify_isomorphism(g, h, map))
        throw Error("internal: assembled mapping failed re-verification");
    return map;
}

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    std::vector<char> hit(map.size(), 0);
    for (int image : map) {
        if (image < 0 || image >= h.vertex_count() || hit[static_cast<std::size_t>(image)])
            return false;
        hit[static_cast<std::size_t>(image)] = 1;
    }
    if (g.edge_count() != h.edge_count()) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && !h.has_edge(map[static_cast<std::size_t>(u)],
                                     map[static_cast<std::size_t>(v)]))
                return false;
    // Edge counts equal and all of g's edges land on edges of h, so the
    // mapping preserves non-adjacency as well.
    return true;
}

bool verify_embedding(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.vertex_count())
        throw Error("embedding map must cover every vertex");
    std::vector<char> hit(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int image : map) {
        if (image < 0 || image >= h.vertex_count())
            throw Error("embedding map image out of range");
        if (hit[static_cast<std::size_t>(image)]) throw Error("embedding map is not injective");
        hit[static_cast<std::size_t>(image)] = 1;
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && !h.has_edge(map[static_cast<std::size_t>(u)],
                                     map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

} // namespace rtdg
