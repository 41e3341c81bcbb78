#pragma once

#include <optional>
#include <vector>

#include "rtdg/graph.hpp"

namespace rtdg {

struct IsoLimits {
    int max_combined_vertices = 20000;
    long long node_budget = 5000000;
};

/// Explicit vertex bijection g -> h preserving adjacency both ways, or
/// nullopt for definitive non-isomorphism. Components are matched first;
/// within a component the search runs iterated color refinement (degree,
/// neighbor-color multiset) with individualization and backtracking. Every
/// returned mapping has been re-verified edge by edge. Throws SizeLimitError
/// when the size or node budget is exceeded, never a wrong verdict.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h,
                                               const IsoLimits& limits = {});

/// True iff map is a bijection and u~v in g exactly when map[u]~map[v] in h.
bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

/// True iff map is injective and every edge of g lands on an edge of h.
/// Throws Error when map is not injective into h.
bool verify_embedding(const Graph& g, const Graph& h, const std::vector<int>& map);

} // namespace rtdg
