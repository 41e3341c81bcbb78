#pragma once

#include <vector>

#include "rtdg/graph.hpp"

namespace rtdg {

struct Coloring {
    std::vector<int> color; // per vertex, 0..color_count-1
    int color_count = 0;
};

struct ColoringLimits {
    int max_component_vertices = 200;  // branch-and-bound size guard
    long long node_budget = 2000000;   // branch-and-bound node guard
};

/// Exact chromatic number with a proper coloring witness, or a proven
/// (lower, upper) pair when the budget runs out. Strategy, per component:
/// greedy clique lower bound, DSATUR upper bound, branch and bound only when
/// the two disagree. An inconclusive result is a first-class value, never a
/// wrong exact answer.
struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    Coloring witness; // proper, uses `upper` colors
    long long nodes = 0;
};

ChromaticResult chromatic_number_exact(const Graph& g, const ColoringLimits& limits = {});

/// Deterministic greedy clique: repeatedly takes the candidate of largest
/// degree (lowest id on ties). Returns the clique size.
int greedy_clique_lower_bound(const Graph& g);

/// DSATUR with largest-degree tie-break, ties broken by lowest vertex id.
Coloring dsatur_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const Coloring& coloring);

} // namespace rtdg
