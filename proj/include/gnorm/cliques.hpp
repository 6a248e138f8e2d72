#pragma once

#include <vector>

#include "gnorm/graph.hpp"

namespace gnorm {

// All maximal cliques, sorted by bitset value. Deterministic: pivot is the
// lowest-index vertex maximizing candidate coverage.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Equals maximal_cliques(complement(g)).
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

int independence_number(const Graph& g);
int clique_number(const Graph& g);

// Size of a first-fit partition of V into cliques; an upper bound for the
// independence number (every independent set meets each class at most once).
int greedy_clique_cover_bound(const Graph& g);

}  // namespace gnorm
