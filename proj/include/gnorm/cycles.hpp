#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "gnorm/graph.hpp"

namespace gnorm {

// Length of a shortest cycle; nullopt when the graph is a forest.
std::optional<int> girth(const Graph& g);

// Number of distinct cycle subgraphs with between 3 and max_len vertices.
// Each cycle is counted once, independent of starting point and direction.
std::int64_t count_short_cycles(const Graph& g, int max_len);

// Visits every cycle subgraph of length <= max_len exactly once, as the
// vertex sequence root, v1, ..., vk with root the smallest vertex and
// v1 < vk. Return false from the callback to stop early.
void enumerate_short_cycles(const Graph& g, int max_len,
                            const std::function<bool(const std::vector<int>&)>& visit);

// Greedy transversal: walks cycles in enumeration order and adds the lowest
// vertex of each cycle not already hit. The result meets every cycle of
// length <= max_len, and its size is at most the number of such cycles.
VertexSet short_cycle_transversal(const Graph& g, int max_len);

}  // namespace gnorm
