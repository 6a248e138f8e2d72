#pragma once

#include <cstdint>

#include "gnorm/bipartite.hpp"
#include "gnorm/graph.hpp"

namespace gnorm {

// G(n, p): each unordered pair independently an edge. Output is a pure
// function of (seed, trial), independent of execution order.
Graph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t trial);

BipartiteGraph sample_bipartite(int a_size, int b_size, double p, std::uint64_t seed,
                                std::uint64_t trial);

// G(n, p) filtered greedily: edges are drawn as in sample_gnp and kept only
// when they close no triangle, in pair-index order.
Graph sample_triangle_free(int n, double p, std::uint64_t seed, std::uint64_t trial);

}  // namespace gnorm
