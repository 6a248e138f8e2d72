#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnorm/graph.hpp"
#include "gnorm/normality.hpp"

namespace gnorm {

// Vertex-disjoint stars with designated centers. Leaves live in the host
// graph's universe; trivial stars have empty leaf sets. The system spans
// its declared domain, not necessarily all of the host.
struct StarSystem {
    int host_n = 0;
    std::vector<int> centers;
    std::vector<VertexSet> leaves;  // parallel to centers
};

StarSystem star_system_of(const Graph& g, const StarCovering& cover);

// Directed graph on the centers: arc i -> j whenever a leaf of star i is
// adjacent to center j in the host.
struct StarDigraph {
    int host_n = 0;
    std::vector<int> centers;
    std::vector<std::vector<int>> out;  // center indices, ascending
};

StarDigraph build_digraph(const Graph& g, const StarSystem& sys);

// Centers reachable from `center` (a host vertex id), including itself.
VertexSet out_section(const StarDigraph& d, int center);

struct ForcedResult {
    VertexSet forced;
    std::optional<Edge> conflict;  // smallest host edge inside the forced set
};

// Union of the leaves over out_section(center). A conflict certifies that
// the covering is not a valid normal covering.
ForcedResult propagate_forced_independents(const Graph& g, const StarCovering& cover, int center);

struct BlockLayout {
    VertexSet excluded;             // J
    std::vector<VertexSet> blocks;  // pairwise disjoint, disjoint from J
};

// Stars of private neighbors: w outside the layout becomes a leaf of v in
// block i when v is w's only neighbor in blocks 1..i. Such a v is unique
// across all blocks, so the stars are disjoint by construction.
StarSystem private_star_system(const Graph& g, const BlockLayout& layout);

struct JqResult {
    bool satisfied = false;
    int start = -1;  // maximizing center, lowest index on ties; -1 if no centers
    VertexSet outsection;
    std::int64_t private_total = 0;
};

// Max over start centers of the total leaf count over the out-section.
JqResult check_jq(const Graph& g, const BlockLayout& layout, std::int64_t threshold);

// Strongly connected components of the digraph, one center-index list per
// component, in topological order of the condensation.
std::vector<std::vector<int>> strongly_connected_components(const StarDigraph& d);

struct BlocksResult {
    std::optional<BlockLayout> layout;
    std::string infeasible;  // reason when no layout
};

// Concatenates consecutive components into `block_count` blocks of size
// within [q_min, q_max], preserving topological order.
BlocksResult scc_blocks(const StarDigraph& d, int q_min, int q_max, int block_count = 10);

}  // namespace gnorm
