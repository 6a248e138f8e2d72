#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gnorm/bitset.hpp"

namespace gnorm {

using VertexSet = Bitset;
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted;
// no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    VertexSet neighbor_set(int v) const;
    std::vector<VertexSet> adjacency_bitsets() const;

    std::vector<Edge> edges() const;  // (u,v) with u < v, lexicographic

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::int64_t m_ = 0;
};

Graph complement(const Graph& g);

// Vertices are pairs (a,b) flattened as a*n2+b; (a,b)~(a',b') iff a~a' or b~b'.
Graph co_normal_product(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // new index -> original vertex, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace gnorm
