#include "gnorm/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnorm {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(static_cast<size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("Graph: vertex out of range");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (auto [u, v] : norm) {
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    g.m_ = static_cast<std::int64_t>(norm.size());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

VertexSet Graph::neighbor_set(int v) const {
    VertexSet s(vertex_count());
    for (int w : neighbors(v)) s.set(w);
    return s;
}

std::vector<VertexSet> Graph::adjacency_bitsets() const {
    std::vector<VertexSet> rows;
    rows.reserve(adj_.size());
    for (int v = 0; v < vertex_count(); ++v) rows.push_back(neighbor_set(v));
    return rows;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        size_t k = 0;
        for (int v = u + 1; v < n; ++v) {
            while (k < nb.size() && nb[k] < v) ++k;
            if (k == nb.size() || nb[k] != v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph co_normal_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    const std::int64_t n = static_cast<std::int64_t>(n1) * n2;
    if (n > 4'000'000) throw std::invalid_argument("co_normal_product: result too large");
    std::vector<Edge> edges;
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
            const int x = a * n2 + b;
            // a~c pairs: any second coordinate
            for (int c : g1.neighbors(a)) {
                if (c < a) continue;
                for (int d2 = 0; d2 < n2; ++d2) {
                    const int y = c * n2 + d2;
                    if (y > x) edges.emplace_back(x, y);
                }
            }
            // a==c, b~d pairs
            for (int d2 : g2.neighbors(b))
                if (d2 > b) edges.emplace_back(x, a * n2 + d2);
        }
    return Graph::from_edges(static_cast<int>(n), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: universe mismatch");
    InducedSubgraph out;
    out.vertices = keep.members();
    std::vector<int> new_index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < out.vertices.size(); ++i)
        new_index[static_cast<size_t>(out.vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : out.vertices)
        for (int v : g.neighbors(u))
            if (u < v && keep.test(v))
                edges.emplace_back(new_index[static_cast<size_t>(u)], new_index[static_cast<size_t>(v)]);
    out.graph = Graph::from_edges(static_cast<int>(out.vertices.size()), edges);
    return out;
}

}  // namespace gnorm
