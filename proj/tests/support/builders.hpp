#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gnorm/graph.hpp"

namespace testsupport {

// Rooted AHU encoding; children sorted, so the string is isomorphism-invariant.
inline std::string ahu_string(int root, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> kids;
    for (int w : adj[static_cast<size_t>(root)])
        if (w != parent) kids.push_back(ahu_string(w, root, adj));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

inline std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> degree(static_cast<size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        if (degree[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[static_cast<size_t>(v)])
                if (--degree[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

inline std::string tree_canonical(int n, const std::vector<gnorm::Edge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::string best;
    for (int c : tree_centroids(adj)) {
        std::string s = ahu_string(c, -1, adj);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

// All trees with up to max_n vertices, one per isomorphism class, built by
// leaf extension with canonical-form deduplication.
inline std::vector<gnorm::Graph> all_trees_up_to(int max_n) {
    std::vector<gnorm::Graph> out;
    std::vector<std::vector<gnorm::Edge>> level{{}};  // the 1-vertex tree
    out.push_back(gnorm::Graph(1));
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::string> seen;
        std::vector<std::vector<gnorm::Edge>> next;
        for (const auto& tree : level) {
            for (int attach = 0; attach < n - 1; ++attach) {
                auto grown = tree;
                grown.push_back({attach, n - 1});
                if (seen.insert(tree_canonical(n, grown)).second) {
                    next.push_back(grown);
                    out.push_back(gnorm::Graph::from_edges(n, grown));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

inline std::vector<int> tree_counts_by_order(const std::vector<gnorm::Graph>& trees, int max_n) {
    std::vector<int> counts(static_cast<size_t>(max_n) + 1, 0);
    for (const auto& t : trees) ++counts[static_cast<size_t>(t.vertex_count())];
    return counts;
}

// Labeled graph with edge set given by mask over pairs in lexicographic order.
inline gnorm::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<gnorm::Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.push_back({u, v});
    return gnorm::Graph::from_edges(n, edges);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace testsupport
