#include "gnorm/cycles.hpp"

#include <deque>
#include <stdexcept>

namespace gnorm {

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (best == 3) break;
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q;
        dist[static_cast<size_t>(s)] = 0;
        parent[static_cast<size_t>(s)] = -1;
        q.push_back(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            if (best > 0 && 2 * dist[static_cast<size_t>(u)] + 1 >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    q.push_back(w);
                } else if (parent[static_cast<size_t>(u)] != w) {
                    const int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

// Shared DFS over paths root < v1 < ... in label order constraints: every
// path vertex exceeds the root and avoids `blocked`. Cycles close on an edge
// back to the root; direction is fixed by v1 < vk.
struct CycleWalker {
    const Graph& g;
    int max_len;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<char> on_path;
    std::vector<char> root_adj;
    std::vector<char> blocked;
    std::vector<int> path;
    bool stopped = false;

    CycleWalker(const Graph& gr, int L, const std::function<bool(const std::vector<int>&)>& f)
        : g(gr), max_len(L), visit(f) {
        const auto n = static_cast<size_t>(g.vertex_count());
        on_path.assign(n, 0);
        root_adj.assign(n, 0);
        blocked.assign(n, 0);
    }

    void run() {
        for (int root = 0; root < g.vertex_count() && !stopped; ++root) {
            if (blocked[static_cast<size_t>(root)]) continue;
            for (int w : g.neighbors(root)) root_adj[static_cast<size_t>(w)] = 1;
            path.assign(1, root);
            on_path[static_cast<size_t>(root)] = 1;
            extend(root);
            on_path[static_cast<size_t>(root)] = 0;
            for (int w : g.neighbors(root)) root_adj[static_cast<size_t>(w)] = 0;
        }
    }

    void extend(int u) {
        const int root = path.front();
        for (int w : g.neighbors(u)) {
            if (stopped) return;
            if (w <= root || on_path[static_cast<size_t>(w)] || blocked[static_cast<size_t>(w)]) continue;
            path.push_back(w);
            const int len = static_cast<int>(path.size());
            if (len >= 3 && root_adj[static_cast<size_t>(w)] && path[1] < w) {
                if (!visit(path)) {
                    stopped = true;
                    path.pop_back();
                    return;
                }
            }
            if (len < max_len) {
                on_path[static_cast<size_t>(w)] = 1;
                extend(w);
                on_path[static_cast<size_t>(w)] = 0;
            }
            path.pop_back();
        }
    }
};

}  // namespace

void enumerate_short_cycles(const Graph& g, int max_len,
                            const std::function<bool(const std::vector<int>&)>& visit) {
    if (max_len < 3) throw std::invalid_argument("enumerate_short_cycles: max_len < 3");
    CycleWalker walker(g, max_len, visit);
    walker.run();
}

std::int64_t count_short_cycles(const Graph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("count_short_cycles: max_len < 3");
    std::int64_t count = 0;
    enumerate_short_cycles(g, max_len, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

VertexSet short_cycle_transversal(const Graph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("short_cycle_transversal: max_len < 3");
    VertexSet hit(g.vertex_count());
    std::function<bool(const std::vector<int>&)> take = [&](const std::vector<int>&) { return false; };
    // Walk roots in order, excluding transversal vertices from paths; each
    // visited cycle is therefore disjoint from the current set, and taking
    // its root hits it and every other remaining cycle through that root.
    CycleWalker walker(g, max_len, take);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (hit.test(root)) continue;
        walker.stopped = false;
        for (int w : g.neighbors(root)) walker.root_adj[static_cast<size_t>(w)] = 1;
        walker.path.assign(1, root);
        walker.on_path[static_cast<size_t>(root)] = 1;
        walker.extend(root);
        walker.on_path[static_cast<size_t>(root)] = 0;
        for (int w : g.neighbors(root)) walker.root_adj[static_cast<size_t>(w)] = 0;
        if (walker.stopped) {  // a cycle avoiding earlier picks was found
            hit.set(root);
            walker.blocked[static_cast<size_t>(root)] = 1;
        }
    }
    return hit;
}

}  // namespace gnorm
