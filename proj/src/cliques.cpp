#include "gnorm/cliques.hpp"

#include <algorithm>

namespace gnorm {

namespace {

struct BronKerbosch {
    const std::vector<VertexSet>& nb;
    std::vector<VertexSet> out;

    void run(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.none() && x.none()) {
            out.push_back(r);
            return;
        }
        // Pivot: lowest-index vertex of maximum candidate degree in P ∪ X.
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            const int deg = (p & nb[static_cast<size_t>(u)]).count();
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        const VertexSet ext = p.and_not(nb[static_cast<size_t>(pivot)]);
        for (int v = ext.first(); v >= 0; v = ext.next(v)) {
            r.set(v);
            run(r, p & nb[static_cast<size_t>(v)], x & nb[static_cast<size_t>(v)]);
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {VertexSet(0)};
    BronKerbosch bk{g.adjacency_bitsets(), {}};
    VertexSet r(n);
    bk.run(r, VertexSet::full(n), VertexSet(n));
    std::sort(bk.out.begin(), bk.out.end(), Bitset::value_less);
    return bk.out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_cliques(complement(g));
}

namespace {

struct MisSearch {
    const std::vector<VertexSet>& nb;
    int best = 0;

    void run(const VertexSet& p, int have) {
        if (have + p.count() <= best) return;
        const int v = p.first();
        if (v < 0) {
            best = std::max(best, have);
            return;
        }
        // Branch on a highest-degree candidate (lowest index on ties).
        int pick = v, deg = -1;
        p.for_each([&](int u) {
            const int d = (p & nb[static_cast<size_t>(u)]).count();
            if (d > deg) {
                deg = d;
                pick = u;
            }
        });
        VertexSet in = p.and_not(nb[static_cast<size_t>(pick)]);
        in.reset(pick);
        run(in, have + 1);
        VertexSet rest = p;
        rest.reset(pick);
        run(rest, have);
    }
};

}  // namespace

int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    MisSearch s{g.adjacency_bitsets()};
    s.run(VertexSet::full(n), 0);
    return s.best;
}

int clique_number(const Graph& g) { return independence_number(complement(g)); }

int greedy_clique_cover_bound(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of(static_cast<size_t>(n), -1);
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v) {
        candidates.clear();
        for (int w : g.neighbors(v))
            if (w < v) candidates.push_back(class_of[static_cast<size_t>(w)]);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        int placed = -1;
        for (int c : candidates) {
            bool all = true;
            for (int member : classes[static_cast<size_t>(c)])
                if (!g.has_edge(member, v)) {
                    all = false;
                    break;
                }
            if (all) {
                placed = c;
                break;
            }
        }
        if (placed < 0) {
            placed = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<size_t>(placed)].push_back(v);
        class_of[static_cast<size_t>(v)] = placed;
    }
    return static_cast<int>(classes.size());
}

}  // namespace gnorm
