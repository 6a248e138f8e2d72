#include "gnorm/bipartite.hpp"

#include <algorithm>
#include <cmath>

namespace gnorm {

CoverResult greedy_partial_cover(const BipartiteGraph& h, const PartialCoverOptions& opt) {
    CoverResult r;
    auto& d = r.diagnostics;
    d.edges = h.edge_count;
    if (h.a_size == 0 || h.b_size == 0 || h.edge_count == 0) return r;

    const double avg_a = static_cast<double>(h.edge_count) / h.a_size;
    const double avg_b = static_cast<double>(h.edge_count) / h.b_size;
    std::vector<char> a_ok(static_cast<size_t>(h.a_size), 0);
    std::vector<char> b_ok(static_cast<size_t>(h.b_size), 0);
    std::vector<int> b_deg(static_cast<size_t>(h.b_size), 0);
    for (int x = 0; x < h.a_size; ++x)
        for (int y : h.adj[static_cast<size_t>(x)]) ++b_deg[static_cast<size_t>(y)];
    for (int x = 0; x < h.a_size; ++x) {
        const auto deg = static_cast<double>(h.adj[static_cast<size_t>(x)].size());
        if (deg >= opt.window_lo * avg_a && deg <= opt.window_hi * avg_a) {
            a_ok[static_cast<size_t>(x)] = 1;
            ++d.a_window;
        }
    }
    for (int y = 0; y < h.b_size; ++y) {
        const auto deg = static_cast<double>(b_deg[static_cast<size_t>(y)]);
        if (deg >= opt.window_lo * avg_b && deg <= opt.window_hi * avg_b) {
            b_ok[static_cast<size_t>(y)] = 1;
            ++d.b_window;
        }
    }
    for (int x = 0; x < h.a_size; ++x) {
        if (!a_ok[static_cast<size_t>(x)]) continue;
        for (int y : h.adj[static_cast<size_t>(x)])
            if (b_ok[static_cast<size_t>(y)]) ++d.good_edges;
    }

    const std::int64_t quota =
        (h.edge_count + 3LL * h.a_size - 1) / (3LL * h.a_size);  // ceil(m / 3|A|)
    d.quota = quota;

    // The pool B' \ Y only shrinks, so a vertex of A that is ever skipped
    // stays ineligible and one ascending sweep is the full greedy loop.
    PartialCover cover;
    std::vector<char> taken(static_cast<size_t>(h.b_size), 0);
    std::int64_t covered = 0;
    bool done = 3 * covered >= h.b_size;
    for (int x = 0; x < h.a_size && !done; ++x) {
        if (!a_ok[static_cast<size_t>(x)]) continue;
        std::vector<int> fresh;
        for (int y : h.adj[static_cast<size_t>(x)]) {
            if (b_ok[static_cast<size_t>(y)] && !taken[static_cast<size_t>(y)]) {
                fresh.push_back(y);
                if (static_cast<std::int64_t>(fresh.size()) == quota) break;
            }
        }
        if (static_cast<std::int64_t>(fresh.size()) < quota) continue;
        CoverPair pair{x, Bitset(h.b_size)};
        for (int y : fresh) {
            pair.ys.set(y);
            taken[static_cast<size_t>(y)] = 1;
        }
        cover.pairs.push_back(std::move(pair));
        covered += quota;
        done = 3 * covered >= h.b_size;
    }

    d.pairs = static_cast<std::int64_t>(cover.pairs.size());
    d.covered = covered;
    if (done) r.cover = std::move(cover);
    return r;
}

std::vector<std::string> verify_partial_cover(const BipartiteGraph& h, const PartialCover& cover) {
    std::vector<std::string> faults;
    if (h.a_size == 0) {
        faults.push_back("empty A side");
        return faults;
    }
    const std::int64_t quota = (h.edge_count + 3LL * h.a_size - 1) / (3LL * h.a_size);

    std::vector<char> used_a(static_cast<size_t>(h.a_size), 0);
    Bitset all_y(h.b_size);
    for (size_t i = 0; i < cover.pairs.size(); ++i) {
        const auto& pair = cover.pairs[i];
        const auto tag = "pair " + std::to_string(i);
        if (pair.x < 0 || pair.x >= h.a_size || pair.ys.universe() != h.b_size) {
            faults.push_back(tag + ": out of range");
            continue;
        }
        if (used_a[static_cast<size_t>(pair.x)]) faults.push_back(tag + ": repeated A vertex");
        used_a[static_cast<size_t>(pair.x)] = 1;
        if (pair.ys.count() != static_cast<int>(quota))
            faults.push_back(tag + ": |Y| != " + std::to_string(quota));
        if (all_y.intersects(pair.ys)) faults.push_back(tag + ": Y sets overlap");
        all_y |= pair.ys;
        const auto& nbrs = h.adj[static_cast<size_t>(pair.x)];
        for (int y : pair.ys.members())
            if (!std::binary_search(nbrs.begin(), nbrs.end(), y))
                faults.push_back(tag + ": " + std::to_string(y) + " is not a neighbor");
    }
    if (3 * static_cast<std::int64_t>(all_y.count()) < h.b_size)
        faults.push_back("covered fewer than |B|/3 vertices");
    return faults;
}

}  // namespace gnorm
