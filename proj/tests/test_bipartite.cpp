#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gnorm/bipartite.hpp"
#include "gnorm/sampling.hpp"

using namespace gnorm;

namespace {

BipartiteGraph complete_bipartite(int a, int b) {
    BipartiteGraph h;
    h.a_size = a;
    h.b_size = b;
    h.adj.assign(static_cast<size_t>(a), {});
    for (auto& row : h.adj)
        for (int y = 0; y < b; ++y) row.push_back(y);
    h.edge_count = static_cast<std::int64_t>(a) * b;
    return h;
}

}  // namespace

TEST_CASE("complete host is covered by one pair") {
    // Quota is ceil(54 / 18) = 3, and covering 3 of 9 already reaches a third.
    auto h = complete_bipartite(6, 9);
    auto res = greedy_partial_cover(h);
    REQUIRE(res.cover.has_value());
    CHECK(res.diagnostics.quota == 3);
    CHECK(res.diagnostics.covered * 3 >= h.b_size);
    REQUIRE(res.cover->pairs.size() == 1);
    CHECK(res.cover->pairs[0].x == 0);
    CHECK(res.cover->pairs[0].ys == Bitset::of(9, {0, 1, 2}));
    CHECK(verify_partial_cover(h, *res.cover).empty());
}

TEST_CASE("empty host stalls with diagnostics") {
    BipartiteGraph h;
    h.a_size = 5;
    h.b_size = 6;
    h.adj.assign(5, {});
    auto res = greedy_partial_cover(h);
    CHECK_FALSE(res.cover.has_value());
    CHECK(res.diagnostics.pairs == 0);
    CHECK(res.diagnostics.covered == 0);
    CHECK(res.diagnostics.edges == 0);
}

TEST_CASE("tight windows can empty the working sets") {
    // One heavy A vertex and one light one: neither is near the average.
    BipartiteGraph h;
    h.a_size = 2;
    h.b_size = 12;
    h.adj = {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11}};
    h.edge_count = 12;
    auto res = greedy_partial_cover(h, PartialCoverOptions{0.99, 1.01});
    CHECK_FALSE(res.cover.has_value());
    CHECK(res.diagnostics.a_window == 0);

    // The same host succeeds once the window is wide open.
    auto wide = greedy_partial_cover(h, PartialCoverOptions{0.0, 10.0});
    REQUIRE(wide.cover.has_value());
    CHECK(verify_partial_cover(h, *wide.cover).empty());
}

TEST_CASE("verify rejects tampered covers") {
    auto h = complete_bipartite(9, 12);
    auto res = greedy_partial_cover(h);
    REQUIRE(res.cover.has_value());
    REQUIRE(verify_partial_cover(h, *res.cover).empty());
    PartialCover cover = *res.cover;

    auto repeat_x = cover;
    repeat_x.pairs.push_back(cover.pairs[0]);
    CHECK_FALSE(verify_partial_cover(h, repeat_x).empty());

    auto short_y = cover;
    short_y.pairs[0].ys.reset(short_y.pairs[0].ys.first());
    CHECK_FALSE(verify_partial_cover(h, short_y).empty());

    auto foreign = cover;
    foreign.pairs[0].x = h.a_size - 1;  // same Y, but that x misses nothing in K_ab
    CHECK(verify_partial_cover(h, foreign).empty());
    BipartiteGraph sparse = h;
    sparse.adj[static_cast<size_t>(h.a_size - 1)].clear();
    sparse.edge_count -= h.b_size;
    CHECK_FALSE(verify_partial_cover(sparse, foreign).empty());
}

TEST_CASE("random hosts succeed and reverify under wide windows") {
    const PartialCoverOptions wide{0.8, 1.2};
    int successes = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto h = sample_bipartite(500, 500, 0.1, 4242, t);
        auto res = greedy_partial_cover(h, wide);
        if (!res.cover) continue;
        ++successes;
        CHECK(verify_partial_cover(h, *res.cover).empty());
        CHECK(res.diagnostics.covered * 3 >= h.b_size);
        const std::int64_t quota = res.diagnostics.quota;
        for (const auto& pr : res.cover->pairs) CHECK(pr.ys.count() == quota);
    }
    CHECK(successes == 20);
}

TEST_CASE("disjointness across pairs is enforced") {
    auto h = complete_bipartite(4, 6);
    auto res = greedy_partial_cover(h);
    REQUIRE(res.cover.has_value());
    PartialCover cover = *res.cover;
    cover.pairs.push_back(CoverPair{h.a_size - 1, cover.pairs[0].ys});
    CHECK_FALSE(verify_partial_cover(h, cover).empty());
}
