#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnorm/bitset.hpp"

namespace gnorm {

// Bipartition (A, B) with adjacency stored on the A side, sorted.
struct BipartiteGraph {
    int a_size = 0;
    int b_size = 0;
    std::vector<std::vector<int>> adj;  // adj[x] = B-neighbors of x in A
    std::int64_t edge_count = 0;
};

struct CoverPair {
    int x;      // A vertex
    Bitset ys;  // chosen B vertices, exactly the quota
};

struct PartialCover {
    std::vector<CoverPair> pairs;
};

struct PartialCoverOptions {
    // Degree windows relative to the observed averages m/|A| and m/|B|.
    double window_lo = 0.99;
    double window_hi = 1.01;
};

struct CoverDiagnostics {
    std::int64_t pairs = 0;
    std::int64_t covered = 0;      // |union of Y|
    std::int64_t edges = 0;        // m
    std::int64_t good_edges = 0;   // edges between A' and B'
    std::int64_t a_window = 0;     // |A'|
    std::int64_t b_window = 0;     // |B'|
    std::int64_t quota = 0;        // required |Y_i|
};

struct CoverResult {
    std::optional<PartialCover> cover;  // present on success
    CoverDiagnostics diagnostics;
};

// Greedy pairs (x_i, Y_i): x_i is the lowest unused A'-vertex with at least
// ceil(m / 3|A|) neighbors in B' not yet taken; Y_i is exactly that many,
// lowest indices first. Success once a third of B is covered.
CoverResult greedy_partial_cover(const BipartiteGraph& h, const PartialCoverOptions& opt = {});

// Independent re-check of every PartialCover invariant; empty when valid.
std::vector<std::string> verify_partial_cover(const BipartiteGraph& h, const PartialCover& cover);

}  // namespace gnorm
