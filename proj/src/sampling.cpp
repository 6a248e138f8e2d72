#include "gnorm/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "gnorm/rng.hpp"

namespace gnorm {

namespace {

constexpr std::uint64_t kGnpTag = 0x6e70ULL;
constexpr std::uint64_t kBipartiteTag = 0x6269ULL;
constexpr std::uint64_t kTriangleFreeTag = 0x7466ULL;

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
}

// Unordered pairs in lexicographic order: index(i,j) = i(2n-i-1)/2 + j-i-1.
std::pair<int, int> pair_of_index(std::int64_t k, int n) {
    const auto offset = [n](std::int64_t t) { return t * (2 * n - t - 1) / 2; };
    const double nn = 2.0 * n - 1.0;
    auto i = static_cast<std::int64_t>((nn - std::sqrt(nn * nn - 8.0 * static_cast<double>(k))) / 2.0);
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    while (i > 0 && offset(i) > k) --i;
    while (offset(i + 1) <= k) ++i;
    const auto j = i + 1 + (k - offset(i));
    return {static_cast<int>(i), static_cast<int>(j)};
}

// Geometric jumps between successes; every edge costs one uniform draw.
template <typename Emit>
void sample_pairs(std::int64_t total, double p, Rng& rng, Emit&& emit) {
    if (total <= 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::int64_t k = 0; k < total; ++k) emit(k);
        return;
    }
    const double logq = std::log1p(-p);
    std::int64_t k = -1;
    while (true) {
        const double u = rng.next_double();
        const double skip = std::floor(std::log1p(-u) / logq);
        const double next = static_cast<double>(k) + 1.0 + skip;
        if (next >= static_cast<double>(total)) break;
        k = static_cast<std::int64_t>(next);
        emit(k);
    }
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t trial) {
    if (n < 0) throw std::invalid_argument("sample_gnp: negative n");
    check_probability(p);
    Rng rng = substream(mix64(seed ^ kGnpTag), trial);
    std::vector<Edge> edges;
    sample_pairs(static_cast<std::int64_t>(n) * (n - 1) / 2, p, rng,
                 [&](std::int64_t k) { edges.push_back(pair_of_index(k, n)); });
    return Graph::from_edges(n, edges);
}

BipartiteGraph sample_bipartite(int a_size, int b_size, double p, std::uint64_t seed,
                                std::uint64_t trial) {
    if (a_size < 0 || b_size < 0) throw std::invalid_argument("sample_bipartite: negative side");
    check_probability(p);
    Rng rng = substream(mix64(seed ^ kBipartiteTag), trial);
    BipartiteGraph h;
    h.a_size = a_size;
    h.b_size = b_size;
    h.adj.assign(static_cast<size_t>(a_size), {});
    sample_pairs(static_cast<std::int64_t>(a_size) * b_size, p, rng, [&](std::int64_t k) {
        h.adj[static_cast<size_t>(k / b_size)].push_back(static_cast<int>(k % b_size));
        ++h.edge_count;
    });
    return h;
}

Graph sample_triangle_free(int n, double p, std::uint64_t seed, std::uint64_t trial) {
    if (n < 0) throw std::invalid_argument("sample_triangle_free: negative n");
    check_probability(p);
    Rng rng = substream(mix64(seed ^ kTriangleFreeTag), trial);
    std::vector<VertexSet> nbr(static_cast<size_t>(n), VertexSet(n));
    std::vector<Edge> kept;
    sample_pairs(static_cast<std::int64_t>(n) * (n - 1) / 2, p, rng, [&](std::int64_t k) {
        const auto [u, v] = pair_of_index(k, n);
        if (nbr[static_cast<size_t>(u)].intersects(nbr[static_cast<size_t>(v)])) return;
        nbr[static_cast<size_t>(u)].set(v);
        nbr[static_cast<size_t>(v)].set(u);
        kept.push_back({u, v});
    });
    return Graph::from_edges(n, kept);
}

}  // namespace gnorm
