#include "gnorm/stars.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gnorm {

namespace {

int center_index_of(const std::vector<int>& centers, int center) {
    for (size_t i = 0; i < centers.size(); ++i)
        if (centers[i] == center) return static_cast<int>(i);
    return -1;
}

}  // namespace

StarSystem star_system_of(const Graph& g, const StarCovering& cover) {
    const int n = g.vertex_count();
    StarSystem sys;
    sys.host_n = n;
    std::vector<const Star*> order;
    for (const auto& star : cover.stars) {
        if (star.center < 0 || star.center >= n || star.leaves.universe() != n)
            throw std::invalid_argument("star_system_of: star out of range");
        order.push_back(&star);
    }
    std::sort(order.begin(), order.end(),
              [](const Star* a, const Star* b) { return a->center < b->center; });
    VertexSet used(n);
    for (const Star* star : order) {
        if (used.test(star->center))
            throw std::invalid_argument("star_system_of: stars are not vertex-disjoint");
        used.set(star->center);
        for (int leaf : star->leaves.members()) {
            if (used.test(leaf))
                throw std::invalid_argument("star_system_of: stars are not vertex-disjoint");
            used.set(leaf);
        }
        sys.centers.push_back(star->center);
        sys.leaves.push_back(star->leaves);
    }
    return sys;
}

StarDigraph build_digraph(const Graph& g, const StarSystem& sys) {
    const int n = g.vertex_count();
    if (sys.host_n != n) throw std::invalid_argument("build_digraph: host mismatch");
    const int k = static_cast<int>(sys.centers.size());
    std::vector<int> index_of(static_cast<size_t>(n), -1);
    for (int i = 0; i < k; ++i) {
        const int c = sys.centers[static_cast<size_t>(i)];
        if (c < 0 || c >= n || index_of[static_cast<size_t>(c)] != -1)
            throw std::invalid_argument("build_digraph: bad center list");
        index_of[static_cast<size_t>(c)] = i;
    }

    StarDigraph d;
    d.host_n = n;
    d.centers = sys.centers;
    d.out.assign(static_cast<size_t>(k), {});
    for (int i = 0; i < k; ++i) {
        auto& arcs = d.out[static_cast<size_t>(i)];
        sys.leaves[static_cast<size_t>(i)].for_each([&](int leaf) {
            for (int w : g.neighbors(leaf)) {
                const int j = index_of[static_cast<size_t>(w)];
                if (j >= 0 && j != i) arcs.push_back(j);
            }
        });
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    }
    return d;
}

VertexSet out_section(const StarDigraph& d, int center) {
    const int start = center_index_of(d.centers, center);
    if (start < 0) throw std::invalid_argument("out_section: unknown center");
    const int k = static_cast<int>(d.centers.size());
    std::vector<char> seen(static_cast<size_t>(k), 0);
    std::vector<int> queue{start};
    seen[static_cast<size_t>(start)] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int j : d.out[static_cast<size_t>(queue[head])])
            if (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                queue.push_back(j);
            }
    VertexSet section(d.host_n);
    for (int i = 0; i < k; ++i)
        if (seen[static_cast<size_t>(i)]) section.set(d.centers[static_cast<size_t>(i)]);
    return section;
}

ForcedResult propagate_forced_independents(const Graph& g, const StarCovering& cover, int center) {
    const StarSystem sys = star_system_of(g, cover);
    const StarDigraph d = build_digraph(g, sys);
    const VertexSet section = out_section(d, center);

    ForcedResult r{VertexSet(g.vertex_count()), std::nullopt};
    for (size_t i = 0; i < sys.centers.size(); ++i)
        if (section.test(sys.centers[i])) r.forced |= sys.leaves[i];

    for (int u : r.forced.members()) {
        if (r.conflict) break;
        for (int w : g.neighbors(u)) {
            if (w > u && r.forced.test(w)) {
                r.conflict = Edge{u, w};
                break;
            }
        }
    }
    return r;
}

StarSystem private_star_system(const Graph& g, const BlockLayout& layout) {
    const int n = g.vertex_count();
    if (layout.excluded.universe() != n)
        throw std::invalid_argument("private_star_system: layout universe mismatch");
    std::vector<int> block_of(static_cast<size_t>(n), -1);
    std::vector<char> in_layout(static_cast<size_t>(n), 0);
    for (int v : layout.excluded.members()) in_layout[static_cast<size_t>(v)] = 1;
    for (size_t b = 0; b < layout.blocks.size(); ++b) {
        if (layout.blocks[b].universe() != n)
            throw std::invalid_argument("private_star_system: layout universe mismatch");
        for (int v : layout.blocks[b].members()) {
            if (in_layout[static_cast<size_t>(v)])
                throw std::invalid_argument("private_star_system: layout sets overlap");
            in_layout[static_cast<size_t>(v)] = 1;
            block_of[static_cast<size_t>(v)] = static_cast<int>(b);
        }
    }

    StarSystem sys;
    sys.host_n = n;
    std::vector<int> index_of(static_cast<size_t>(n), -1);
    for (const auto& block : layout.blocks)
        for (int v : block.members()) {
            index_of[static_cast<size_t>(v)] = static_cast<int>(sys.centers.size());
            sys.centers.push_back(v);
            sys.leaves.emplace_back(n);
        }

    // w is private to its unique neighbor in the first block its
    // neighborhood touches; a second neighbor there voids privateness.
    for (int w = 0; w < n; ++w) {
        if (in_layout[static_cast<size_t>(w)]) continue;
        int first_block = -1, owner = -1, hits = 0;
        for (int v : g.neighbors(w)) {
            const int b = block_of[static_cast<size_t>(v)];
            if (b < 0) continue;
            if (first_block < 0 || b < first_block) {
                first_block = b;
                owner = v;
                hits = 1;
            } else if (b == first_block) {
                ++hits;
            }
        }
        if (hits == 1) sys.leaves[static_cast<size_t>(index_of[static_cast<size_t>(owner)])].set(w);
    }
    return sys;
}

JqResult check_jq(const Graph& g, const BlockLayout& layout, std::int64_t threshold) {
    const StarSystem sys = private_star_system(g, layout);
    const StarDigraph d = build_digraph(g, sys);
    const int k = static_cast<int>(sys.centers.size());

    JqResult best;
    best.outsection = VertexSet(g.vertex_count());
    for (int i = 0; i < k; ++i) {
        const VertexSet section = out_section(d, sys.centers[static_cast<size_t>(i)]);
        std::int64_t total = 0;
        for (int t = 0; t < k; ++t)
            if (section.test(sys.centers[static_cast<size_t>(t)]))
                total += sys.leaves[static_cast<size_t>(t)].count();
        if (best.start < 0 || total > best.private_total) {
            best.start = sys.centers[static_cast<size_t>(i)];
            best.outsection = section;
            best.private_total = total;
        }
    }
    best.satisfied = best.private_total >= threshold;
    return best;
}

std::vector<std::vector<int>> strongly_connected_components(const StarDigraph& d) {
    const int k = static_cast<int>(d.centers.size());
    std::vector<int> index(static_cast<size_t>(k), -1), low(static_cast<size_t>(k), 0);
    std::vector<char> on_stack(static_cast<size_t>(k), 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    struct Frame {
        int v;
        size_t next;
    };
    for (int root = 0; root < k; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& arcs = d.out[static_cast<size_t>(f.v)];
            if (f.next < arcs.size()) {
                const int w = arcs[f.next++];
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
                }
                continue;
            }
            if (low[static_cast<size_t>(f.v)] == index[static_cast<size_t>(f.v)]) {
                std::vector<int> comp;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = 0;
                    comp.push_back(w);
                    if (w == f.v) break;
                }
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
            const int v = f.v;
            frames.pop_back();
            if (!frames.empty())
                low[static_cast<size_t>(frames.back().v)] =
                    std::min(low[static_cast<size_t>(frames.back().v)], low[static_cast<size_t>(v)]);
        }
    }
    // Tarjan emits sinks first; reverse for a topological order.
    std::reverse(components.begin(), components.end());
    return components;
}

BlocksResult scc_blocks(const StarDigraph& d, int q_min, int q_max, int block_count) {
    if (q_min < 1 || q_max < q_min || block_count < 1)
        throw std::invalid_argument("scc_blocks: bad size bounds");
    const auto components = strongly_connected_components(d);
    for (const auto& comp : components)
        if (static_cast<int>(comp.size()) > q_max)
            return {std::nullopt, "component of size " + std::to_string(comp.size()) +
                                      " exceeds q_max " + std::to_string(q_max)};

    std::vector<std::int64_t> suffix(components.size() + 1, 0);
    for (size_t i = components.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + static_cast<std::int64_t>(components[i].size());

    BlockLayout layout{VertexSet(d.host_n), {}};
    size_t i = 0;
    for (int b = 0; b < block_count; ++b) {
        const int blocks_after = block_count - b - 1;
        VertexSet block(d.host_n);
        int size = 0;
        while (size < q_min) {
            if (i == components.size())
                return {std::nullopt, "insufficient component mass for block " + std::to_string(b + 1)};
            const int add = static_cast<int>(components[i].size());
            if (size + add > q_max)
                return {std::nullopt, "components do not pack into [q_min, q_max] at block " +
                                          std::to_string(b + 1)};
            for (int idx : components[i]) block.set(d.centers[static_cast<size_t>(idx)]);
            size += add;
            ++i;
        }
        while (i < components.size()) {
            const int add = static_cast<int>(components[i].size());
            if (size + add > q_max) break;
            if (suffix[i + 1] < static_cast<std::int64_t>(q_min) * blocks_after) break;
            for (int idx : components[i]) block.set(d.centers[static_cast<size_t>(idx)]);
            size += add;
            ++i;
        }
        layout.blocks.push_back(std::move(block));
    }
    return {std::move(layout), ""};
}

}  // namespace gnorm
