#include "gnorm/normality.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gnorm/cliques.hpp"
#include "gnorm/cycles.hpp"

namespace gnorm {

const char* to_string(Normality v) {
    switch (v) {
        case Normality::Normal: return "Normal";
        case Normality::NotNormal: return "NotNormal";
        default: return "BudgetExceeded";
    }
}

std::string Violation::describe() const {
    std::ostringstream s;
    switch (kind) {
        case Kind::NotClique:
            s << "cliques[" << i << "] is not a clique: " << u << " and " << v << " are non-adjacent";
            break;
        case Kind::NotIndependent:
            s << "independents[" << i << "] is not independent: edge {" << u << "," << v << "}";
            break;
        case Kind::CliqueCoverGap:
            s << "vertex " << u << " is not covered by the cliques";
            break;
        case Kind::IndependentCoverGap:
            s << "vertex " << u << " is not covered by the independent sets";
            break;
        case Kind::DisjointPair:
            s << "cliques[" << i << "] and independents[" << j << "] are disjoint";
            break;
    }
    return s.str();
}

namespace {

void check_universe(const Graph& g, const std::vector<VertexSet>& family, const char* what) {
    for (const auto& s : family)
        if (s.universe() != g.vertex_count())
            throw std::invalid_argument(std::string(what) + ": member universe does not match graph");
}

}  // namespace

VerifyResult verify_certificate(const Graph& g, const NormalCertificate& cert) {
    check_universe(g, cert.cliques, "verify_certificate cliques");
    check_universe(g, cert.independents, "verify_certificate independents");
    const int n = g.vertex_count();
    VerifyResult r;

    for (int i = 0; i < static_cast<int>(cert.cliques.size()); ++i) {
        const auto mem = cert.cliques[static_cast<size_t>(i)].members();
        for (size_t a = 0; a < mem.size(); ++a)
            for (size_t b = a + 1; b < mem.size(); ++b)
                if (!g.has_edge(mem[a], mem[b]))
                    r.violations.push_back({Violation::Kind::NotClique, i, -1, mem[a], mem[b]});
    }
    for (int i = 0; i < static_cast<int>(cert.independents.size()); ++i) {
        const auto mem = cert.independents[static_cast<size_t>(i)].members();
        for (size_t a = 0; a < mem.size(); ++a)
            for (size_t b = a + 1; b < mem.size(); ++b)
                if (g.has_edge(mem[a], mem[b]))
                    r.violations.push_back({Violation::Kind::NotIndependent, i, -1, mem[a], mem[b]});
    }

    VertexSet by_cliques(n), by_independents(n);
    for (const auto& c : cert.cliques) by_cliques |= c;
    for (const auto& s : cert.independents) by_independents |= s;
    for (int v = 0; v < n; ++v) {
        if (!by_cliques.test(v))
            r.violations.push_back({Violation::Kind::CliqueCoverGap, -1, -1, v, -1});
        if (!by_independents.test(v))
            r.violations.push_back({Violation::Kind::IndependentCoverGap, -1, -1, v, -1});
    }

    for (int i = 0; i < static_cast<int>(cert.cliques.size()); ++i)
        for (int j = 0; j < static_cast<int>(cert.independents.size()); ++j)
            if (!cert.cliques[static_cast<size_t>(i)].intersects(cert.independents[static_cast<size_t>(j)]))
                r.violations.push_back({Violation::Kind::DisjointPair, i, j, -1, -1});

    r.valid = r.violations.empty();
    return r;
}

namespace {

// Branch and prune over subfamilies of maximal cliques. A partial family is
// viable only while every vertex still lies in some independent set that
// meets all chosen cliques; on full clique coverage those independent sets
// are themselves a valid second family.
struct DecideSearch {
    enum class Step { Found, Exhausted, Budget };

    const std::vector<VertexSet>& mc;
    const std::vector<Bitset>& hit;       // clique index -> mask of compatible MIS
    const std::vector<Bitset>& cover_by;  // vertex -> mask of MIS containing it
    const std::vector<std::vector<int>>& cand;
    int n;
    VertexSet all_vertices;
    DecideBudget budget;
    std::chrono::steady_clock::time_point start;
    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    Bitset final_alive;

    bool over_budget() {
        if (nodes > budget.max_nodes) return true;
        if (budget.max_millis >= 0 && (nodes & 1023) == 0) {
            const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
            if (spent > budget.max_millis) return true;
        }
        return false;
    }

    bool union_covers_all(const Bitset& alive) const {
        for (int v = 0; v < n; ++v)
            if (!alive.intersects(cover_by[static_cast<size_t>(v)])) return false;
        return true;
    }

    Step go(const VertexSet& covered, const Bitset& alive) {
        if (covered == all_vertices) {
            final_alive = alive;
            return Step::Found;
        }
        int pick = -1, fewest = -1;
        for (int v = 0; v < n; ++v) {
            if (covered.test(v)) continue;
            const int k = static_cast<int>(cand[static_cast<size_t>(v)].size());
            if (fewest < 0 || k < fewest) {
                fewest = k;
                pick = v;
            }
        }
        for (int c : cand[static_cast<size_t>(pick)]) {
            ++nodes;
            if (over_budget()) return Step::Budget;
            Bitset next_alive = alive & hit[static_cast<size_t>(c)];
            if (!union_covers_all(next_alive)) continue;
            chosen.push_back(c);
            const Step s = go(covered | mc[static_cast<size_t>(c)], next_alive);
            if (s != Step::Exhausted) return s;
            chosen.pop_back();
        }
        return Step::Exhausted;
    }
};

}  // namespace

DecideResult decide_normal(const Graph& g, const DecideBudget& budget) {
    const int n = g.vertex_count();
    const auto mc = maximal_cliques(g);
    const auto mis = maximal_independent_sets(g);
    const int nm = static_cast<int>(mis.size());

    std::vector<Bitset> hit(mc.size(), Bitset(nm));
    for (size_t c = 0; c < mc.size(); ++c)
        for (int s = 0; s < nm; ++s)
            if (mc[c].intersects(mis[static_cast<size_t>(s)])) hit[c].set(s);
    std::vector<Bitset> cover_by(static_cast<size_t>(n), Bitset(nm));
    for (int s = 0; s < nm; ++s)
        mis[static_cast<size_t>(s)].for_each([&](int v) { cover_by[static_cast<size_t>(v)].set(s); });
    std::vector<std::vector<int>> cand(static_cast<size_t>(n));
    for (size_t c = 0; c < mc.size(); ++c)
        mc[c].for_each([&](int v) { cand[static_cast<size_t>(v)].push_back(static_cast<int>(c)); });

    DecideSearch search{mc,
                        hit,
                        cover_by,
                        cand,
                        n,
                        VertexSet::full(n),
                        budget,
                        std::chrono::steady_clock::now(),
                        0,
                        {},
                        Bitset(0)};
    const auto step = search.go(VertexSet(n), Bitset::full(nm));

    DecideResult out{Normality::NotNormal, std::nullopt, search.nodes};
    if (step == DecideSearch::Step::Budget) {
        out.outcome = Normality::BudgetExceeded;
        return out;
    }
    if (step == DecideSearch::Step::Exhausted) return out;

    NormalCertificate cert;
    for (int c : search.chosen) cert.cliques.push_back(mc[static_cast<size_t>(c)]);
    std::sort(cert.cliques.begin(), cert.cliques.end(), Bitset::value_less);
    search.final_alive.for_each([&](int s) { cert.independents.push_back(mis[static_cast<size_t>(s)]); });
    out.outcome = Normality::Normal;
    out.certificate = minimize_certificate(g, cert);
    return out;
}

NormalCertificate minimize_certificate(const Graph& g, const NormalCertificate& cert) {
    if (!verify_certificate(g, cert).valid)
        throw std::invalid_argument("minimize_certificate: certificate is not valid");
    NormalCertificate cur = cert;
    // Removal cannot break cross-intersections, only coverage, so each family
    // minimizes independently. Largest members first, bitset value on ties.
    // The scan indexes a frozen copy; cur only ever shrinks behind it.
    auto minimize_family = [&](bool on_cliques) {
        const std::vector<VertexSet> orig = on_cliques ? cur.cliques : cur.independents;
        std::vector<size_t> order(orig.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            const int ca = orig[a].count(), cb = orig[b].count();
            if (ca != cb) return ca > cb;
            return Bitset::value_less(orig[a], orig[b]);
        });
        std::vector<bool> removed(orig.size(), false);
        for (size_t k : order) {
            std::vector<VertexSet> rest;
            for (size_t t = 0; t < orig.size(); ++t)
                if (!removed[t] && t != k) rest.push_back(orig[t]);
            NormalCertificate trial = cur;
            (on_cliques ? trial.cliques : trial.independents) = rest;
            if (verify_certificate(g, trial).valid) {
                removed[k] = true;
                (on_cliques ? cur.cliques : cur.independents) = std::move(rest);
            }
        }
    };
    minimize_family(false);
    minimize_family(true);
    return cur;
}

StarCovering to_star_covering(const Graph& g, const NormalCertificate& cert) {
    const int n = g.vertex_count();
    if (n >= 3 && count_short_cycles(g, 3) > 0)
        throw std::invalid_argument("to_star_covering: graph has a triangle");
    if (!verify_certificate(g, cert).valid)
        throw std::invalid_argument("to_star_covering: certificate is not valid");

    std::set<int> singles;
    std::set<std::pair<int, int>> edges;
    for (const auto& c : cert.cliques) {
        const auto mem = c.members();
        if (mem.size() == 1) singles.insert(mem[0]);
        else if (mem.size() == 2) edges.insert({mem[0], mem[1]});
        // empty cliques contribute nothing
    }
    for (auto [u, v] : edges) {
        singles.erase(u);
        singles.erase(v);
    }

    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    // Deletion loop: smallest eligible edge in pair order, recomputed after
    // every removal. Both endpoints keep an edge, so coverage is preserved.
    while (true) {
        auto target = edges.end();
        for (auto it = edges.begin(); it != edges.end(); ++it)
            if (deg[static_cast<size_t>(it->first)] >= 2 && deg[static_cast<size_t>(it->second)] >= 2) {
                target = it;
                break;
            }
        if (target == edges.end()) break;
        --deg[static_cast<size_t>(target->first)];
        --deg[static_cast<size_t>(target->second)];
        edges.erase(target);
    }

    StarCovering out;
    out.centers = VertexSet(n);
    std::map<int, std::vector<int>> leaves_of;  // center -> leaves
    for (auto [u, v] : edges) {
        // Endpoints of degree >= 2 are hubs; a bare edge is centered at its
        // smaller endpoint.
        int center, leaf;
        if (deg[static_cast<size_t>(u)] >= 2) center = u, leaf = v;
        else if (deg[static_cast<size_t>(v)] >= 2) center = v, leaf = u;
        else center = u, leaf = v;
        leaves_of[center].push_back(leaf);
    }
    for (int v : singles) leaves_of.emplace(v, std::vector<int>{});

    for (auto& [center, leaves] : leaves_of) {
        out.centers.set(center);
        Star star{center, VertexSet(n)};
        for (int leaf : leaves) star.leaves.set(leaf);
        out.stars.push_back(std::move(star));
    }

    out.certificate.independents = cert.independents;
    for (int v : singles) out.certificate.cliques.push_back(VertexSet::of(n, {v}));
    for (auto [u, v] : edges) out.certificate.cliques.push_back(VertexSet::of(n, {u, v}));
    std::sort(out.certificate.cliques.begin(), out.certificate.cliques.end(), Bitset::value_less);

    if (!verify_star_covering(g, out).valid)
        throw std::logic_error("to_star_covering: reduction produced an invalid covering");
    return out;
}

VerifyResult verify_star_covering(const Graph& g, const StarCovering& cover) {
    VerifyResult r = verify_certificate(g, cover.certificate);

    const int n = g.vertex_count();
    std::set<int> singles;
    std::set<std::pair<int, int>> edges;
    for (const auto& c : cover.certificate.cliques) {
        const auto mem = c.members();
        if (mem.size() > 2) {
            r.violations.push_back({Violation::Kind::NotClique, -1, -1, mem[0], mem[1]});
            continue;
        }
        if (mem.size() == 1) singles.insert(mem[0]);
        if (mem.size() == 2) edges.insert({mem[0], mem[1]});
    }
    for (auto [u, v] : edges)
        if (singles.count(u) || singles.count(v))
            r.violations.push_back({Violation::Kind::NotClique, -1, -1, u, v});

    // Stars must match the clique edges exactly and be vertex-disjoint.
    VertexSet used(n);
    std::set<std::pair<int, int>> star_edges;
    std::set<int> trivial_centers;
    VertexSet centers_seen(n);
    for (const auto& star : cover.stars) {
        if (star.center < 0 || star.center >= n || star.leaves.universe() != n)
            throw std::invalid_argument("verify_star_covering: star out of range");
        centers_seen.set(star.center);
        if (used.test(star.center))
            r.violations.push_back({Violation::Kind::NotClique, -1, -1, star.center, -1});
        used.set(star.center);
        if (star.leaves.none()) trivial_centers.insert(star.center);
        for (int leaf : star.leaves.members()) {
            if (used.test(leaf))
                r.violations.push_back({Violation::Kind::NotClique, -1, -1, leaf, -1});
            used.set(leaf);
            star_edges.insert({std::min(star.center, leaf), std::max(star.center, leaf)});
        }
    }
    if (star_edges != edges || trivial_centers != singles || !(centers_seen == cover.centers))
        r.violations.push_back({Violation::Kind::NotClique, -1, -1, -1, -1});

    r.valid = r.violations.empty();
    return r;
}

}  // namespace gnorm
