#include "gnorm/experiments.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gnorm/bipartite.hpp"
#include "gnorm/bounds.hpp"
#include "gnorm/cliques.hpp"
#include "gnorm/cycles.hpp"
#include "gnorm/graph.hpp"
#include "gnorm/normality.hpp"
#include "gnorm/sampling.hpp"
#include "gnorm/stars.hpp"

namespace gnorm {

namespace {

using nlohmann::json;

double resolve_p(int n, double p, double exponent) {
    if (p >= 0.0) return p;
    if (n <= 1) return 0.0;
    return std::pow(static_cast<double>(n), -exponent);
}

// Trials fill preallocated slots; aggregation reads them in index order, so
// the report is independent of scheduling.
template <typename Fn>
void for_each_trial(int trials, int threads, Fn&& fn) {
    if (threads <= 1) {
        for (int t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            const int t = next.fetch_add(1);
            if (t >= trials) return;
            fn(t);
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, trials);
    pool.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

json make_property(std::int64_t bad, std::int64_t trials, double ceiling) {
    const Interval w = wilson95(bad, trials);
    return json{{"trials", trials}, {"bad_events", bad}, {"ceiling", ceiling},
                {"wilson95", json::array({w.lo, w.hi})}};
}

std::int64_t count_bad(const std::vector<json>& slots, const char* key) {
    std::int64_t bad = 0;
    for (const auto& t : slots)
        if (t.at(key).get<int>() != 0) ++bad;
    return bad;
}

json finish_report(const char* suite, json config, json properties, std::vector<json> slots) {
    json report;
    report["suite"] = suite;
    report["config"] = std::move(config);
    report["properties"] = std::move(properties);
    report["trials"] = json(std::move(slots));
    return report;
}

}  // namespace

json run_lemma1(const Lemma1Config& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_lemma1: trials must be positive");
    const double p = resolve_p(cfg.n, cfg.p, cfg.exponent);
    const double d = cfg.n * p;
    const double nd = static_cast<double>(cfg.n);
    const double log_n = cfg.log_base > 0.0 ? std::log(nd) / std::log(cfg.log_base) : std::log(nd);
    const double cycle_threshold = cfg.cycle_factor * std::pow(nd, cfg.cycle_exponent);
    const double alpha_threshold = cfg.alpha_c * std::pow(nd, cfg.alpha_exponent) * log_n;
    const double degree_threshold = cfg.degree_mult * d;
    const double degree_ceiling = std::exp(-d / 10.0);

    std::vector<json> slots(static_cast<size_t>(cfg.trials));
    for_each_trial(cfg.trials, cfg.threads, [&](int t) {
        const Graph g = sample_gnp(cfg.n, p, cfg.seed, static_cast<std::uint64_t>(t));
        const std::int64_t x7 = count_short_cycles(g, cfg.max_cycle_len);
        const int alpha_bound = greedy_clique_cover_bound(g);
        int max_degree = 0;
        for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
        slots[static_cast<size_t>(t)] = json{
            {"trial", t},
            {"x7", x7},
            {"alpha_bound", alpha_bound},
            {"max_degree", max_degree},
            {"bad_cycles", static_cast<double>(x7) > cycle_threshold ? 1 : 0},
            {"bad_alpha", static_cast<double>(alpha_bound) >= alpha_threshold ? 1 : 0},
            {"bad_degree", static_cast<double>(max_degree) > degree_threshold ? 1 : 0}};
    });

    json properties;
    properties["cycles"] = make_property(count_bad(slots, "bad_cycles"), cfg.trials, 0.5);
    properties["alpha"] = make_property(count_bad(slots, "bad_alpha"), cfg.trials, 0.0);
    properties["degree"] = make_property(count_bad(slots, "bad_degree"), cfg.trials, degree_ceiling);

    json config{{"seed", cfg.seed},
                {"n", cfg.n},
                {"p", p},
                {"d", d},
                {"trials", cfg.trials},
                {"max_cycle_len", cfg.max_cycle_len},
                {"cycle_threshold", cycle_threshold},
                {"alpha_threshold", alpha_threshold},
                {"degree_threshold", degree_threshold},
                {"log_base", cfg.log_base}};
    return finish_report("lemma1", std::move(config), std::move(properties), std::move(slots));
}

json run_partial_cover(const PartialCoverConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_partial_cover: trials must be positive");
    const PartialCoverOptions opt{cfg.window_lo, cfg.window_hi};

    std::vector<json> slots(static_cast<size_t>(cfg.trials));
    for_each_trial(cfg.trials, cfg.threads, [&](int t) {
        const BipartiteGraph h =
            sample_bipartite(cfg.a_size, cfg.b_size, cfg.p, cfg.seed, static_cast<std::uint64_t>(t));
        const CoverResult r = greedy_partial_cover(h, opt);
        int reverify_failures = 0;
        if (r.cover) reverify_failures = static_cast<int>(verify_partial_cover(h, *r.cover).size());
        slots[static_cast<size_t>(t)] = json{{"trial", t},
                                             {"success", r.cover ? 1 : 0},
                                             {"pairs", r.diagnostics.pairs},
                                             {"covered", r.diagnostics.covered},
                                             {"edges", r.diagnostics.edges},
                                             {"quota", r.diagnostics.quota},
                                             {"a_window", r.diagnostics.a_window},
                                             {"b_window", r.diagnostics.b_window},
                                             {"bad_cover", r.cover ? 0 : 1},
                                             {"bad_reverify", reverify_failures > 0 ? 1 : 0}};
    });

    json properties;
    properties["cover"] = make_property(count_bad(slots, "bad_cover"), cfg.trials, 0.01);
    properties["reverify"] = make_property(count_bad(slots, "bad_reverify"), cfg.trials, 0.0);

    json config{{"seed", cfg.seed},     {"a", cfg.a_size},
                {"b", cfg.b_size},      {"p", cfg.p},
                {"trials", cfg.trials}, {"window_lo", cfg.window_lo},
                {"window_hi", cfg.window_hi}};
    return finish_report("partial-cover", std::move(config), std::move(properties), std::move(slots));
}

json run_transversal(const TransversalConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_transversal: trials must be positive");
    const double p = resolve_p(cfg.n, cfg.p, cfg.exponent);

    std::vector<json> slots(static_cast<size_t>(cfg.trials));
    for_each_trial(cfg.trials, cfg.threads, [&](int t) {
        const Graph g = sample_gnp(cfg.n, p, cfg.seed, static_cast<std::uint64_t>(t));
        const std::int64_t cycles = count_short_cycles(g, cfg.max_cycle_len);
        const VertexSet transversal = short_cycle_transversal(g, cfg.max_cycle_len);
        const VertexSet keep = transversal.complement_set();
        const InducedSubgraph rest = induced_subgraph(g, keep);
        const std::int64_t residual = count_short_cycles(rest.graph, cfg.max_cycle_len);
        slots[static_cast<size_t>(t)] =
            json{{"trial", t},
                 {"cycles", cycles},
                 {"transversal", transversal.count()},
                 {"residual_cycles", residual},
                 {"bad_size", static_cast<std::int64_t>(transversal.count()) > cycles ? 1 : 0},
                 {"bad_girth", residual != 0 ? 1 : 0}};
    });

    json properties;
    properties["size"] = make_property(count_bad(slots, "bad_size"), cfg.trials, 0.0);
    properties["girth"] = make_property(count_bad(slots, "bad_girth"), cfg.trials, 0.0);

    json config{{"seed", cfg.seed},
                {"n", cfg.n},
                {"p", p},
                {"max_cycle_len", cfg.max_cycle_len},
                {"trials", cfg.trials}};
    return finish_report("transversal", std::move(config), std::move(properties), std::move(slots));
}

json run_outsection(const OutsectionConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_outsection: trials must be positive");
    const DecideBudget budget{cfg.budget_nodes, cfg.budget_ms};

    std::vector<json> slots(static_cast<size_t>(cfg.trials));
    for_each_trial(cfg.trials, cfg.threads, [&](int t) {
        const Graph g = sample_triangle_free(cfg.n, cfg.p, cfg.seed, static_cast<std::uint64_t>(t));
        const DecideResult res = decide_normal(g, budget);
        json row{{"trial", t}, {"outcome", to_string(res.outcome)}, {"conflicts", 0},
                 {"centers", 0},  {"bad_conflict", 0}};
        if (res.outcome == Normality::Normal) {
            const StarCovering cover = to_star_covering(g, *res.certificate);
            int conflicts = 0;
            for (const Star& star : cover.stars)
                if (propagate_forced_independents(g, cover, star.center).conflict) ++conflicts;
            row["conflicts"] = conflicts;
            row["centers"] = static_cast<int>(cover.stars.size());
            row["bad_conflict"] = conflicts > 0 ? 1 : 0;
        }
        slots[static_cast<size_t>(t)] = std::move(row);
    });

    json properties;
    properties["conflicts"] = make_property(count_bad(slots, "bad_conflict"), cfg.trials, 0.0);

    json config{{"seed", cfg.seed},
                {"n", cfg.n},
                {"p", cfg.p},
                {"trials", cfg.trials},
                {"budget_nodes", cfg.budget_nodes},
                {"budget_ms", cfg.budget_ms}};
    return finish_report("outsection", std::move(config), std::move(properties), std::move(slots));
}

namespace {

BlockLayout consecutive_layout(int n, int j_size, int blocks, int q) {
    if (j_size < 0 || q < 1 || blocks < 1 ||
        static_cast<std::int64_t>(j_size) + static_cast<std::int64_t>(blocks) * q > n)
        throw std::invalid_argument("block layout does not fit into the vertex set");
    BlockLayout layout{VertexSet(n), {}};
    for (int v = 0; v < j_size; ++v) layout.excluded.set(v);
    for (int b = 0; b < blocks; ++b) {
        VertexSet block(n);
        const int base = j_size + b * q;
        for (int v = 0; v < q; ++v) block.set(base + v);
        layout.blocks.push_back(std::move(block));
    }
    return layout;
}

}  // namespace

json run_jq(const JqConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_jq: trials must be positive");
    const double p = resolve_p(cfg.n, cfg.p, cfg.exponent);
    const double d = cfg.n * p;
    const int q = cfg.block_size > 0
                      ? cfg.block_size
                      : static_cast<int>(std::llround(std::pow(static_cast<double>(cfg.n), 0.9) / 1000.0));
    const std::int64_t threshold =
        cfg.threshold >= 0 ? cfg.threshold : std::llround(static_cast<double>(q) * d / 10.0);
    const BlockLayout layout = consecutive_layout(cfg.n, cfg.j_size, cfg.blocks, q);

    std::vector<int> block_of(static_cast<size_t>(cfg.n), -1);
    for (size_t b = 0; b < layout.blocks.size(); ++b)
        for (int v : layout.blocks[b].members()) block_of[static_cast<size_t>(v)] = static_cast<int>(b);

    std::vector<json> slots(static_cast<size_t>(cfg.trials));
    for_each_trial(cfg.trials, cfg.threads, [&](int t) {
        const Graph g = sample_gnp(cfg.n, p, cfg.seed, static_cast<std::uint64_t>(t));
        const StarSystem sys = private_star_system(g, layout);
        const StarDigraph dg = build_digraph(g, sys);
        int forward_ok = 1;
        for (size_t i = 0; i < dg.out.size() && forward_ok; ++i)
            for (int j : dg.out[i])
                if (block_of[static_cast<size_t>(dg.centers[i])] >=
                    block_of[static_cast<size_t>(dg.centers[static_cast<size_t>(j)])]) {
                    forward_ok = 0;
                    break;
                }
        const JqResult jq = check_jq(g, layout, threshold);
        slots[static_cast<size_t>(t)] = json{{"trial", t},
                                             {"satisfied", jq.satisfied ? 1 : 0},
                                             {"start", jq.start},
                                             {"outsection_size", jq.outsection.count()},
                                             {"private_total", jq.private_total},
                                             {"forward_ok", forward_ok},
                                             {"bad_jq", jq.satisfied ? 0 : 1},
                                             {"bad_stratified", forward_ok ? 0 : 1}};
    });

    json properties;
    properties["jq"] = make_property(count_bad(slots, "bad_jq"), cfg.trials, 0.05);
    properties["stratified"] = make_property(count_bad(slots, "bad_stratified"), cfg.trials, 0.0);

    json config{{"seed", cfg.seed},     {"n", cfg.n},             {"p", p},
                {"d", d},               {"blocks", cfg.blocks},   {"block_size", q},
                {"j_size", cfg.j_size}, {"threshold", threshold}, {"trials", cfg.trials}};
    return finish_report("jq", std::move(config), std::move(properties), std::move(slots));
}

json run_layered(const LayeredConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_layered: trials must be positive");
    if (cfg.layers < 2) throw std::invalid_argument("run_layered: layers must be at least 2");
    const double p = resolve_p(cfg.n, cfg.p, cfg.exponent);
    const double d = cfg.n * p;
    const int q = cfg.block_size > 0 ? cfg.block_size : cfg.n / (2 * cfg.layers);
    const BlockLayout layout = consecutive_layout(cfg.n, 0, cfg.layers, q);
    const PartialCoverOptions opt{cfg.window_lo, cfg.window_hi};

    std::vector<json> slots(static_cast<size_t>(cfg.trials));
    for_each_trial(cfg.trials, cfg.threads, [&](int t) {
        const Graph g = sample_gnp(cfg.n, p, cfg.seed, static_cast<std::uint64_t>(t));
        const StarSystem sys = private_star_system(g, layout);
        // Blocks are consecutive ranges, so center index equals host id.

        struct Section {
            std::vector<int> centers;  // host ids
            VertexSet leaves;
        };
        std::vector<Section> sections;
        sections.reserve(static_cast<size_t>(q));
        for (int v = 0; v < q; ++v)
            sections.push_back({{v}, sys.leaves[static_cast<size_t>(v)]});

        std::vector<std::int64_t> layer_counts{static_cast<std::int64_t>(sections.size())};
        std::vector<int> layer_max{1};
        std::vector<double> layer_mean{1.0};
        int stall_layer = 0;

        for (int layer = 1; layer < cfg.layers; ++layer) {
            const int base = layer * q;
            BipartiteGraph h;
            h.a_size = static_cast<int>(sections.size());
            h.b_size = q;
            h.adj.assign(sections.size(), {});
            for (size_t s = 0; s < sections.size(); ++s) {
                auto& row = h.adj[s];
                sections[s].leaves.for_each([&](int leaf) {
                    for (int w : g.neighbors(leaf))
                        if (w >= base && w < base + q) row.push_back(w - base);
                });
                std::sort(row.begin(), row.end());
                row.erase(std::unique(row.begin(), row.end()), row.end());
                h.edge_count += static_cast<std::int64_t>(row.size());
            }

            const CoverResult r = greedy_partial_cover(h, opt);
            if (!r.cover) {
                stall_layer = layer + 1;
                break;
            }
            std::vector<Section> next;
            next.reserve(r.cover->pairs.size());
            int max_size = 0;
            std::int64_t size_sum = 0;
            for (const CoverPair& pair : r.cover->pairs) {
                Section grown = sections[static_cast<size_t>(pair.x)];
                pair.ys.for_each([&](int y) {
                    const int center = base + y;
                    grown.centers.push_back(center);
                    grown.leaves |= sys.leaves[static_cast<size_t>(center)];
                });
                max_size = std::max(max_size, static_cast<int>(grown.centers.size()));
                size_sum += static_cast<std::int64_t>(grown.centers.size());
                next.push_back(std::move(grown));
            }
            sections = std::move(next);
            layer_counts.push_back(static_cast<std::int64_t>(sections.size()));
            layer_max.push_back(max_size);
            layer_mean.push_back(static_cast<double>(size_sum) /
                                 static_cast<double>(sections.size()));
        }

        int monotone = 1;
        for (size_t i = 1; i < layer_max.size(); ++i)
            if (layer_max[i] < layer_max[i - 1]) monotone = 0;

        slots[static_cast<size_t>(t)] = json{{"trial", t},
                                             {"stall_layer", stall_layer},
                                             {"layers_realized", static_cast<int>(layer_max.size())},
                                             {"layer_counts", layer_counts},
                                             {"layer_max", layer_max},
                                             {"layer_mean", layer_mean},
                                             {"bad_monotone", monotone ? 0 : 1}};
    });

    json properties;
    properties["monotone"] = make_property(count_bad(slots, "bad_monotone"), cfg.trials, 0.05);

    json config{{"seed", cfg.seed},           {"n", cfg.n},
                {"p", p},                     {"d", d},
                {"layers", cfg.layers},       {"block_size", q},
                {"window_lo", cfg.window_lo}, {"window_hi", cfg.window_hi},
                {"trials", cfg.trials}};
    return finish_report("layered", std::move(config), std::move(properties), std::move(slots));
}

std::string report_csv(const nlohmann::json& report) {
    const auto& trials = report.at("trials");
    std::string out;
    if (trials.empty()) return out;

    std::vector<std::string> keys;
    for (auto it = trials.front().begin(); it != trials.front().end(); ++it) keys.push_back(it.key());
    for (size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ',';
        out += keys[i];
    }
    out += '\n';

    auto cell = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_structured()) {
            std::string quoted = "\"";
            for (char c : v.dump()) {
                if (c == '"') quoted += "\"\"";
                else quoted += c;
            }
            quoted += '"';
            return quoted;
        }
        return v.dump();
    };
    for (const auto& row : trials) {
        for (size_t i = 0; i < keys.size(); ++i) {
            if (i) out += ',';
            out += cell(row.at(keys[i]));
        }
        out += '\n';
    }
    return out;
}

bool property_within_ceiling(const nlohmann::json& report, const std::string& name) {
    const auto& prop = report.at("properties").at(name);
    const double freq = static_cast<double>(prop.at("bad_events").get<std::int64_t>()) /
                        static_cast<double>(prop.at("trials").get<std::int64_t>());
    return freq <= prop.at("ceiling").get<double>() + 1e-12;
}

bool report_within_ceilings(const nlohmann::json& report) {
    const auto& props = report.at("properties");
    for (auto it = props.begin(); it != props.end(); ++it)
        if (!property_within_ceiling(report, it.key())) return false;
    return true;
}

}  // namespace gnorm
