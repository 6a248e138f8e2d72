#include <cstdint>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnorm/experiments.hpp"
#include "gnorm/graph_io.hpp"
#include "gnorm/json_io.hpp"
#include "gnorm/normality.hpp"
#include "gnorm/sampling.hpp"

namespace {

using nlohmann::json;

constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

void print_config(const json& cfg) { std::cerr << "# config " << cfg.dump() << "\n"; }

void emit(const json& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << body.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

const char* violation_kind(gnorm::Violation::Kind k) {
    switch (k) {
        case gnorm::Violation::Kind::NotClique: return "not_clique";
        case gnorm::Violation::Kind::NotIndependent: return "not_independent";
        case gnorm::Violation::Kind::CliqueCoverGap: return "clique_cover_gap";
        case gnorm::Violation::Kind::IndependentCoverGap: return "independent_cover_gap";
        default: return "disjoint_pair";
    }
}

json violations_to_json(const gnorm::VerifyResult& r) {
    json arr = json::array();
    for (const auto& v : r.violations)
        arr.push_back(json{{"kind", violation_kind(v.kind)}, {"message", v.describe()}});
    return arr;
}

struct CheckArgs {
    std::string graph, format, out;
    std::uint64_t budget_nodes = 50000000;
    std::int64_t budget_ms = -1;
};

struct VerifyArgs {
    std::string graph, format, cert, out;
};

struct ReduceArgs {
    std::string graph, format, cert, out;
};

struct SampleArgs {
    int n = 100;
    double p = -1.0;
    double exponent = 0.9;
    std::uint64_t seed = 1;
    std::uint64_t trial = 0;
    bool triangle_free = false;
    std::string out, format;
};

struct HuntArgs {
    std::string corpus, out;
    std::uint64_t budget_nodes = 50000000;
    std::int64_t budget_ms = -1;
};

struct LemmaArgs {
    std::string name, out, csv;
    std::uint64_t seed = 1;
    int trials = -1;
    int threads = 1;
    int n = -1;
    double p = -1.0;
    double exponent = -1.0;
    int a_size = -1, b_size = -1;
    double window_lo = -1.0, window_hi = -1.0;
    int blocks = -1, block_size = -1, j_size = -1, layers = -1;
    std::int64_t threshold = -1;
    double alpha_c = -1.0, log_base = -1.0, cycle_factor = -1.0, cycle_exponent = -1.0;
    double degree_mult = -1.0;
    int max_cycle_len = -1;
    std::uint64_t budget_nodes = 2000000;
    std::int64_t budget_ms = 2000;
};

int run_check(const CheckArgs& a) {
    const gnorm::Graph g = gnorm::read_graph_file(a.graph, a.format);
    print_config(json{{"command", "check"},
                      {"graph", a.graph},
                      {"format", a.format},
                      {"budget_nodes", a.budget_nodes},
                      {"budget_ms", a.budget_ms}});
    const gnorm::DecideResult res = gnorm::decide_normal(g, {a.budget_nodes, a.budget_ms});
    json body{{"outcome", gnorm::to_string(res.outcome)}, {"nodes", res.nodes}};
    body["certificate"] = res.certificate ? gnorm::to_json(*res.certificate) : json(nullptr);
    emit(body, a.out);
    switch (res.outcome) {
        case gnorm::Normality::Normal: return kExitAffirmative;
        case gnorm::Normality::NotNormal: return kExitNegative;
        default: return kExitBudget;
    }
}

int run_verify(const VerifyArgs& a) {
    const gnorm::Graph g = gnorm::read_graph_file(a.graph, a.format);
    const gnorm::NormalCertificate cert =
        gnorm::certificate_from_json(g.vertex_count(), load_json(a.cert));
    print_config(json{{"command", "verify"}, {"graph", a.graph}, {"cert", a.cert}});
    const gnorm::VerifyResult r = gnorm::verify_certificate(g, cert);
    emit(json{{"valid", r.valid}, {"violations", violations_to_json(r)}}, a.out);
    return r.valid ? kExitAffirmative : kExitNegative;
}

int run_reduce(const ReduceArgs& a) {
    const gnorm::Graph g = gnorm::read_graph_file(a.graph, a.format);
    const gnorm::NormalCertificate cert =
        gnorm::certificate_from_json(g.vertex_count(), load_json(a.cert));
    print_config(json{{"command", "reduce"}, {"graph", a.graph}, {"cert", a.cert}});
    try {
        const gnorm::StarCovering cover = gnorm::to_star_covering(g, cert);
        emit(gnorm::to_json(cover), a.out);
    } catch (const std::invalid_argument& e) {
        emit(json{{"error", e.what()}}, a.out);
        return kExitNegative;
    }
    return kExitAffirmative;
}

int run_sample(const SampleArgs& a) {
    const double p = a.p >= 0.0 ? a.p
                                : std::pow(static_cast<double>(std::max(a.n, 2)), -a.exponent);
    print_config(json{{"command", "sample"},
                      {"n", a.n},
                      {"p", p},
                      {"seed", a.seed},
                      {"trial", a.trial},
                      {"triangle_free", a.triangle_free}});
    const gnorm::Graph g = a.triangle_free ? gnorm::sample_triangle_free(a.n, p, a.seed, a.trial)
                                           : gnorm::sample_gnp(a.n, p, a.seed, a.trial);
    if (a.out.empty()) {
        std::cout << gnorm::to_graph6(g) << "\n";
    } else {
        gnorm::write_graph_file(g, a.out, a.format);
    }
    return kExitAffirmative;
}

int run_hunt(const HuntArgs& a) {
    std::ifstream in(a.corpus);
    if (!in) throw std::runtime_error("cannot read " + a.corpus);
    print_config(json{{"command", "hunt"},
                      {"corpus", a.corpus},
                      {"budget_nodes", a.budget_nodes},
                      {"budget_ms", a.budget_ms}});
    json not_normal = json::array(), budget = json::array();
    std::int64_t normal_count = 0, total = 0;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        ++total;
        const gnorm::Graph g = gnorm::from_graph6(line);
        const auto begin = std::chrono::steady_clock::now();
        const gnorm::DecideResult res = gnorm::decide_normal(g, {a.budget_nodes, a.budget_ms});
        const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - begin)
                                .count();
        if (res.outcome == gnorm::Normality::Normal) {
            ++normal_count;
        } else if (res.outcome == gnorm::Normality::NotNormal) {
            not_normal.push_back(json{{"graph", line}, {"millis", millis}, {"nodes", res.nodes}});
        } else {
            budget.push_back(json{{"graph", line}, {"millis", millis}, {"nodes", res.nodes}});
        }
    }
    emit(json{{"not_normal", not_normal},
              {"budget_exceeded", budget},
              {"counts",
               json{{"total", total},
                    {"normal", normal_count},
                    {"not_normal", not_normal.size()},
                    {"budget_exceeded", budget.size()}}}},
         a.out);
    return kExitAffirmative;
}

int run_lemma(const LemmaArgs& a) {
    json report;
    std::vector<std::string> gate;

    if (a.name == "cycles" || a.name == "alpha" || a.name == "degree") {
        gnorm::Lemma1Config c;
        c.seed = a.seed;
        if (a.n > 0) c.n = a.n;
        if (a.p >= 0.0) c.p = a.p;
        if (a.exponent >= 0.0) c.exponent = a.exponent;
        if (a.trials > 0) c.trials = a.trials;
        if (a.max_cycle_len > 0) c.max_cycle_len = a.max_cycle_len;
        if (a.cycle_factor >= 0.0) c.cycle_factor = a.cycle_factor;
        if (a.cycle_exponent >= 0.0) c.cycle_exponent = a.cycle_exponent;
        if (a.alpha_c >= 0.0) c.alpha_c = a.alpha_c;
        if (a.log_base >= 0.0) c.log_base = a.log_base;
        if (a.degree_mult >= 0.0) c.degree_mult = a.degree_mult;
        c.threads = a.threads;
        report = gnorm::run_lemma1(c);
        gate = {a.name};
    } else if (a.name == "partial-cover") {
        gnorm::PartialCoverConfig c;
        c.seed = a.seed;
        if (a.a_size > 0) c.a_size = a.a_size;
        if (a.b_size > 0) c.b_size = a.b_size;
        if (a.p >= 0.0) c.p = a.p;
        if (a.trials > 0) c.trials = a.trials;
        if (a.window_lo >= 0.0) c.window_lo = a.window_lo;
        if (a.window_hi >= 0.0) c.window_hi = a.window_hi;
        c.threads = a.threads;
        report = gnorm::run_partial_cover(c);
        gate = {"cover", "reverify"};
    } else if (a.name == "transversal") {
        gnorm::TransversalConfig c;
        c.seed = a.seed;
        if (a.n > 0) c.n = a.n;
        if (a.p >= 0.0) c.p = a.p;
        if (a.exponent >= 0.0) c.exponent = a.exponent;
        if (a.max_cycle_len > 0) c.max_cycle_len = a.max_cycle_len;
        if (a.trials > 0) c.trials = a.trials;
        c.threads = a.threads;
        report = gnorm::run_transversal(c);
        gate = {"size", "girth"};
    } else if (a.name == "outsection") {
        gnorm::OutsectionConfig c;
        c.seed = a.seed;
        if (a.n > 0) c.n = a.n;
        if (a.p >= 0.0) c.p = a.p;
        if (a.trials > 0) c.trials = a.trials;
        c.budget_nodes = a.budget_nodes;
        c.budget_ms = a.budget_ms;
        c.threads = a.threads;
        report = gnorm::run_outsection(c);
        gate = {"conflicts"};
    } else if (a.name == "jq") {
        gnorm::JqConfig c;
        c.seed = a.seed;
        if (a.n > 0) c.n = a.n;
        if (a.p >= 0.0) c.p = a.p;
        if (a.exponent >= 0.0) c.exponent = a.exponent;
        if (a.blocks > 0) c.blocks = a.blocks;
        if (a.block_size > 0) c.block_size = a.block_size;
        if (a.j_size >= 0) c.j_size = a.j_size;
        c.threshold = a.threshold;
        if (a.trials > 0) c.trials = a.trials;
        c.threads = a.threads;
        report = gnorm::run_jq(c);
        gate = {"jq", "stratified"};
    } else if (a.name == "layered") {
        gnorm::LayeredConfig c;
        c.seed = a.seed;
        if (a.n > 0) c.n = a.n;
        if (a.p >= 0.0) c.p = a.p;
        if (a.exponent >= 0.0) c.exponent = a.exponent;
        if (a.layers > 1) c.layers = a.layers;
        if (a.block_size > 0) c.block_size = a.block_size;
        if (a.window_lo >= 0.0) c.window_lo = a.window_lo;
        if (a.window_hi >= 0.0) c.window_hi = a.window_hi;
        if (a.trials > 0) c.trials = a.trials;
        c.threads = a.threads;
        report = gnorm::run_layered(c);
        gate = {"monotone"};
    } else {
        std::cerr << "unknown lemma name: " << a.name << "\n";
        return kExitUsage;
    }

    json header = report.at("config");
    header["command"] = "lemma";
    header["suite"] = report.at("suite");
    header["gate"] = gate;
    print_config(header);

    emit(report, a.out);
    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        if (!csv) throw std::runtime_error("cannot write " + a.csv);
        csv << gnorm::report_csv(report);
    }
    for (const auto& name : gate)
        if (!gnorm::property_within_ceiling(report, name)) return kExitNegative;
    return kExitAffirmative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph normality decisions, star coverings, and seeded lemma harnesses"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "decide normality and emit a certificate");
    check->add_option("--graph", check_args.graph, "input graph path")->required();
    check->add_option("--format", check_args.format, "g6 or el (default: by extension)");
    check->add_option("--budget-nodes", check_args.budget_nodes, "search node budget");
    check->add_option("--budget-ms", check_args.budget_ms, "wall clock budget, -1 unlimited");
    check->add_option("--out", check_args.out, "write JSON here instead of stdout");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "validate a certificate against a graph");
    verify->add_option("--graph", verify_args.graph, "input graph path")->required();
    verify->add_option("--format", verify_args.format, "g6 or el");
    verify->add_option("--cert", verify_args.cert, "certificate JSON path")->required();
    verify->add_option("--out", verify_args.out, "write JSON here instead of stdout");

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "reduce a certificate to a star covering");
    reduce->add_option("--graph", reduce_args.graph, "input graph path")->required();
    reduce->add_option("--format", reduce_args.format, "g6 or el");
    reduce->add_option("--cert", reduce_args.cert, "certificate JSON path")->required();
    reduce->add_option("--out", reduce_args.out, "write JSON here instead of stdout");

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "draw a seeded random graph");
    sample->add_option("--n", sample_args.n, "vertex count");
    sample->add_option("--p", sample_args.p, "edge probability (overrides --exponent)");
    sample->add_option("--exponent", sample_args.exponent, "p = n^-exponent");
    sample->add_option("--seed", sample_args.seed, "master seed");
    sample->add_option("--trial", sample_args.trial, "substream index");
    sample->add_flag("--triangle-free", sample_args.triangle_free, "greedy triangle-free filter");
    sample->add_option("--out", sample_args.out, "output path (default: graph6 to stdout)");
    sample->add_option("--format", sample_args.format, "g6 or el for --out");

    HuntArgs hunt_args;
    auto* hunt = app.add_subcommand("hunt", "decide every graph in a graph6 corpus");
    hunt->add_option("--corpus", hunt_args.corpus, "graph6 lines, one graph each")->required();
    hunt->add_option("--budget-nodes", hunt_args.budget_nodes, "per-graph node budget");
    hunt->add_option("--budget-ms", hunt_args.budget_ms, "per-graph wall clock budget");
    hunt->add_option("--out", hunt_args.out, "write JSON here instead of stdout");

    LemmaArgs lemma_args;
    auto* lemma = app.add_subcommand("lemma", "run a Monte Carlo verification suite");
    lemma->add_option("name", lemma_args.name,
                      "cycles|alpha|degree|partial-cover|transversal|outsection|jq|layered")
        ->required();
    lemma->add_option("--seed", lemma_args.seed, "master seed");
    lemma->add_option("--trials", lemma_args.trials, "trial count");
    lemma->add_option("--threads", lemma_args.threads, "worker threads");
    lemma->add_option("--n", lemma_args.n, "vertex count");
    lemma->add_option("--p", lemma_args.p, "edge probability (overrides --exponent)");
    lemma->add_option("--exponent", lemma_args.exponent, "p = n^-exponent");
    lemma->add_option("--a", lemma_args.a_size, "bipartite side A size");
    lemma->add_option("--b", lemma_args.b_size, "bipartite side B size");
    lemma->add_option("--window-lo", lemma_args.window_lo, "degree window lower factor");
    lemma->add_option("--window-hi", lemma_args.window_hi, "degree window upper factor");
    lemma->add_option("--blocks", lemma_args.blocks, "block count");
    lemma->add_option("--block-size", lemma_args.block_size, "vertices per block");
    lemma->add_option("--jsize", lemma_args.j_size, "size of the excluded set J");
    lemma->add_option("--threshold", lemma_args.threshold, "JQ threshold, -1 auto");
    lemma->add_option("--layers", lemma_args.layers, "growth layers");
    lemma->add_option("--alpha-c", lemma_args.alpha_c, "alpha threshold constant");
    lemma->add_option("--log-base", lemma_args.log_base, "log base, 0 natural");
    lemma->add_option("--cycle-factor", lemma_args.cycle_factor, "short cycle threshold factor");
    lemma->add_option("--cycle-exponent", lemma_args.cycle_exponent, "short cycle threshold exponent");
    lemma->add_option("--degree-mult", lemma_args.degree_mult, "max degree threshold multiplier");
    lemma->add_option("--max-cycle-len", lemma_args.max_cycle_len, "cycle length cap");
    lemma->add_option("--budget-nodes", lemma_args.budget_nodes, "per-graph decide budget");
    lemma->add_option("--budget-ms", lemma_args.budget_ms, "per-graph decide wall clock");
    lemma->add_option("--out", lemma_args.out, "write JSON here instead of stdout");
    lemma->add_option("--csv", lemma_args.csv, "write per-trial CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (reduce->parsed()) return run_reduce(reduce_args);
        if (sample->parsed()) return run_sample(sample_args);
        if (hunt->parsed()) return run_hunt(hunt_args);
        if (lemma->parsed()) return run_lemma(lemma_args);
    } catch (const gnorm::GraphParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
