#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace gnorm {

// Each suite returns a deterministic report:
//   { "suite": ..., "config": {resolved values}, "properties": {name:
//     {"trials","bad_events","ceiling","wilson95"}}, "trials": [per-trial] }
// Identical configs give byte-identical dumps at any thread count.

struct Lemma1Config {
    std::uint64_t seed = 1;
    int n = 100000;
    double exponent = 0.9;  // p = n^-exponent when p < 0
    double p = -1.0;
    int trials = 50;
    int max_cycle_len = 7;
    double cycle_factor = 4.0;
    double cycle_exponent = 0.7;
    double alpha_c = 10.0;
    double alpha_exponent = 0.9;
    double log_base = 0.0;  // 0 means natural log
    double degree_mult = 2.0;
    int threads = 1;
};
nlohmann::json run_lemma1(const Lemma1Config& cfg);

struct PartialCoverConfig {
    std::uint64_t seed = 1;
    int a_size = 2000;
    int b_size = 2000;
    double p = 0.05;
    int trials = 200;
    // The operation's 1% windows keep almost nothing at harness sizes;
    // the suite defaults to windows wide enough to test the greedy itself.
    double window_lo = 0.8;
    double window_hi = 1.2;
    int threads = 1;
};
nlohmann::json run_partial_cover(const PartialCoverConfig& cfg);

struct TransversalConfig {
    std::uint64_t seed = 1;
    int n = 100000;
    double exponent = 0.9;
    double p = -1.0;
    int max_cycle_len = 7;
    int trials = 50;
    int threads = 1;
};
nlohmann::json run_transversal(const TransversalConfig& cfg);

struct OutsectionConfig {
    std::uint64_t seed = 1;
    int n = 40;
    double p = 0.05;
    int trials = 500;
    std::uint64_t budget_nodes = 2000000;
    std::int64_t budget_ms = 2000;
    int threads = 1;
};
nlohmann::json run_outsection(const OutsectionConfig& cfg);

struct JqConfig {
    std::uint64_t seed = 1;
    int n = 50000;
    double exponent = 0.8;
    double p = -1.0;
    int blocks = 10;
    int block_size = 0;           // 0 resolves to round(n^0.9 / 1000)
    int j_size = 0;
    std::int64_t threshold = -1;  // <0 resolves to round(q * d / 10)
    int trials = 20;
    int threads = 1;
};
nlohmann::json run_jq(const JqConfig& cfg);

struct LayeredConfig {
    std::uint64_t seed = 1;
    int n = 50000;
    double exponent = 0.8;
    double p = -1.0;
    int layers = 4;
    int block_size = 0;  // 0 resolves to n / (2 * layers)
    double window_lo = 0.0;
    double window_hi = 1e18;
    int trials = 20;
    int threads = 1;
};
nlohmann::json run_layered(const LayeredConfig& cfg);

// One CSV row per trial; array-valued fields are JSON-encoded in the cell.
std::string report_csv(const nlohmann::json& report);

// True when every property's frequency is within its ceiling.
bool report_within_ceilings(const nlohmann::json& report);
bool property_within_ceiling(const nlohmann::json& report, const std::string& name);

}  // namespace gnorm
