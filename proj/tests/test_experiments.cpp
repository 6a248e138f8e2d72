#include <string>

#include "doctest.h"
#include "gnorm/experiments.hpp"

using namespace gnorm;
using nlohmann::json;

namespace {

void check_report_shape(const json& report, const std::string& suite) {
    CHECK(report.at("suite") == suite);
    CHECK(report.contains("config"));
    REQUIRE(report.contains("properties"));
    REQUIRE(report.contains("trials"));
    for (const auto& [name, prop] : report.at("properties").items()) {
        CHECK(prop.at("trials").get<int>() > 0);
        CHECK(prop.at("bad_events").get<int>() >= 0);
        CHECK(prop.at("ceiling").is_number());
        REQUIRE(prop.at("wilson95").is_array());
        CHECK(prop.at("wilson95").size() == 2);
        CHECK(!name.empty());
    }
}

}  // namespace

TEST_CASE("cycle suite at toy scale") {
    Lemma1Config cfg;
    cfg.n = 400;
    cfg.trials = 6;
    auto report = run_lemma1(cfg);
    check_report_shape(report, "lemma1");
    CHECK(report.at("trials").size() == 6);
    CHECK(report.at("config").at("n") == 400);
    // Resolved thresholds land in the config block.
    CHECK(report.at("config").contains("p"));
    CHECK(report.at("config").contains("cycle_threshold"));
    for (const auto& trial : report.at("trials")) {
        CHECK(trial.contains("x7"));
        CHECK(trial.contains("alpha_bound"));
        CHECK(trial.contains("max_degree"));
    }
}

TEST_CASE("reports are identical across thread counts") {
    Lemma1Config cfg;
    cfg.n = 300;
    cfg.trials = 5;
    cfg.threads = 1;
    auto serial = run_lemma1(cfg);
    cfg.threads = 4;
    auto parallel = run_lemma1(cfg);
    // The thread count is execution detail, not config.
    CHECK(serial.dump(2) == parallel.dump(2));

    PartialCoverConfig pc;
    pc.a_size = 150;
    pc.b_size = 150;
    pc.p = 0.2;
    pc.trials = 6;
    pc.threads = 1;
    auto s2 = run_partial_cover(pc);
    pc.threads = 3;
    CHECK(run_partial_cover(pc).dump() == s2.dump());
    check_report_shape(s2, "partial-cover");
}

TEST_CASE("identical configs give identical reports") {
    TransversalConfig cfg;
    cfg.n = 500;
    cfg.trials = 4;
    auto a = run_transversal(cfg);
    auto b = run_transversal(cfg);
    CHECK(a.dump() == b.dump());
    check_report_shape(a, "transversal");
    CHECK(property_within_ceiling(a, "size"));
    CHECK(property_within_ceiling(a, "girth"));
}

TEST_CASE("outsection suite finds no conflicts on honest samples") {
    OutsectionConfig cfg;
    cfg.n = 24;
    cfg.trials = 12;
    auto report = run_outsection(cfg);
    check_report_shape(report, "outsection");
    CHECK(report.at("properties").at("conflicts").at("bad_events") == 0);
    CHECK(report_within_ceilings(report));
}

TEST_CASE("jq suite at toy scale") {
    JqConfig cfg;
    cfg.n = 3000;
    cfg.exponent = 0.7;
    cfg.block_size = 12;
    cfg.j_size = 40;
    cfg.threshold = 1;
    cfg.trials = 4;
    auto report = run_jq(cfg);
    check_report_shape(report, "jq");
    CHECK(report.at("config").at("block_size") == 12);
    CHECK(report.at("properties").contains("jq"));
    CHECK(report.at("properties").contains("stratified"));
    for (const auto& trial : report.at("trials")) {
        CHECK(trial.contains("private_total"));
        CHECK(trial.contains("start"));
    }
}

TEST_CASE("layered growth on the toy configuration") {
    LayeredConfig cfg;
    cfg.n = 2000;
    cfg.p = 0.02;
    cfg.block_size = 15;
    cfg.layers = 3;
    cfg.trials = 1;
    auto report = run_layered(cfg);
    check_report_shape(report, "layered");
    const auto& trial = report.at("trials").at(0);
    CHECK(trial.at("layers_realized") == 3);
    CHECK(trial.at("stall_layer") == 0);
    const auto sizes = trial.at("layer_max").get<std::vector<int>>();
    REQUIRE(sizes.size() == 3);
    CHECK(sizes[0] == 1);
    for (size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i - 1] <= sizes[i]);
    CHECK(trial.at("bad_monotone") == 0);
    CHECK(report_within_ceilings(report));
}

TEST_CASE("csv rendering covers every trial") {
    TransversalConfig cfg;
    cfg.n = 200;
    cfg.trials = 3;
    auto report = run_transversal(cfg);
    const std::string csv = report_csv(report);
    // Header plus one row per trial, newline terminated.
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 4);
    CHECK(csv.find("trial") != std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("ceiling checks distinguish pass from fail") {
    json report = {{"suite", "synthetic"},
                   {"config", json::object()},
                   {"properties",
                    {{"good", {{"trials", 10}, {"bad_events", 0}, {"ceiling", 0.0}, {"wilson95", {0.0, 0.3}}}},
                     {"bad", {{"trials", 10}, {"bad_events", 3}, {"ceiling", 0.1}, {"wilson95", {0.1, 0.6}}}}}},
                   {"trials", json::array()}};
    CHECK(property_within_ceiling(report, "good"));
    CHECK_FALSE(property_within_ceiling(report, "bad"));
    CHECK_FALSE(report_within_ceilings(report));
}
