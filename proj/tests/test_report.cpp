#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "turancert/graph.hpp"
#include "turancert/multipartite.hpp"
#include "turancert/report.hpp"

using namespace turancert;

namespace {

ExperimentConfig probe_config() {
    ExperimentConfig cfg;
    cfg.mode = "probe";
    cfg.r = 2;
    cfg.c = 0.5;
    cfg.eps = 1e-3;
    cfg.n = 20;
    cfg.trials = 3;
    cfg.seed = 1;
    cfg.overrides.joint_threshold = 5.0;
    cfg.overrides.edit_budget = 1;
    return cfg;
}

// independent check: does G contain K_2(b,b)? enumerate b-subsets for one
// side, intersect neighborhoods for the other
bool has_biclique(const Graph& g, int b) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(pick.size()) == b) {
            Bitset common(g.order());
            for (int v = 0; v < g.order(); ++v) common.set(v);
            for (int v : pick) common &= g.neighbors(v);
            for (int v : pick) common.reset(v);
            return common.count() >= b;
        }
        for (int v = from; v < g.order(); ++v) {
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("probe yields one deterministic record per trial") {
    Report report = run_probe(probe_config());
    REQUIRE(report.trials.size() == 3);
    for (int i = 0; i < 3; ++i) {
        const TrialRecord& rec = report.trials[i];
        CHECK(rec.trial == i);
        CHECK(rec.seed == 1 + static_cast<std::uint64_t>(i));
        CHECK(rec.n == 20);
        CHECK(rec.m == 100);  // ceil((1 - 1/2) * 400 / 2)
        CHECK(rec.mu > 0.0);
        CHECK(rec.k_r1 > 0);
        CHECK(rec.verified);
        CHECK_FALSE(rec.failed);
        CHECK(rec.certificate.has_value());
    }

    Report again = run_probe(probe_config());
    for (int i = 0; i < 3; ++i) {
        CHECK(report.trials[i].mu == again.trials[i].mu);
        CHECK(report.trials[i].k_r1 == again.trials[i].k_r1);
        CHECK(report.trials[i].js_r1 == again.trials[i].js_r1);
        CHECK(report.trials[i].biclique_b == again.trials[i].biclique_b);
        CHECK(report.trials[i].cert_tag == again.trials[i].cert_tag);
        CHECK(report.trials[i].edits_or_t == again.trials[i].edits_or_t);
    }
}

TEST_CASE("tiny probe always finds at least a single cross edge") {
    ExperimentConfig cfg = probe_config();
    cfg.n = 10;
    cfg.trials = 1;
    Report report = run_probe(cfg);
    REQUIRE(report.trials.size() == 1);
    CHECK(report.trials[0].m == 25);
    CHECK(report.trials[0].biclique_b >= 1);
}

TEST_CASE("recorded biclique sizes match an independent exhaustive search") {
    ExperimentConfig cfg = probe_config();
    cfg.n = 12;
    cfg.m = 26;  // sparse enough for small b
    cfg.trials = 5;
    cfg.seed = 7;
    Report report = run_probe(cfg);
    for (const TrialRecord& rec : report.trials) {
        Graph g = random_graph_fixed_edges(12, 26, rec.seed);
        CAPTURE(rec.seed);
        int expect = 0;
        for (int b = 1; b <= 6; ++b) {
            if (!has_biclique(g, b)) break;
            expect = b;
        }
        CHECK(rec.biclique_b == expect);
    }
}

TEST_CASE("probe at n=30 agrees with the exhaustive search up to b = 4") {
    ExperimentConfig cfg = probe_config();
    cfg.n = 30;
    cfg.m.reset();  // default density: 225 edges
    cfg.trials = 5;
    cfg.seed = 7;
    Report report = run_probe(cfg);
    REQUIRE(report.trials.size() == 5);
    for (const TrialRecord& rec : report.trials) {
        CAPTURE(rec.seed);
        CHECK(rec.m == 225);
        Graph g = random_graph_fixed_edges(30, 225, rec.seed);
        // the exhaustive rerun is capped at b = 4; the recorded value must
        // agree below the cap and dominate it otherwise
        CHECK(has_biclique(g, std::min(rec.biclique_b, 4)));
        if (rec.biclique_b < 4) CHECK_FALSE(has_biclique(g, rec.biclique_b + 1));
    }
}

TEST_CASE("default edge counts follow the density formula") {
    CHECK(default_probe_edges(20, 2) == 100);
    CHECK(default_probe_edges(10, 2) == 25);
    CHECK(default_probe_edges(30, 3) == 300);
    CHECK(default_probe_edges(9, 2) == 21);  // ceil(81/4) rounds up
}

TEST_CASE("emission is deterministic and survives reload byte for byte") {
    Report report = run_probe(probe_config());

    std::string json_once = report_to_text(report);
    std::string csv_once = report_to_csv(report);
    CHECK(json_once == report_to_text(report));
    CHECK(csv_once == report_to_csv(report));

    std::string header = csv_once.substr(0, csv_once.find('\n'));
    CHECK(header == "trial,seed,n,m,mu,k_r1,js_r1,cert,edits_or_t,verified,ms");
    CHECK(std::count(csv_once.begin(), csv_once.end(), '\n') == 4);  // header + 3 rows

    const std::string path = "probe_roundtrip_test.json";
    emit_report(report, path);
    CHECK(slurp(path) == json_once);
    CHECK(slurp(csv_sibling_path(path)) == csv_once);

    Report loaded = load_report(path);
    CHECK(report_to_text(loaded) == json_once);
    CHECK(report_to_csv(loaded) == csv_once);

    std::remove(path.c_str());
    std::remove(csv_sibling_path(path).c_str());
}

TEST_CASE("loaded certificates still verify against regenerated graphs") {
    Report report = run_probe(probe_config());
    const std::string path = "probe_recheck_test.json";
    emit_report(report, path);
    Report loaded = load_report(path);

    REQUIRE(loaded.trials.size() == report.trials.size());
    for (const TrialRecord& rec : loaded.trials) {
        REQUIRE(rec.certificate.has_value());
        Graph g = random_graph_fixed_edges(rec.n, rec.m, rec.seed);
        CHECK(check_certificate(g, *rec.certificate, loaded.params).ok);
    }
    std::remove(path.c_str());
    std::remove(csv_sibling_path(path).c_str());
}

TEST_CASE("csv sibling naming") {
    CHECK(csv_sibling_path("report.json") == "report.csv");
    CHECK(csv_sibling_path("out/report.json") == "out/report.csv");
    CHECK(csv_sibling_path("report") == "report.csv");
}

TEST_CASE("header-only table for an empty report") {
    Report report{probe_config(), derived_params(2, 0.5, 1e-3, 20), {}};
    CHECK(report_to_csv(report) == "trial,seed,n,m,mu,k_r1,js_r1,cert,edits_or_t,verified,ms\n");
}
