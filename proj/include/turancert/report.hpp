// Seeded experiment runs and their on-disk form.
//
// A report is one JSON document (config echo, derived parameters, per-trial
// records with embedded certificates, aggregates) plus a flat CSV sibling
// with the fixed header
//
//   trial,seed,n,m,mu,k_r1,js_r1,cert,edits_or_t,verified,ms
//
// Emission is deterministic: the CSV bytes are a pure function of the
// Report value, so re-emitting a loaded report reproduces the file exactly.
// Across runs every column except ms is reproducible from the seed.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turancert/stability.hpp"

namespace turancert {

struct ExperimentConfig {
    std::string mode = "probe";
    int r = 2;
    double c = 0.5;
    double eps = 1e-3;
    int n = 20;
    std::optional<std::uint64_t> m;  // default: ceil((1 - 1/r) n^2 / 2)
    int trials = 1;
    std::uint64_t seed = 1;
    ThresholdOverrides overrides;
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::uint64_t m = 0;
    double mu = 0.0;
    std::uint64_t k_r1 = 0;
    std::uint64_t js_r1 = 0;
    int biclique_b = 0;               // largest b with K_2(b,b) found
    std::string cert_tag = "failed";  // "a", "b", or "failed"
    std::optional<std::uint64_t> edits_or_t;
    bool verified = false;
    bool failed = true;
    std::string reason;  // set when failed
    std::int64_t ms = 0;
    std::optional<Certificate> certificate;
};

struct Report {
    ExperimentConfig config;
    Params params;
    std::vector<TrialRecord> trials;
};

std::uint64_t default_probe_edges(int n, int r);

// One record per trial on G(n, m) with seed cfg.seed + trial index: spectral
// radius, (r+1)-clique totals, the largest balanced biclique (exact search
// up to b = 10), and the dichotomy certificate under cfg's overrides.
// Engine errors are captured per trial, never thrown.
Report run_probe(const ExperimentConfig& cfg);

std::string report_to_text(const Report& report);
std::string report_to_csv(const Report& report);

// writes JSON to `path` and the CSV sibling alongside (extension -> .csv)
void emit_report(const Report& report, const std::string& path);
std::string csv_sibling_path(const std::string& path);

Report load_report(const std::string& path);

}  // namespace turancert
