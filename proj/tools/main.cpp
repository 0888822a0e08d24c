// command-line front end: analyze / dichotomy / probe / check

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "turancert/certificate_io.hpp"
#include "turancert/cliques.hpp"
#include "turancert/edge_list.hpp"
#include "turancert/report.hpp"
#include "turancert/spectral.hpp"
#include "turancert/stability.hpp"

namespace {

using namespace turancert;

struct CommonOpts {
    int r = 2;
    double c = 0.5;
    double eps = 1e-3;
    std::optional<double> joint_threshold;
    std::optional<std::uint64_t> edit_budget;
};

ThresholdOverrides overrides_of(const CommonOpts& o) {
    return ThresholdOverrides{o.joint_threshold, o.edit_budget};
}

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--r", o.r, "number of parts r (forbidden clique order minus one)")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--c", o.c, "scale parameter c");
    cmd->add_option("--eps", o.eps, "closeness parameter eps");
    cmd->add_option("--joint-threshold", o.joint_threshold,
                    "override the joint threshold (default n^(r-1)/r^(2r+5))");
    cmd->add_option("--edit-budget", o.edit_budget,
                    "override the removal budget (default ceil(theta n^2))");
}

int run_analyze(const std::string& in_path, int r) {
    Graph g = load_edge_list(in_path);
    std::cout << "n " << g.order() << "\n";
    std::cout << "m " << g.edge_count() << "\n";
    if (g.order() > 0) {
        double mu = spectral_radius(g).mu;
        double avg = 2.0 * static_cast<double>(g.edge_count()) / g.order();
        std::cout << "mu " << mu << "\n";
        std::cout << "avg_degree " << avg << "\n";
        std::cout << "max_degree " << g.max_degree() << "\n";
        std::cout << "sqrt_2m " << sqrt_edge_bound(g) << "\n";
    }
    for (int k : {r, r + 1}) {
        CliqueStats stats = clique_stats(g, k);
        std::cout << "k_" << k << " " << stats.total << "\n";
        std::cout << "js_" << k << " " << stats.joints() << "\n";
    }
    return 0;
}

int run_dichotomy(const std::string& in_path, const CommonOpts& opts,
                  const std::string& out_path) {
    Graph g = load_edge_list(in_path);
    Params params = derived_params(opts.r, opts.c, opts.eps, g.order(), overrides_of(opts));
    Certificate cert = stability_dichotomy(g, params);
    CheckResult check = check_certificate(g, cert, params);

    std::cout << "removals " << cert.removal_log.size() << " (budget " << params.edit_budget
              << ", threshold " << params.joint_threshold << ")\n";
    if (cert.is_condition_a()) {
        const ConditionA& a = cert.a();
        std::cout << "condition a: " << params.r << " parts of size " << a.s << " plus t="
                  << a.t_achieved << " ("
                  << (a.regime == SearchRegime::exact ? "exact" : "greedy") << ")\n";
    } else {
        const ConditionB& b = cert.b();
        std::cout << "condition b: " << b.edit_count << " edits ("
                  << b.edits.additions.size() << " additions, " << b.edits.removals.size()
                  << " removals), bound " << b.bound << ", within_bound "
                  << (b.within_bound ? "true" : "false") << "\n";
    }
    std::cout << "verified " << (check.ok ? "true" : "false") << "\n";
    if (!check.ok) std::cout << "reason " << check.reason << "\n";
    if (!out_path.empty()) {
        save_certificate(out_path, cert, params, check.ok);
        std::cout << "certificate " << out_path << "\n";
    }
    return check.ok ? 0 : 1;
}

int run_probe_cmd(const CommonOpts& opts, int n, std::optional<std::uint64_t> m, int trials,
                  std::uint64_t seed, const std::string& out_path) {
    ExperimentConfig cfg;
    cfg.mode = "probe";
    cfg.r = opts.r;
    cfg.c = opts.c;
    cfg.eps = opts.eps;
    cfg.n = n;
    cfg.m = m;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.overrides = overrides_of(opts);

    Report report = run_probe(cfg);
    if (out_path.empty()) {
        std::cout << report_to_csv(report);
    } else {
        emit_report(report, out_path);
        std::cout << "report " << out_path << "\n";
        std::cout << "table " << csv_sibling_path(out_path) << "\n";
    }
    for (const auto& rec : report.trials)
        if (rec.failed)
            std::cerr << "trial " << rec.trial << " failed: " << rec.reason << "\n";
    return 0;
}

int run_check(const std::string& in_path, const std::string& cert_path) {
    Graph g = load_edge_list(in_path);
    LoadedCertificate loaded = load_certificate(cert_path);
    CheckResult check = check_certificate(g, loaded.cert, loaded.params);
    std::cout << "verified " << (check.ok ? "true" : "false") << "\n";
    if (!check.ok) std::cout << "reason " << check.reason << "\n";
    return check.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral stability certificates: joint witnesses or edit sets to the Turan graph"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* analyze = app.add_subcommand(
        "analyze", "spectral radius, clique counts, and degree bounds for an edge-list file");
    std::string analyze_in;
    int analyze_r = 2;
    analyze->add_option("--in", analyze_in, "edge-list file")->required();
    analyze->add_option("--r", analyze_r, "clique order of interest")->check(CLI::Range(2, 64));

    auto* dich = app.add_subcommand("dichotomy",
                                    "run the full engine on a graph and emit a certificate");
    std::string dich_in, dich_out;
    dich->add_option("--in", dich_in, "edge-list file")->required();
    dich->add_option("--out", dich_out, "certificate output path");
    add_param_flags(dich, opts);

    auto* probe = app.add_subcommand("probe", "seeded random-graph sweep with full records");
    int probe_n = 20, probe_trials = 1;
    std::uint64_t probe_seed = 1;
    std::optional<std::uint64_t> probe_m;
    std::string probe_out;
    probe->add_option("--n", probe_n, "graph order")->check(CLI::Range(1, 4096));
    probe->add_option("--m", probe_m, "edge count (default ceil((1-1/r) n^2 / 2))");
    probe->add_option("--trials", probe_trials, "number of trials")->check(CLI::PositiveNumber);
    probe->add_option("--seed", probe_seed, "base seed; trial i uses seed + i");
    probe->add_option("--out", probe_out, "report output path (JSON; CSV sibling alongside)");
    add_param_flags(probe, opts);

    auto* check = app.add_subcommand("check", "verify a saved certificate against a graph");
    std::string check_in, check_cert;
    check->add_option("--in", check_in, "edge-list file")->required();
    check->add_option("--cert", check_cert, "certificate file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(analyze_in, analyze_r);
        if (dich->parsed()) return run_dichotomy(dich_in, opts, dich_out);
        if (probe->parsed())
            return run_probe_cmd(opts, probe_n, probe_m, probe_trials, probe_seed, probe_out);
        if (check->parsed()) return run_check(check_in, check_cert);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
