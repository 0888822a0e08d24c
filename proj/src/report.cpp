#include "turancert/report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json_detail.hpp"
#include "turancert/cliques.hpp"
#include "turancert/errors.hpp"
#include "turancert/spectral.hpp"

namespace turancert {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "turancert-report";
constexpr int kVersion = 1;

// largest b with a (verified-by-construction) K_2(b,b) subgraph; the finder
// is exact for every b tried here, so a miss ends the climb
int largest_balanced_biclique(const Graph& g) {
    int best = 0;
    int cap = std::min(10, g.order() / 2);
    for (int b = 1; b <= cap; ++b) {
        std::optional<MultipartiteWitness> found;
        try {
            found = find_complete_multipartite(g, std::vector<int>{b, b});
        } catch (const BudgetExceededError&) {
            break;
        }
        if (!found) break;
        best = b;
    }
    return best;
}

std::string fmt_double(double x) { return json(x).dump(); }

json trial_to_json(const TrialRecord& rec, const Params& params) {
    json j;
    j["trial"] = rec.trial;
    j["seed"] = rec.seed;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["mu"] = rec.mu;
    j["k_r1"] = rec.k_r1;
    j["js_r1"] = rec.js_r1;
    j["biclique_b"] = rec.biclique_b;
    j["cert"] = rec.cert_tag;
    j["edits_or_t"] = rec.edits_or_t ? json(*rec.edits_or_t) : json(nullptr);
    j["verified"] = rec.verified;
    j["failed"] = rec.failed;
    j["reason"] = rec.reason;
    j["ms"] = rec.ms;
    j["certificate"] = rec.certificate
                           ? detail::certificate_to_json(*rec.certificate, params, rec.verified)
                           : json(nullptr);
    return j;
}

TrialRecord trial_from_json(const json& j) {
    TrialRecord rec;
    rec.trial = j.at("trial").get<int>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.n = j.at("n").get<int>();
    rec.m = j.at("m").get<std::uint64_t>();
    rec.mu = j.at("mu").get<double>();
    rec.k_r1 = j.at("k_r1").get<std::uint64_t>();
    rec.js_r1 = j.at("js_r1").get<std::uint64_t>();
    rec.biclique_b = j.at("biclique_b").get<int>();
    rec.cert_tag = j.at("cert").get<std::string>();
    if (!j.at("edits_or_t").is_null()) rec.edits_or_t = j.at("edits_or_t").get<std::uint64_t>();
    rec.verified = j.at("verified").get<bool>();
    rec.failed = j.at("failed").get<bool>();
    rec.reason = j.at("reason").get<std::string>();
    rec.ms = j.at("ms").get<std::int64_t>();
    if (!j.at("certificate").is_null())
        rec.certificate = detail::certificate_from_json(j.at("certificate")).cert;
    return rec;
}

json aggregates_json(const Report& report) {
    std::vector<int> bs;
    for (const auto& rec : report.trials) bs.push_back(rec.biclique_b);
    if (bs.empty()) return {{"biclique_b", nullptr}};
    std::sort(bs.begin(), bs.end());
    std::size_t k = bs.size();
    double median = (k % 2 == 1) ? bs[k / 2] : (bs[k / 2 - 1] + bs[k / 2]) / 2.0;
    return {{"biclique_b", {{"min", bs.front()}, {"median", median}, {"max", bs.back()}}}};
}

}  // namespace

std::uint64_t default_probe_edges(int n, int r) {
    if (n < 0 || r < 2) throw std::invalid_argument("need n >= 0 and r >= 2");
    std::uint64_t num = static_cast<std::uint64_t>(r - 1) * n * n;
    std::uint64_t den = 2ULL * r;
    return (num + den - 1) / den;
}

Report run_probe(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    Report report{cfg, derived_params(cfg.r, cfg.c, cfg.eps, cfg.n, cfg.overrides), {}};
    const std::uint64_t m = cfg.m.value_or(default_probe_edges(cfg.n, cfg.r));

    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(trial);
        const auto start = std::chrono::steady_clock::now();

        TrialRecord rec;
        rec.trial = trial;
        rec.seed = seed;
        rec.n = cfg.n;
        Graph g = random_graph_fixed_edges(cfg.n, m, seed);
        rec.m = g.edge_count();
        rec.mu = spectral_radius(g).mu;
        CliqueStats stats = clique_stats(g, cfg.r + 1);
        rec.k_r1 = stats.total;
        rec.js_r1 = stats.joints();
        rec.biclique_b = largest_balanced_biclique(g);

        try {
            Certificate cert = stability_dichotomy(g, report.params);
            CheckResult check = check_certificate(g, cert, report.params);
            rec.cert_tag = cert.is_condition_a() ? "a" : "b";
            rec.edits_or_t =
                cert.is_condition_a() ? cert.a().t_achieved : cert.b().edit_count;
            rec.verified = check.ok;
            rec.failed = !check.ok;
            rec.reason = check.ok ? "" : check.reason;
            rec.certificate = std::move(cert);
        } catch (const std::exception& e) {
            rec.cert_tag = "failed";
            rec.verified = false;
            rec.failed = true;
            rec.reason = e.what();
        }

        rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
        report.trials.push_back(std::move(rec));
    }
    return report;
}

std::string report_to_text(const Report& report) {
    json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["config"] = {
        {"mode", report.config.mode},
        {"r", report.config.r},
        {"c", report.config.c},
        {"eps", report.config.eps},
        {"n", report.config.n},
        {"m", report.config.m ? json(*report.config.m) : json(nullptr)},
        {"trials", report.config.trials},
        {"seed", report.config.seed},
        {"joint_threshold", report.config.overrides.joint_threshold
                                ? json(*report.config.overrides.joint_threshold)
                                : json(nullptr)},
        {"edit_budget", report.config.overrides.edit_budget
                            ? json(*report.config.overrides.edit_budget)
                            : json(nullptr)}};
    j["params"] = detail::params_to_json(report.params);
    json trials = json::array();
    for (const auto& rec : report.trials) trials.push_back(trial_to_json(rec, report.params));
    j["trials"] = std::move(trials);
    j["aggregates"] = aggregates_json(report);
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& report) {
    std::ostringstream out;
    out << "trial,seed,n,m,mu,k_r1,js_r1,cert,edits_or_t,verified,ms\n";
    for (const auto& rec : report.trials) {
        out << rec.trial << ',' << rec.seed << ',' << rec.n << ',' << rec.m << ','
            << fmt_double(rec.mu) << ',' << rec.k_r1 << ',' << rec.js_r1 << ',' << rec.cert_tag
            << ',';
        if (rec.edits_or_t) out << *rec.edits_or_t;
        out << ',' << (rec.verified ? "true" : "false") << ',' << rec.ms << '\n';
    }
    return out.str();
}

std::string csv_sibling_path(const std::string& path) {
    std::filesystem::path p(path);
    p.replace_extension(".csv");
    if (p.string() == path) return path + ".csv";
    return p.string();
}

void emit_report(const Report& report, const std::string& path) {
    {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
        out << report_to_text(report);
        if (!out) throw std::runtime_error("write to '" + path + "' failed");
    }
    const std::string csv_path = csv_sibling_path(path);
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
    out << report_to_csv(report);
    if (!out) throw std::runtime_error("write to '" + csv_path + "' failed");
}

Report load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();

    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report document: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != kFormat)
            throw std::invalid_argument("not a report document");
        if (j.at("version").get<int>() != kVersion)
            throw std::invalid_argument("unsupported report document version");

        const json& c = j.at("config");
        ExperimentConfig cfg;
        cfg.mode = c.at("mode").get<std::string>();
        cfg.r = c.at("r").get<int>();
        cfg.c = c.at("c").get<double>();
        cfg.eps = c.at("eps").get<double>();
        cfg.n = c.at("n").get<int>();
        if (!c.at("m").is_null()) cfg.m = c.at("m").get<std::uint64_t>();
        cfg.trials = c.at("trials").get<int>();
        cfg.seed = c.at("seed").get<std::uint64_t>();
        if (!c.at("joint_threshold").is_null())
            cfg.overrides.joint_threshold = c.at("joint_threshold").get<double>();
        if (!c.at("edit_budget").is_null())
            cfg.overrides.edit_budget = c.at("edit_budget").get<std::uint64_t>();

        Report report{cfg, detail::params_from_json(j.at("params")), {}};
        for (const auto& t : j.at("trials")) report.trials.push_back(trial_from_json(t));
        return report;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report document: ") + e.what());
    }
}

}  // namespace turancert
