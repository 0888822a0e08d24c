// Acceptance suite: ten numbered property checks, one verdict line each.
// Exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "turancert/certificate_io.hpp"
#include "turancert/cliques.hpp"
#include "turancert/graph.hpp"
#include "turancert/multipartite.hpp"
#include "turancert/report.hpp"
#include "turancert/rng.hpp"
#include "turancert/spectral.hpp"
#include "turancert/stability.hpp"

using namespace turancert;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
    bool ok = true;
    std::string detail;  // failure description or summary stats

    void fail(const std::string& why) {
        if (ok) {
            ok = false;
            detail = why;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// inverts the parameter formulas so that the derived value of `a` comes out
// at `a_target`: theta = a^6/8 makes sqrt(2 theta) = a^3/2, eps supplies the
// other half of b = a^3
Params params_for_a(int r, int n, double a_target, const ThresholdOverrides& ov) {
    double b = a_target * a_target * a_target;
    double eps = b / 2.0;
    double theta = b * b / 8.0;
    double c = std::pow(theta / std::pow(static_cast<double>(r), 2.0 * r + 5.0),
                        static_cast<double>(r) + 1.0);
    return derived_params(r, c, eps, n, ov);
}

Params zero_perturbation_params(int r, int n) {
    ThresholdOverrides ov;
    ov.joint_threshold = 0.5;
    return params_for_a(r, n, 0.5 / (7.0 * (r - 1) * n), ov);
}

Params perturbation_params(int r, int n, int flips) {
    ThresholdOverrides ov;
    ov.joint_threshold = 0.0;
    return params_for_a(r, n, (flips + 0.5) / (7.0 * n), ov);
}

Params dense_params(int r, int n) {
    ThresholdOverrides ov;
    ov.joint_threshold = 5.0;
    ov.edit_budget = 1;
    return derived_params(r, 0.7, 1e-3, n, ov);
}

// canonical relabeling: order vertices by (part, index), then compare the
// permuted adjacency with the reference generator
bool rebuilds_turan_exactly(const Graph& edited, const std::vector<int>& part_of, int r) {
    int n = edited.order();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::vector<int> part_sizes(r, 0);
    for (int v = 0; v < n; ++v) ++part_sizes[part_of[v]];
    // larger parts must come first to match the generator's layout
    std::vector<int> part_rank(r);
    for (int p = 0; p < r; ++p) part_rank[p] = p;
    std::stable_sort(part_rank.begin(), part_rank.end(),
                     [&](int x, int y) { return part_sizes[x] > part_sizes[y]; });
    std::vector<int> rank_of(r);
    for (int i = 0; i < r; ++i) rank_of[part_rank[i]] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (rank_of[part_of[x]] != rank_of[part_of[y]])
            return rank_of[part_of[x]] < rank_of[part_of[y]];
        return x < y;
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Graph relabeled(n);
    for (const Edge& e : edited.edges()) relabeled.add_edge(pos[e.u], pos[e.v]);
    return relabeled == turan_graph(n, r);
}

// ---------------------------------------------------------------------------

Result check_clique_oracle() {
    Result res;
    auto t0 = Clock::now();
    for (int trial = 0; trial < 200 && res.ok; ++trial) {
        int n = 8 + trial % 5;
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        double density = 0.3 + 0.2 * (trial % 3);
        std::uint64_t m = static_cast<std::uint64_t>(density * static_cast<double>(pairs));
        Graph g = random_graph_fixed_edges(n, m, 1000 + trial);
        for (int r : {3, 4, 5}) {
            std::uint64_t fast = count_cliques(g, r);
            std::uint64_t slow = count_cliques_bruteforce(g, r);
            if (fast != slow) {
                res.fail("trial " + std::to_string(trial) + " r=" + std::to_string(r) + ": " +
                         std::to_string(fast) + " != " + std::to_string(slow));
                break;
            }
        }
    }
    double secs = seconds_since(t0);
    if (res.ok && secs >= 60.0) res.fail("runtime " + std::to_string(secs) + " s exceeds 60 s");
    if (res.ok) res.detail = "200 graphs x r in {3,4,5}";
    return res;
}

Result check_spectral_closed_forms() {
    Result res;
    const double tol = 1e-6;
    for (int n = 2; n <= 50 && res.ok; ++n) {
        double mu = spectral_radius(turan_graph(n, n)).mu;
        if (std::fabs(mu - (n - 1.0)) > tol)
            res.fail("complete graph n=" + std::to_string(n));
    }
    for (int a = 1; a <= 20 && res.ok; ++a)
        for (int b = a; b <= 20; ++b) {
            double mu = spectral_radius(complete_multipartite({a, b})).mu;
            if (std::fabs(mu - std::sqrt(1.0 * a * b)) > tol) {
                res.fail("bipartite a=" + std::to_string(a) + " b=" + std::to_string(b));
                break;
            }
        }
    for (int r = 2; r <= 4 && res.ok; ++r)
        for (int k = 1; r * k <= 48; ++k) {
            int n = r * k;
            double mu = spectral_radius(turan_graph(n, r)).mu;
            if (std::fabs(mu - (1.0 - 1.0 / r) * n) > tol) {
                res.fail("balanced r=" + std::to_string(r) + " n=" + std::to_string(n));
                break;
            }
        }
    if (res.ok) res.detail = "49 complete + 210 bipartite + 69 balanced";
    return res;
}

Result check_spectral_bounds() {
    Result res;
    const double slack = 1e-6;
    for (int trial = 0; trial < 1000 && res.ok; ++trial) {
        int n = 20 + (trial % 10) * 20;
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        double density = 0.1 + 0.2 * (trial % 3);
        std::uint64_t m = static_cast<std::uint64_t>(density * static_cast<double>(pairs));
        Graph g = random_graph_fixed_edges(n, m, 2000 + trial);
        double mu = spectral_radius(g).mu;
        double lower = 2.0 * static_cast<double>(g.edge_count()) / g.order();
        double upper = std::min({static_cast<double>(g.max_degree()), sqrt_edge_bound(g),
                                 static_cast<double>(g.order() - 1)});
        if (mu < lower - slack || mu > upper + slack)
            res.fail("trial " + std::to_string(trial) + ": mu=" + std::to_string(mu) +
                     " outside [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
    }
    if (res.ok) res.detail = "1000 graphs, n up to 200";
    return res;
}

Result check_removal_interlacing() {
    Result res;
    for (int trial = 0; trial < 500 && res.ok; ++trial) {
        int n = 15 + (trial % 6) * 15;
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        Graph g = random_graph_fixed_edges(n, pairs * 3 / 10, 3000 + trial);
        auto edges = g.edges();
        Rng rng(9000 + trial);
        std::uint64_t k = 1 + rng.below(std::min<std::uint64_t>(edges.size(), 12));
        std::vector<Edge> removed;
        for (std::uint64_t i : sample_distinct(rng, edges.size(), k))
            removed.push_back(edges[static_cast<std::size_t>(i)]);
        WeylCheck w = weyl_gap_check(g, removed, 1e-6);
        if (!w.holds)
            res.fail("trial " + std::to_string(trial) + ": " + std::to_string(w.mu_g_minus) +
                     " < " + std::to_string(w.mu_g) + " - " + std::to_string(w.mu_removed));
    }
    if (res.ok) res.detail = "500 removal sets, up to 12 edges each";
    return res;
}

Result check_peeling_contracts() {
    Result res;
    for (int trial = 0; trial < 200 && res.ok; ++trial) {
        int n = 20 + (trial % 5) * 20;
        int r = 2 + trial % 2;
        std::uint64_t m = static_cast<std::uint64_t>(n) * n / 5;
        Graph g = random_graph_fixed_edges(n, m, 4000 + trial);
        double threshold = (trial % 3 == 0) ? 1.0 : (trial % 3 == 1) ? 5.0 : n / 10.0;
        ProcedureResult proc = procedure_p(g, r, threshold);

        if (static_cast<double>(clique_stats(proc.g_prime, r + 1).joints()) > threshold) {
            res.fail("trial " + std::to_string(trial) + ": joints above threshold after run");
            break;
        }
        std::uint64_t logged = 0;
        for (const auto& rec : proc.removals) {
            if (!(static_cast<double>(rec.support) > threshold)) {
                res.fail("trial " + std::to_string(trial) + ": logged support at or below threshold");
                break;
            }
            logged += rec.support;
        }
        if (!res.ok) break;
        if (logged > count_cliques(g, r + 1)) {
            res.fail("trial " + std::to_string(trial) + ": logged supports exceed clique count");
            break;
        }
        double drop = spectral_radius(g).mu - spectral_radius(proc.g_prime).mu;
        if (drop > std::sqrt(2.0 * static_cast<double>(proc.removals.size())) + 1e-6)
            res.fail("trial " + std::to_string(trial) + ": spectral drop too large");
    }
    if (res.ok) res.detail = "200 runs, n up to 100, r in {2,3}";
    return res;
}

Result check_dichotomy_soundness() {
    Result res;
    int runs = 0;
    for (int n : {30, 60}) {
        for (int r : {2, 3}) {
            if (!res.ok) break;
            // exact inputs must come back untouched
            for (int i = 0; i < 10 && res.ok; ++i) {
                ++runs;
                Graph g = turan_graph(n, r);
                Params p = zero_perturbation_params(r, n);
                try {
                    Certificate cert = stability_dichotomy(g, p);
                    CheckResult chk = check_certificate(g, cert, p);
                    if (!chk.ok)
                        res.fail("clean n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 ": " + chk.reason);
                    else if (cert.is_condition_a())
                        res.fail("clean input produced a witness certificate");
                    else if (cert.b().edit_count != 0)
                        res.fail("clean n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 ": edit_count " + std::to_string(cert.b().edit_count));
                    else if (!rebuilds_turan_exactly(apply_edits(g, cert.b().edits),
                                                     cert.b().edits.part_assignment, r))
                        res.fail("clean input: edited graph is not the reference graph");
                } catch (const std::exception& e) {
                    res.fail("clean n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                             e.what());
                }
            }
            // flipped inputs: up to three edits, mixed directions
            for (int i = 0; i < 20 && res.ok; ++i) {
                ++runs;
                Graph g = turan_graph(n, r);
                Rng rng(5000 + 97 * n + 13 * r + i);
                int flips = 1 + static_cast<int>(rng.below(3));
                std::vector<std::pair<int, int>> within, cross;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        (g.has_edge(u, v) ? cross : within).push_back({u, v});
                int done = 0;
                while (done < flips) {
                    bool add = rng.below(2) == 0;
                    auto& pool = add ? within : cross;
                    auto [u, v] = pool[rng.below(pool.size())];
                    if (add && !g.has_edge(u, v)) {
                        g.add_edge(u, v);
                        ++done;
                    } else if (!add && g.has_edge(u, v)) {
                        g.remove_edge(u, v);
                        ++done;
                    }
                }
                Params p = perturbation_params(r, n, flips);
                try {
                    Certificate cert = stability_dichotomy(g, p);
                    CheckResult chk = check_certificate(g, cert, p);
                    if (!chk.ok)
                        res.fail("flip n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 " i=" + std::to_string(i) + ": " + chk.reason);
                    else if (!cert.is_condition_a() &&
                             !rebuilds_turan_exactly(apply_edits(g, cert.b().edits),
                                                     cert.b().edits.part_assignment, r))
                        res.fail("flip input: edited graph is not the reference graph");
                } catch (const std::exception& e) {
                    res.fail("flip n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " i=" + std::to_string(i) + ": " + e.what());
                }
            }
            // dense random inputs: heavy peeling, witness route
            for (int i = 0; i < 20 && res.ok; ++i) {
                ++runs;
                Graph g = random_graph_fixed_edges(n, default_probe_edges(n, r),
                                                   6000 + 101 * n + 17 * r + i);
                Params p = dense_params(r, n);
                try {
                    Certificate cert = stability_dichotomy(g, p);
                    CheckResult chk = check_certificate(g, cert, p);
                    if (!chk.ok)
                        res.fail("dense n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 " i=" + std::to_string(i) + ": " + chk.reason);
                    else if (!cert.is_condition_a() &&
                             !rebuilds_turan_exactly(apply_edits(g, cert.b().edits),
                                                     cert.b().edits.part_assignment, r))
                        res.fail("dense input: edited graph is not the reference graph");
                } catch (const std::exception& e) {
                    res.fail("dense n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " i=" + std::to_string(i) + ": " + e.what());
                }
            }
        }
        if (!res.ok) break;
    }
    if (res.ok) res.detail = std::to_string(runs) + " runs over n in {30,60}, r in {2,3}";
    return res;
}

Result check_edit_oracle() {
    Result res;
    // engine output can never beat the exhaustive minimum
    for (int trial = 0; trial < 50 && res.ok; ++trial) {
        int n = 6 + trial % 5;
        int r = 2 + trial % 2;
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        Graph g = random_graph_fixed_edges(n, pairs / 2, 7000 + trial);
        ThresholdOverrides ov;
        ov.joint_threshold = 1e18;  // keep every edge; force the edit route
        Params p = params_for_a(r, n, 0.3, ov);
        try {
            Certificate cert = stability_dichotomy(g, p);
            auto [best, oracle_edits] = min_edit_to_turan_bruteforce(g, r);
            if (cert.is_condition_a()) {
                res.fail("trial " + std::to_string(trial) + ": unexpected witness route");
            } else if (cert.b().edit_count < best) {
                res.fail("trial " + std::to_string(trial) + ": engine " +
                         std::to_string(cert.b().edit_count) + " beats exhaustive " +
                         std::to_string(best));
            } else if (!check_certificate(g, cert, p).ok) {
                res.fail("trial " + std::to_string(trial) + ": certificate rejected");
            } else if (!matches_turan_under(apply_edits(g, oracle_edits),
                                            oracle_edits.part_assignment, r)) {
                res.fail("trial " + std::to_string(trial) + ": exhaustive edits do not verify");
            }
        } catch (const std::exception& e) {
            res.fail("trial " + std::to_string(trial) + ": " + e.what());
        }
    }
    // single flips of the reference graph must be repaired optimally
    int flips_checked = 0;
    for (auto [n, r] : std::vector<std::pair<int, int>>{{8, 2}, {9, 2}, {10, 2}, {9, 3}, {10, 3}}) {
        if (!res.ok) break;
        double frac = std::ceil(static_cast<double>(n) / r) - static_cast<double>(n) / r;
        double an = ((1.0 + frac) / 7.0 + 0.25) / 2.0;
        ThresholdOverrides ov;
        ov.joint_threshold = 0.0;
        Params p = params_for_a(r, n, an / n, ov);
        Graph base = turan_graph(n, r);
        for (int u = 0; u < n && res.ok; ++u)
            for (int v = u + 1; v < n; ++v) {
                Graph g = base;
                if (g.has_edge(u, v))
                    g.remove_edge(u, v);
                else
                    g.add_edge(u, v);
                ++flips_checked;
                try {
                    Certificate cert = stability_dichotomy(g, p);
                    auto [best, oracle_edits] = min_edit_to_turan_bruteforce(g, r);
                    if (cert.is_condition_a() || cert.b().edit_count != best ||
                        !check_certificate(g, cert, p).ok) {
                        res.fail("flip (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") of n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 ": engine " +
                                 (cert.is_condition_a()
                                      ? std::string("witness")
                                      : std::to_string(cert.b().edit_count)) +
                                 " vs exhaustive " + std::to_string(best));
                        break;
                    }
                } catch (const std::exception& e) {
                    res.fail("flip (" + std::to_string(u) + "," + std::to_string(v) + ") of n=" +
                             std::to_string(n) + " r=" + std::to_string(r) + ": " + e.what());
                    break;
                }
            }
    }
    if (res.ok)
        res.detail = "50 random graphs + " + std::to_string(flips_checked) + " single flips";
    return res;
}

Result check_planted_recovery() {
    Result res;
    double worst = 0.0;
    for (int seed = 1; seed <= 10 && res.ok; ++seed) {
        Rng rng(seed);
        std::vector<std::uint64_t> drawn = sample_distinct(rng, 40, 8);
        std::vector<int> plant(drawn.begin(), drawn.end());
        std::vector<std::vector<int>> parts{{plant[0], plant[1]},
                                            {plant[2], plant[3]},
                                            {plant[4], plant[5], plant[6], plant[7]}};
        Graph g(40);
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                for (int u : parts[a])
                    for (int v : parts[b]) g.add_edge(u, v);
        for (int u = 0; u < 40; ++u)
            for (int v = u + 1; v < 40; ++v)
                if (!g.has_edge(u, v) && rng.unit() < 0.2) g.add_edge(u, v);

        auto t0 = Clock::now();
        auto found = find_kr_s_t(g, 3, 2);
        double secs = seconds_since(t0);
        worst = std::max(worst, secs);
        if (!found) {
            res.fail("seed " + std::to_string(seed) + ": no witness found");
        } else if (found->t < 4) {
            res.fail("seed " + std::to_string(seed) + ": t=" + std::to_string(found->t) +
                     " below the planted 4");
        } else if (!verify_multipartite_witness(
                       g, found->witness, {2, 2, static_cast<int>(found->t)})) {
            res.fail("seed " + std::to_string(seed) + ": witness fails verification");
        } else if (secs >= 10.0) {
            res.fail("seed " + std::to_string(seed) + ": " + std::to_string(secs) + " s");
        }
    }
    if (res.ok) {
        std::ostringstream d;
        d << "10 seeds, slowest " << std::fixed << std::setprecision(2) << worst << " s";
        res.detail = d.str();
    }
    return res;
}

Result check_completion_bound() {
    Result res;
    for (int trial = 0; trial < 100 && res.ok; ++trial) {
        int r = 2 + trial % 3;
        int k = 3 + trial % 6;
        int n = r * k;
        double q = 0.3 + 0.3 * (trial % 3);
        Rng rng(8000 + trial);
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (u / k != v / k && rng.unit() < q) h.add_edge(u, v);

        long long cross_pairs = static_cast<long long>(r) * (r - 1) / 2 * k * k;
        long long missing = cross_pairs - static_cast<long long>(h.edge_count());
        long long delta = h.min_degree();
        // missing <= ((1 - 1/r) n - delta) n / 2, scaled by 2r to stay integral
        long long lhs = 2LL * r * missing;
        long long rhs = (static_cast<long long>(r - 1) * n - r * delta) * n;
        if (lhs > rhs)
            res.fail("trial " + std::to_string(trial) + ": " + std::to_string(lhs) + " > " +
                     std::to_string(rhs));
    }
    if (res.ok) res.detail = "100 graphs, r in {2,3,4}";
    return res;
}

Result check_report_reproducibility() {
    Result res;
    ExperimentConfig cfg;
    cfg.mode = "probe";
    cfg.r = 2;
    cfg.c = 0.7;
    cfg.eps = 1e-3;
    cfg.n = 20;
    cfg.trials = 5;
    cfg.seed = 42;
    cfg.overrides.joint_threshold = 5.0;
    cfg.overrides.edit_budget = 1;

    Report report = run_probe(cfg);
    for (const auto& rec : report.trials)
        if (rec.failed) res.fail("trial " + std::to_string(rec.trial) + ": " + rec.reason);

    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string path_a = "acceptance_probe_a.json";
    const std::string path_b = "acceptance_probe_b.json";
    if (res.ok) {
        emit_report(report, path_a);
        emit_report(report, path_b);
        if (slurp(path_a) != slurp(path_b)) res.fail("structured outputs differ");
        if (slurp(csv_sibling_path(path_a)) != slurp(csv_sibling_path(path_b)))
            res.fail("tabular outputs differ");
        if (slurp(csv_sibling_path(path_a)).empty()) res.fail("tabular output missing");
        std::remove(path_a.c_str());
        std::remove(path_b.c_str());
        std::remove(csv_sibling_path(path_a).c_str());
        std::remove(csv_sibling_path(path_b).c_str());
    }
    if (res.ok) res.detail = "5 trials emitted twice, byte-identical";
    return res;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Result (*run)();
    };
    const Entry entries[] = {
        {"exact clique counts match exhaustive enumeration", check_clique_oracle},
        {"spectral radius closed forms", check_spectral_closed_forms},
        {"spectral radius degree and edge bounds", check_spectral_bounds},
        {"edge-removal interlacing bound", check_removal_interlacing},
        {"peeling loop contracts", check_peeling_contracts},
        {"dichotomy certificates verify end to end", check_dichotomy_soundness},
        {"edit counts against the exhaustive oracle", check_edit_oracle},
        {"planted multipartite recovery", check_planted_recovery},
        {"completion bound on partite graphs", check_completion_bound},
        {"byte-identical report emission", check_report_reproducibility},
    };

    int failures = 0;
    int idx = 0;
    for (const Entry& e : entries) {
        ++idx;
        auto t0 = Clock::now();
        Result r = e.run();
        double secs = seconds_since(t0);
        std::printf("[%s] %2d %s (%.1f s)%s%s\n", r.ok ? "PASS" : "FAIL", idx, e.name, secs,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (!r.ok) ++failures;
    }
    if (failures) std::printf("%d of 10 checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}
