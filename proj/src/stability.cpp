#include "turancert/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "turancert/errors.hpp"

namespace turancert {

namespace {

// ceil/floor with a one-sided guard against representation noise: formulas
// like (1/r - 7(r-1)a) * n land exactly on integers for hand-picked inputs,
// and a stray 1-ulp excursion must not shift the rounded value.
long long ceil_guarded(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }
long long floor_guarded(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

// ----------------------------------------------------------------- params ---

Params derived_params(int r, double c, double eps, int n, const ThresholdOverrides& overrides) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    Params p;
    p.r = r;
    p.c = c;
    p.eps = eps;
    p.n = n;

    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    const double r_pow = std::pow(rd, 2.0 * rd + 5.0);

    p.theta = std::pow(c, 1.0 / (rd + 1.0)) * r_pow;
    p.b = eps + std::sqrt(2.0 * p.theta);
    p.a = std::cbrt(p.b);

    long long s = floor_guarded(c * std::log(nd));
    bool any_override = overrides.joint_threshold.has_value() || overrides.edit_budget.has_value();
    if (s < 1 && !any_override)
        throw std::invalid_argument(
            "floor(c ln n) < 1: no witness part size at this scale; "
            "override the thresholds for relaxed runs");
    p.s = s < 0 ? 0 : static_cast<std::uint64_t>(s);
    p.t = static_cast<std::uint64_t>(
        std::max<long long>(1, ceil_guarded(std::pow(nd, 1.0 - std::sqrt(c)))));

    p.joint_threshold_default = std::pow(nd, rd - 1.0) / r_pow;
    p.joint_threshold = overrides.joint_threshold.value_or(p.joint_threshold_default);
    p.joint_threshold_overridden = overrides.joint_threshold.has_value();
    if (p.joint_threshold < 0.0) throw std::invalid_argument("joint threshold is negative");

    p.edit_budget_default = static_cast<std::uint64_t>(
        std::max<long long>(0, ceil_guarded(p.theta * nd * nd)));
    p.edit_budget = overrides.edit_budget.value_or(p.edit_budget_default);
    p.edit_budget_overridden = overrides.edit_budget.has_value();

    p.part_size_u = ceil_guarded((1.0 / rd - 7.0 * (rd - 1.0) * p.a) * nd);
    p.edit_bound =
        (std::pow(eps, 0.25) + std::pow(c, 1.0 / (8.0 * rd + 8.0))) * nd * nd;
    p.sharp_edit_bound = (p.theta + (7.0 * rd * rd - 3.0 * rd) * p.a) * nd * nd;
    p.mindeg_goal = (1.0 - 1.0 / rd - 7.0 * p.a) * nd;
    p.size_goal = (1.0 - 4.0 * p.a) * nd;

    const double c_upper = std::exp(-8.0 * (rd + 21.0) * (rd + 1.0) * std::log(rd));
    const double eps_upper = std::pow(2.0, -36.0) * std::pow(rd, -24.0);
    p.asymptotic_regime = (c > 1.0 / std::log(nd)) && (c < c_upper) && (eps < eps_upper);
    return p;
}

// ------------------------------------------------------------ procedure P ---

ProcedureResult procedure_p(const Graph& g, int r, double joint_threshold) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (joint_threshold < 0.0) throw std::invalid_argument("joint threshold is negative");
    const int r1 = r + 1;

    ProcedureResult result{g, {}};
    Graph& cur = result.g_prime;

    // supports under maintenance; exact decremental updates below keep them
    // equal to a from-scratch recount at every step
    std::map<Edge, std::uint64_t> support;
    {
        CliqueStats stats = clique_stats(g, r1);
        for (const auto& es : stats.edge_support) support[es.e] = es.cliques;
    }

    while (true) {
        // max support, lexicographic tie-break (map iterates in edge order)
        Edge best_edge(0, 1);
        std::uint64_t best = 0;
        bool found = false;
        for (const auto& [e, cnt] : support) {
            if (cnt > best) {
                best = cnt;
                best_edge = e;
                found = true;
            }
        }
        if (!found || !(static_cast<double>(best) > joint_threshold)) break;

        // every (r+1)-clique through best_edge dies with it; each loses one
        // membership on each of its other edges
        Bitset common = cur.neighbors(best_edge.u) & cur.neighbors(best_edge.v);
        enumerate_cliques_in(cur, common, r1 - 2, [&](const std::vector<int>& rest) {
            for (std::size_t i = 0; i < rest.size(); ++i) {
                --support[Edge(best_edge.u, rest[i])];
                --support[Edge(best_edge.v, rest[i])];
                for (std::size_t j = i + 1; j < rest.size(); ++j)
                    --support[Edge(rest[i], rest[j])];
            }
        });
        support.erase(best_edge);
        cur.remove_edge(best_edge.u, best_edge.v);
        result.removals.push_back({best_edge, best});
    }
    return result;
}

// ------------------------------------------------------- trim and complete ---

EditSet trim_and_complete(const std::vector<std::vector<int>>& g0_parts, const Graph& g,
                          const Params& params) {
    const int n = g.order();
    const int r = static_cast<int>(g0_parts.size());
    if (r < 1) throw std::invalid_argument("no parts given");
    if (r > n) throw std::invalid_argument("more parts than vertices");

    // relaxed parameter sets can push the formula to zero or below; a part
    // still needs at least one anchor vertex
    const long long u_eff = std::max<long long>(1, params.part_size_u);
    for (const auto& part : g0_parts)
        if (static_cast<long long>(part.size()) < u_eff)
            throw std::invalid_argument("part of size " + std::to_string(part.size()) +
                                        " is smaller than the trim size " +
                                        std::to_string(u_eff));

    Bitset placed(n);
    std::vector<int> assign(n, -1);
    std::vector<std::vector<int>> kept(r);
    std::vector<Bitset> kept_bits(r, Bitset(n));
    for (int p = 0; p < r; ++p) {
        std::vector<int> sorted = g0_parts[p];
        std::sort(sorted.begin(), sorted.end());
        for (long long i = 0; i < u_eff; ++i) {
            int v = sorted[static_cast<std::size_t>(i)];
            if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
            if (placed.test(v)) throw std::invalid_argument("parts overlap");
            placed.set(v);
            assign[v] = p;
            kept[p].push_back(v);
            kept_bits[p].set(v);
        }
    }

    // Everyone else goes back in, one smallest part at a time.  Each pending
    // vertex prefers the part against which it has the fewest conflicts
    // (edges into the kept core of that part plus non-edges toward the other
    // cores); ties among equally small parts are broken toward a part that
    // some pending vertex actually prefers, so near-balanced inputs reabsorb
    // their own trimmed vertices.
    auto conflict_score = [&](int v, int p) {
        long long score = 0;
        for (int q = 0; q < r; ++q) {
            int edges_in = g.neighbors(v).and_count(kept_bits[q]);
            if (q == p)
                score += edges_in;
            else
                score += static_cast<long long>(kept[q].size()) - edges_in;
        }
        return score;
    };

    std::vector<std::vector<int>> bucket(r);  // pending vertices by preferred part
    for (int v = 0; v < n; ++v) {
        if (placed.test(v)) continue;
        int pref = 0;
        long long best = std::numeric_limits<long long>::max();
        for (int p = 0; p < r; ++p) {
            long long sc = conflict_score(v, p);
            if (sc < best) {
                best = sc;
                pref = p;
            }
        }
        bucket[pref].push_back(v);  // ascending: v loop is ascending
    }

    std::vector<std::size_t> cursor(r, 0);
    std::vector<long long> size_of(r, u_eff);
    long long pending = n - static_cast<long long>(r) * u_eff;
    while (pending > 0) {
        long long smallest = *std::min_element(size_of.begin(), size_of.end());
        int target = -1;
        for (int p = 0; p < r; ++p)
            if (size_of[p] == smallest && cursor[p] < bucket[p].size()) {
                target = p;
                break;
            }
        if (target >= 0) {
            int v = bucket[target][cursor[target]++];
            assign[v] = target;
            size_of[target]++;
        } else {
            // no smallest part is preferred by anyone; take the smallest
            // part and the least-conflicting pending vertex for it
            for (int p = 0; p < r; ++p)
                if (size_of[p] == smallest) {
                    target = p;
                    break;
                }
            int pick = -1;
            long long pick_score = std::numeric_limits<long long>::max();
            for (int b = 0; b < r; ++b) {
                for (std::size_t i = cursor[b]; i < bucket[b].size(); ++i) {
                    long long sc = conflict_score(bucket[b][i], target);
                    if (sc < pick_score || (sc == pick_score && bucket[b][i] < pick)) {
                        pick_score = sc;
                        pick = bucket[b][i];
                    }
                }
            }
            for (int b = 0; b < r; ++b) {
                auto& vec = bucket[b];
                for (std::size_t i = cursor[b]; i < vec.size(); ++i)
                    if (vec[i] == pick) {
                        vec.erase(vec.begin() + static_cast<long long>(i));
                        break;
                    }
            }
            assign[pick] = target;
            size_of[target]++;
        }
        --pending;
    }

    EditSet edits;
    edits.part_assignment = assign;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool same = assign[u] == assign[v];
            bool edge = g.has_edge(u, v);
            if (same && edge) edits.removals.push_back(Edge(u, v));
            if (!same && !edge) edits.additions.push_back(Edge(u, v));
        }
    }
    return edits;
}

// -------------------------------------------------------------- dichotomy ---

Certificate stability_dichotomy(const Graph& g, const Params& params) {
    if (g.order() != params.n)
        throw std::invalid_argument("graph order does not match params.n");
    const int r = params.r;

    ProcedureResult proc = procedure_p(g, r, params.joint_threshold);

    Certificate cert;
    cert.removal_log = proc.removals;

    bool many_removals = proc.removals.size() >= params.edit_budget;
    if (many_removals && params.s >= 1) {
        // witness route on the ORIGINAL graph
        auto found = find_kr_s_t(g, r + 1, static_cast<int>(params.s));
        if (found) {
            ConditionA a;
            a.witness = found->witness;
            a.s = params.s;
            a.t_achieved = found->t;
            a.regime = found->regime;
            cert.outcome = std::move(a);
            CheckResult self = check_certificate(g, cert, params);
            if (!self)
                throw std::logic_error("internal: fresh witness certificate failed: " +
                                       self.reason);
            return cert;
        }
    }

    // edit route on the cleaned graph
    int size_goal = static_cast<int>(std::max<long long>(0, ceil_guarded(params.size_goal)));
    auto parts = extract_rpartite(proc.g_prime, r, size_goal, params.mindeg_goal);
    if (!parts) {
        std::ostringstream why;
        why << "no induced " << r << "-partite subgraph with >= " << size_goal
            << " vertices and min degree > " << params.mindeg_goal << " in the cleaned graph ("
            << proc.g_prime.order() << " vertices, " << proc.g_prime.edge_count()
            << " edges after " << proc.removals.size() << " removals)";
        throw ExtractionFailedError(why.str());
    }

    ConditionB b;
    try {
        b.edits = trim_and_complete(*parts, g, params);
    } catch (const std::invalid_argument& e) {
        std::ostringstream why;
        why << "extracted parts unusable for trimming: " << e.what() << " (part sizes:";
        for (const auto& p : *parts) why << " " << p.size();
        why << ", trim size " << std::max<long long>(1, params.part_size_u) << ")";
        throw ExtractionFailedError(why.str());
    }
    b.edit_count = b.edits.edit_count();
    b.bound = params.edit_bound;
    b.sharp_bound = params.sharp_edit_bound;
    b.within_bound = static_cast<double>(b.edit_count) < params.edit_bound;
    cert.outcome = std::move(b);

    CheckResult self = check_certificate(g, cert, params);
    if (!self)
        throw std::logic_error("internal: fresh edit certificate failed: " + self.reason);
    return cert;
}

// ---------------------------------------------------------------- checker ---

namespace {

CheckResult fail(const std::string& reason) { return {false, reason}; }

// replays the removal log; on success leaves `replayed` at the cleaned graph
CheckResult replay_log(Graph& replayed, const std::vector<RemovalRecord>& log, int r1,
                       double joint_threshold) {
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& rec = log[i];
        if (rec.e.u < 0 || rec.e.v >= replayed.order() || rec.e.u >= rec.e.v)
            return fail("removal log entry " + std::to_string(i) + " has a bad edge " +
                        edge_str(rec.e));
        if (!replayed.has_edge(rec.e.u, rec.e.v))
            return fail("removal log entry " + std::to_string(i) + ": edge " + edge_str(rec.e) +
                        " not present at its removal step");
        Bitset common = replayed.neighbors(rec.e.u) & replayed.neighbors(rec.e.v);
        std::uint64_t recount = count_cliques_in(replayed, common, r1 - 2);
        if (recount != rec.support)
            return fail("removal log entry " + std::to_string(i) + ": support of " +
                        edge_str(rec.e) + " recomputes to " + std::to_string(recount) +
                        ", logged " + std::to_string(rec.support));
        if (!(static_cast<double>(rec.support) > joint_threshold))
            return fail("removal log entry " + std::to_string(i) + ": support " +
                        std::to_string(rec.support) + " does not exceed the threshold");
        replayed.remove_edge(rec.e.u, rec.e.v);
    }
    return {true, ""};
}

}  // namespace

CheckResult check_certificate(const Graph& g, const Certificate& cert, const Params& params) {
    if (g.order() != params.n) return fail("graph order does not match params.n");

    Graph replayed = g;
    CheckResult log_ok =
        replay_log(replayed, cert.removal_log, params.r + 1, params.joint_threshold);
    if (!log_ok) return log_ok;

    // the log must be complete: no edge above the threshold may remain
    CliqueStats stats = clique_stats(replayed, params.r + 1);
    if (static_cast<double>(stats.joints()) > params.joint_threshold)
        return fail("cleaned graph still has an edge in " + std::to_string(stats.joints()) +
                    " cliques of order " + std::to_string(params.r + 1) +
                    ", above the threshold");

    if (cert.is_condition_a()) {
        const ConditionA& a = cert.a();
        if (cert.removal_log.size() < params.edit_budget)
            return fail("witness certificate with only " +
                        std::to_string(cert.removal_log.size()) +
                        " removals, below the budget of " + std::to_string(params.edit_budget));
        if (a.s != params.s)
            return fail("witness core size " + std::to_string(a.s) +
                        " does not match params.s = " + std::to_string(params.s));
        if (a.t_achieved < 1) return fail("witness t must be at least 1");
        std::vector<int> sizes(params.r, static_cast<int>(a.s));
        sizes.push_back(static_cast<int>(a.t_achieved));
        if (!verify_multipartite_witness(g, a.witness, sizes))
            return fail("multipartite witness fails verification against the original graph");
        return {true, ""};
    }

    const ConditionB& b = cert.b();
    if (b.bound != params.edit_bound || b.sharp_bound != params.sharp_edit_bound)
        return fail("certificate bounds do not match the parameters");
    if (b.edit_count != b.edits.edit_count())
        return fail("edit_count " + std::to_string(b.edit_count) + " != |additions| + |removals| = " +
                    std::to_string(b.edits.edit_count()));

    Graph edited(0);
    try {
        edited = apply_edits(g, b.edits);
    } catch (const std::exception& e) {
        return fail(std::string("edits do not apply cleanly: ") + e.what());
    }
    if (!matches_turan_under(edited, b.edits.part_assignment, params.r))
        return fail("edited graph is not the balanced complete " + std::to_string(params.r) +
                    "-partite graph under the certificate's part assignment");

    if (b.within_bound != (static_cast<double>(b.edit_count) < b.bound))
        return fail("within_bound flag inconsistent with edit_count and bound");
    return {true, ""};
}

}  // namespace turancert
