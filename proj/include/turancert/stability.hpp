#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "turancert/cliques.hpp"
#include "turancert/graph.hpp"
#include "turancert/multipartite.hpp"

namespace turancert {

struct ThresholdOverrides {
    std::optional<double> joint_threshold;
    std::optional<std::uint64_t> edit_budget;
};

// All quantities the engine derives from (r, c, eps, n).  Only the two
// thresholds can be overridden -- everything else recomputes exactly from
// its formula, which is what makes certificates reproducible.
struct Params {
    int r = 2;
    double c = 0.0;
    double eps = 0.0;
    int n = 0;

    double theta = 0.0;  // c^(1/(r+1)) * r^(2r+5)
    double b = 0.0;      // eps + sqrt(2*theta)
    double a = 0.0;      // b^(1/3)

    std::uint64_t s = 0;  // floor(c * ln n)
    std::uint64_t t = 0;  // ceil(n^(1 - sqrt(c)))

    double joint_threshold = 0.0;          // default n^(r-1) / r^(2r+5)
    double joint_threshold_default = 0.0;
    bool joint_threshold_overridden = false;

    std::uint64_t edit_budget = 0;  // default ceil(theta * n^2)
    std::uint64_t edit_budget_default = 0;
    bool edit_budget_overridden = false;

    long long part_size_u = 0;       // ceil((1/r - 7(r-1)a) n); may be <= 0 when relaxed
    double edit_bound = 0.0;         // (eps^(1/4) + c^(1/(8r+8))) n^2
    double sharp_edit_bound = 0.0;   // (theta + (7r^2 - 3r) a) n^2
    double mindeg_goal = 0.0;        // (1 - 1/r - 7a) n
    double size_goal = 0.0;          // (1 - 4a) n

    // true iff 1/ln n < c < r^(-8(r+21)(r+1)) and 0 < eps < 2^-36 r^-24
    bool asymptotic_regime = false;
};

// Validates r >= 2, n >= 3, c > 0, eps > 0.  floor(c ln n) < 1 is an error
// unless at least one override is supplied (relaxed desk-scale runs).
Params derived_params(int r, double c, double eps, int n,
                      const ThresholdOverrides& overrides = {});

struct RemovalRecord {
    Edge e;
    std::uint64_t support = 0;  // (r+1)-clique count through e when removed
};

struct ProcedureResult {
    Graph g_prime;
    std::vector<RemovalRecord> removals;
};

// Joint-destroying loop: while some edge lies in more than `joint_threshold`
// cliques of order r+1, remove the edge with the largest such count
// (lexicographic tie-break) and log it.  Afterwards js_{r+1}(g') <=
// joint_threshold.
ProcedureResult procedure_p(const Graph& g, int r, double joint_threshold);

// Induced r-partite subgraph meeting both goals: at least `size_goal`
// vertices and minimum induced degree strictly above `mindeg_goal`.
// Exhaustive for |g| <= kExtractExhaustiveLimit (nullopt is then a proof of
// absence); a deterministic greedy/local-search pipeline otherwise.  Parts
// come back sorted, ordered by smallest member.
inline constexpr int kExtractExhaustiveLimit = 16;
std::optional<std::vector<std::vector<int>>> extract_rpartite(const Graph& g, int r,
                                                              int size_goal,
                                                              double mindeg_goal);

// Keeps the first max(1, params.part_size_u) vertices of every part, assigns
// everything else round-robin to the smallest parts (ties resolved toward
// each vertex's least-conflicting part), and emits the exact edit set
// turning g into the complete r-partite graph with balanced part sizes under
// that assignment.  Throws std::invalid_argument if a part is too small.
EditSet trim_and_complete(const std::vector<std::vector<int>>& g0_parts, const Graph& g,
                          const Params& params);

// Large complete (r+1)-partite subgraph: r parts of size s plus a part of
// size t_achieved >= 1, all inside the *original* graph.
struct ConditionA {
    MultipartiteWitness witness;
    std::uint64_t s = 0;
    std::uint64_t t_achieved = 0;
    SearchRegime regime = SearchRegime::greedy;
};

// Explicit edit set onto the balanced complete r-partite graph.
struct ConditionB {
    EditSet edits;
    std::uint64_t edit_count = 0;
    double bound = 0.0;        // (eps^(1/4) + c^(1/(8r+8))) n^2
    double sharp_bound = 0.0;  // (theta + (7r^2-3r) a) n^2
    bool within_bound = false; // edit_count < bound
};

struct Certificate {
    std::variant<ConditionA, ConditionB> outcome;
    std::vector<RemovalRecord> removal_log;  // provenance of procedure_p

    bool is_condition_a() const { return std::holds_alternative<ConditionA>(outcome); }
    const ConditionA& a() const { return std::get<ConditionA>(outcome); }
    const ConditionB& b() const { return std::get<ConditionB>(outcome); }
};

// Runs procedure_p; if it removed at least edit_budget edges, attempts the
// witness route on the original graph (ConditionA), else -- and as the
// fallback -- extracts an r-partite core from the cleaned graph and
// completes it into an edit certificate (ConditionB).  Every returned
// certificate has already passed check_certificate.  Throws
// ExtractionFailedError with diagnostics when the ConditionB path cannot
// meet its goals.
Certificate stability_dichotomy(const Graph& g, const Params& params);

struct CheckResult {
    bool ok = false;
    std::string reason;  // empty when ok
    explicit operator bool() const { return ok; }
};

// Independent verification: replays the removal log against g (each logged
// support must recompute exactly and exceed the threshold), then checks the
// claimed condition -- witness validity and part sizes for ConditionA;
// edits turning g into a balanced complete r-partite graph, plus
// js_{r+1} <= threshold on the cleaned graph, for ConditionB.
CheckResult check_certificate(const Graph& g, const Certificate& cert, const Params& params);

}  // namespace turancert
