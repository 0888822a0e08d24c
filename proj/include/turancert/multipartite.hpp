#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turancert/graph.hpp"

namespace turancert {

// Complete multipartite *subgraph* witness: the parts are disjoint vertex
// sets and every cross-part pair must be an edge; edges inside a part are
// irrelevant.
struct MultipartiteWitness {
    std::vector<std::vector<int>> parts;
};

enum class SearchRegime { exact, greedy };

// Exact search applies when sum(sizes) <= kExactSumLimit and
// |g| <= kExactOrderLimit; a returned nullopt is then a proof of absence.
// Outside that window a seeded greedy heuristic runs and nullopt only means
// "not found".
inline constexpr int kExactSumLimit = 20;
inline constexpr int kExactOrderLimit = 64;
inline constexpr std::uint64_t kExactNodeBudget = 20'000'000;

// Smallest witness in part-by-part lexicographic order, or nullopt.  In the
// exact regime a hit of the node budget raises BudgetExceededError (the
// absence claim would otherwise be unsound).
std::optional<MultipartiteWitness> find_complete_multipartite(const Graph& g,
                                                              const std::vector<int>& sizes);

struct KrstWitness {
    MultipartiteWitness witness;  // r parts: r-1 of size s, then the t-part
    std::uint64_t t = 0;
    SearchRegime regime = SearchRegime::greedy;
};

// Searches for r parts: r-1 parts of size exactly s plus a final part as
// large as the search achieves (the full common neighborhood of the chosen
// core).  Exact regime ((r-1)*s within limits) maximizes t over all cores;
// if its node budget runs out the search degrades to the greedy regime.
// r >= 2 and s >= 1, else std::invalid_argument.
std::optional<KrstWitness> find_kr_s_t(const Graph& g, int r, int s);

// Parts disjoint, sizes match elementwise, all vertices in range, every
// cross-part pair adjacent.
bool verify_multipartite_witness(const Graph& g, const MultipartiteWitness& w,
                                 const std::vector<int>& sizes);

}  // namespace turancert
