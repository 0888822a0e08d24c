#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "turancert/graph.hpp"

namespace turancert {

struct EdgeSupport {
    Edge e;
    std::uint64_t cliques = 0;  // r-cliques containing e
};

struct CliqueStats {
    int r = 0;
    std::uint64_t total = 0;                 // number of r-cliques
    std::vector<EdgeSupport> edge_support;   // ascending by edge
    std::uint64_t joints() const;            // max support; 0 if no edges
};

// Exact r-clique count via recursive neighborhood intersection over a
// degeneracy order.  r >= 1; overflow of the 64-bit count throws
// std::overflow_error rather than wrapping.
std::uint64_t count_cliques(const Graph& g, int r);

// Per-edge r-clique membership counts, rooted at each edge's common
// neighborhood, plus the total.  r >= 2.
CliqueStats clique_stats(const Graph& g, int r);

// Independent oracle: enumerate all r-subsets and test pairwise adjacency.
// Guarded by C(n, r) <= 10^7, otherwise TooLargeError.
std::uint64_t count_cliques_bruteforce(const Graph& g, int r);

// Number of k-cliques of g whose vertices all lie in `cand`.
std::uint64_t count_cliques_in(const Graph& g, const Bitset& cand, int k);

// Enumerates each k-clique inside `cand` once (vertices ascending),
// invoking fn with the clique's vertex list.
void enumerate_cliques_in(const Graph& g, const Bitset& cand, int k,
                          const std::function<void(const std::vector<int>&)>& fn);

}  // namespace turancert
