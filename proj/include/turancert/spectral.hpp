#pragma once

#include <vector>

#include "turancert/graph.hpp"

namespace turancert {

inline constexpr double kSpectralTol = 1e-9;
inline constexpr long kSpectralIterationCap = 1'000'000;

struct SpectralResult {
    double mu = 0.0;      // largest adjacency eigenvalue
    long iterations = 0;  // summed over connected components
    double residual = 0.0;  // max over components of the stopping residual
};

// Largest adjacency eigenvalue by shifted power iteration.  The +1 diagonal
// shift keeps bipartite components from oscillating; each connected
// component is iterated separately from an all-ones start, so the result is
// deterministic.  The residual is max(|Rayleigh change|, ||Ax - mu x||_inf)
// with x normalized to unit 2-norm.  Throws NoConvergenceError at the
// iteration cap, std::invalid_argument for an empty graph or tol <= 0.
SpectralResult spectral_radius(const Graph& g, double tol = kSpectralTol);

// sqrt(2 * edge_count): classic upper bound for the spectral radius
double sqrt_edge_bound(const Graph& g);

struct WeylCheck {
    double mu_g = 0.0;
    double mu_g_minus = 0.0;  // after deleting `removed`
    double mu_removed = 0.0;  // graph consisting of the removed edges alone
    bool holds = false;       // mu_g_minus >= mu_g - mu_removed - slack
};

// Eigenvalue interlacing check for an edge deletion: removing a set R of
// edges can lower the spectral radius by at most mu(R).  `removed` must be a
// subset of E(g).  `slack` absorbs eigensolver error in the comparison.
WeylCheck weyl_gap_check(const Graph& g, const std::vector<Edge>& removed,
                         double slack = 1e-6);

}  // namespace turancert
