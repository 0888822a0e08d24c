#include "turancert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "turancert/errors.hpp"

namespace turancert {

namespace {

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> comps;
    std::vector<char> visited(n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        visited[s] = 1;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            g.neighbors(v).for_each([&](int w) {
                if (!visited[w]) {
                    visited[w] = 1;
                    queue.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

// Power iteration on (A + I) restricted to one component; returns the
// component's largest adjacency eigenvalue (shift already subtracted).
double component_radius(const Graph& g, const std::vector<int>& comp, double tol,
                        long& iterations, double& residual_out) {
    const int k = static_cast<int>(comp.size());
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < k; ++i) pos[comp[i]] = i;

    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
    std::vector<double> y(k);
    double rho_prev = 0.0;
    bool have_prev = false;

    for (long it = 1;; ++it) {
        if (it > kSpectralIterationCap)
            throw NoConvergenceError("power iteration exceeded " +
                                     std::to_string(kSpectralIterationCap) + " iterations");
        ++iterations;

        for (int i = 0; i < k; ++i) {
            double acc = x[i];  // diagonal shift
            g.neighbors(comp[i]).for_each([&](int w) { acc += x[pos[w]]; });
            y[i] = acc;
        }

        // Rayleigh quotient of the shifted operator (x has unit 2-norm)
        double rho = 0.0;
        for (int i = 0; i < k; ++i) rho += x[i] * y[i];

        double res_inf = 0.0;
        for (int i = 0; i < k; ++i) res_inf = std::max(res_inf, std::abs(y[i] - rho * x[i]));
        double change = have_prev ? std::abs(rho - rho_prev) : res_inf + tol;
        double residual = std::max(res_inf, change);
        if (residual <= tol) {
            residual_out = std::max(residual_out, residual);
            return rho - 1.0;
        }
        rho_prev = rho;
        have_prev = true;

        double norm = 0.0;
        for (double t : y) norm += t * t;
        norm = std::sqrt(norm);
        for (int i = 0; i < k; ++i) x[i] = y[i] / norm;
    }
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    if (g.order() < 1) throw std::invalid_argument("spectral radius needs at least one vertex");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    SpectralResult result;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;  // isolated vertex contributes 0
        double mu = component_radius(g, comp, tol, result.iterations, result.residual);
        result.mu = std::max(result.mu, mu);
    }
    return result;
}

double sqrt_edge_bound(const Graph& g) {
    return std::sqrt(2.0 * static_cast<double>(g.edge_count()));
}

WeylCheck weyl_gap_check(const Graph& g, const std::vector<Edge>& removed, double slack) {
    Graph g_minus = g;
    Graph r_graph(g.order());
    for (const Edge& e : removed) {
        g_minus.remove_edge(e.u, e.v);  // InvalidEditError if not a subset of E(g)
        r_graph.add_edge(e.u, e.v);
    }
    WeylCheck check;
    check.mu_g = spectral_radius(g).mu;
    check.mu_g_minus = spectral_radius(g_minus).mu;
    check.mu_removed = spectral_radius(r_graph).mu;
    check.holds = check.mu_g_minus >= check.mu_g - check.mu_removed - slack;
    return check;
}

}  // namespace turancert
