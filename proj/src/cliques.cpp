#include "turancert/cliques.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "turancert/errors.hpp"

namespace turancert {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = 0;
    if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("clique count overflow");
    return s;
}

// smallest-last elimination order; ties toward the smaller vertex id
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(n), order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        order.push_back(best);
        removed[best] = 1;
        g.neighbors(best).for_each([&](int w) {
            if (!removed[w]) --deg[w];
        });
    }
    return order;
}

}  // namespace

std::uint64_t count_cliques_in(const Graph& g, const Bitset& cand, int k) {
    if (k == 0) return 1;
    int c = cand.count();
    if (c < k) return 0;
    if (k == 1) return static_cast<std::uint64_t>(c);
    std::uint64_t total = 0;
    cand.for_each([&](int w) {
        Bitset next = g.neighbors(w) & cand;
        next.drop_through(w);  // pick vertices in ascending order
        total = checked_add(total, count_cliques_in(g, next, k - 1));
    });
    return total;
}

void enumerate_cliques_in(const Graph& g, const Bitset& cand, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> stack;
    stack.reserve(k);
    // plain recursive walk; mirrors count_cliques_in
    auto rec = [&](auto&& self, const Bitset& cur, int need) -> void {
        if (need == 0) {
            fn(stack);
            return;
        }
        if (cur.count() < need) return;
        cur.for_each([&](int w) {
            Bitset next = g.neighbors(w) & cur;
            next.drop_through(w);
            stack.push_back(w);
            self(self, next, need - 1);
            stack.pop_back();
        });
    };
    rec(rec, cand, k);
}

std::uint64_t count_cliques(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique order must be at least 1");
    const int n = g.order();
    if (r > n) return 0;
    if (r == 1) return static_cast<std::uint64_t>(n);

    auto order = degeneracy_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::uint64_t total = 0;
    Bitset later(n);
    for (int v = 0; v < n; ++v) {
        later.clear();
        g.neighbors(v).for_each([&](int w) {
            if (pos[w] > pos[v]) later.set(w);
        });
        total = checked_add(total, count_cliques_in(g, later, r - 1));
    }
    return total;
}

std::uint64_t CliqueStats::joints() const {
    std::uint64_t best = 0;
    for (const auto& es : edge_support) best = std::max(best, es.cliques);
    return best;
}

CliqueStats clique_stats(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("edge supports need clique order >= 2");
    CliqueStats stats;
    stats.r = r;
    stats.total = count_cliques(g, r);
    auto edges = g.edges();
    stats.edge_support.reserve(edges.size());
    for (const Edge& e : edges) {
        Bitset common = g.neighbors(e.u) & g.neighbors(e.v);
        std::uint64_t cnt = count_cliques_in(g, common, r - 2);
        stats.edge_support.push_back({e, cnt});
    }
    return stats;
}

std::uint64_t count_cliques_bruteforce(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique order must be at least 1");
    const int n = g.order();
    if (r > n) return 0;

    // C(n, r) with an early cap
    const std::uint64_t cap = 10'000'000;
    long double combos = 1.0L;
    for (int i = 0; i < r; ++i) combos = combos * (n - i) / (i + 1);
    if (combos > static_cast<long double>(cap))
        throw TooLargeError("subset count exceeds brute-force cap");

    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::uint64_t total = 0;
    while (true) {
        bool complete = true;
        for (int i = 0; i < r && complete; ++i)
            for (int j = i + 1; j < r && complete; ++j)
                if (!g.has_edge(idx[i], idx[j])) complete = false;
        if (complete) ++total;

        int k = r - 1;
        while (k >= 0 && idx[k] == n - r + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

}  // namespace turancert
