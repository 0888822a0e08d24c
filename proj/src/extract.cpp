#include <algorithm>
#include <optional>
#include <vector>

#include "turancert/cliques.hpp"
#include "turancert/stability.hpp"

namespace turancert {

namespace {

// ------------------------------------------------------------ exhaustive ---

// Proper coloring of g[verts] with at most r colors, first solution in DFS
// order.  Vertices are tried in descending-degree order and each vertex may
// only open one fresh color, which prunes color permutations.
std::optional<std::vector<int>> color_r(const Graph& g, const std::vector<int>& verts, int r) {
    const int k = static_cast<int>(verts.size());
    std::vector<int> order(verts);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<Bitset> color_bits(r, Bitset(g.order()));
    std::vector<int> color_of(g.order(), -1);

    auto rec = [&](auto&& self, int idx, int colors_open) -> bool {
        if (idx == k) return true;
        int v = order[idx];
        int tryable = std::min(r, colors_open + 1);
        for (int c = 0; c < tryable; ++c) {
            if (color_bits[c].intersects(g.neighbors(v))) continue;
            color_bits[c].set(v);
            color_of[v] = c;
            if (self(self, idx + 1, std::max(colors_open, c + 1))) return true;
            color_of[v] = -1;
            color_bits[c].reset(v);
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;

    std::vector<int> out(g.order(), -1);
    for (int v : verts) out[v] = color_of[v];
    return out;
}

std::vector<std::vector<int>> parts_from_coloring(const std::vector<int>& keep,
                                                  const std::vector<int>& color_of, int r) {
    std::vector<std::vector<int>> parts(r);
    for (int v : keep) parts[color_of[v]].push_back(v);
    for (auto& p : parts) std::sort(p.begin(), p.end());
    return parts;
}

// Move single vertices into empty parts.  A move into an empty part never
// creates a within-part edge, so properness is preserved; this only runs to
// avoid handing zero-size parts to the trimming step.
void fill_empty_parts(std::vector<std::vector<int>>& parts) {
    while (true) {
        int empty = -1, donor = -1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].empty() && empty < 0) empty = static_cast<int>(i);
            if (parts[i].size() >= 2 &&
                (donor < 0 || parts[i].size() > parts[donor].size()))
                donor = static_cast<int>(i);
        }
        if (empty < 0 || donor < 0) return;
        parts[empty].push_back(parts[donor].back());
        parts[donor].pop_back();
    }
}

void canonicalize(std::vector<std::vector<int>>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        if (x.empty() || y.empty()) return y.empty() && !x.empty();
        return x.front() < y.front();
    });
}

int induced_min_degree(const Graph& g, const Bitset& keep) {
    int best = -1;
    keep.for_each([&](int v) {
        int d = g.neighbors(v).and_count(keep);
        if (best < 0 || d < best) best = d;
    });
    return best < 0 ? 0 : best;
}

std::optional<std::vector<std::vector<int>>> extract_exhaustive(const Graph& g, int r,
                                                                int size_goal,
                                                                double mindeg_goal) {
    const int n = g.order();
    const int lower = std::max(size_goal, 1);
    if (lower > n) return std::nullopt;

    // deletion sets in increasing size, lexicographic within a size, so the
    // kept subgraph is as large as possible and ties are deterministic
    for (int d = 0; d + lower <= n; ++d) {
        std::vector<int> del(d);
        for (int i = 0; i < d; ++i) del[i] = i;
        while (true) {
            Bitset keep(n);
            keep.set_first(n);
            for (int v : del) keep.reset(v);

            if (induced_min_degree(g, keep) > mindeg_goal) {
                std::vector<int> verts = keep.to_vector();
                if (auto coloring = color_r(g, verts, r)) {
                    auto parts = parts_from_coloring(verts, *coloring, r);
                    fill_empty_parts(parts);
                    canonicalize(parts);
                    return parts;
                }
            }

            if (d == 0) break;
            int k = d - 1;
            while (k >= 0 && del[k] == n - d + k) --k;
            if (k < 0) break;
            ++del[k];
            for (int i = k + 1; i < d; ++i) del[i] = del[i - 1] + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- greedy ---

// (r+1)-cliques through each vertex of g[keep]
std::vector<std::uint64_t> per_vertex_clique_load(const Graph& g, const Bitset& keep, int r1) {
    std::vector<std::uint64_t> load(g.order(), 0);
    keep.for_each([&](int v) {
        Bitset cand = g.neighbors(v) & keep;
        load[v] = count_cliques_in(g, cand, r1 - 1);
    });
    return load;
}

struct Partition {
    std::vector<int> part_of;  // -1 for vertices outside keep
    std::vector<Bitset> members;
};

Partition greedy_partition(const Graph& g, const Bitset& keep, int r) {
    Partition part{std::vector<int>(g.order(), -1),
                   std::vector<Bitset>(r, Bitset(g.order()))};
    // place the vertex with the most already-placed neighbors next, so each
    // placement sees real conflict counts; on regular graphs a plain degree
    // order would scatter the early, conflict-free vertices arbitrarily
    std::vector<int> order;
    {
        Bitset placed(g.order());
        std::vector<int> pending = keep.to_vector();
        while (!pending.empty()) {
            std::size_t best = 0;
            int best_score = -1;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                int score = g.neighbors(pending[i]).and_count(placed);
                if (score > best_score ||
                    (score == best_score && g.degree(pending[i]) > g.degree(pending[best]))) {
                    best = i;
                    best_score = score;
                }
            }
            order.push_back(pending[best]);
            placed.set(pending[best]);
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        }
    }
    for (int v : order) {
        int best = 0, best_cost = g.order() + 1, best_size = g.order() + 1;
        for (int p = 0; p < r; ++p) {
            int cost = g.neighbors(v).and_count(part.members[p]);
            int size = part.members[p].count();
            if (cost < best_cost || (cost == best_cost && size < best_size)) {
                best = p;
                best_cost = cost;
                best_size = size;
            }
        }
        part.part_of[v] = best;
        part.members[best].set(v);
    }
    return part;
}

int within_edges_of(const Graph& g, int v, const Partition& part) {
    return g.neighbors(v).and_count(part.members[part.part_of[v]]);
}

// best-improvement single-vertex moves until no move reduces the number of
// within-part edges; returns the total still offending
long long hill_climb(const Graph& g, const Bitset& keep, Partition& part) {
    const int r = static_cast<int>(part.members.size());
    while (true) {
        long long total = 0;
        keep.for_each([&](int v) { total += within_edges_of(g, v, part); });
        if (total == 0) return 0;

        int move_v = -1, move_p = -1, best_gain = 0;
        keep.for_each([&](int v) {
            int cur = within_edges_of(g, v, part);
            for (int p = 0; p < r; ++p) {
                if (p == part.part_of[v]) continue;
                int gain = cur - g.neighbors(v).and_count(part.members[p]);
                if (gain > best_gain) {
                    best_gain = gain;
                    move_v = v;
                    move_p = p;
                }
            }
        });
        if (move_v < 0) return total / 2;  // stuck; edges double-counted above
        part.members[part.part_of[move_v]].reset(move_v);
        part.part_of[move_v] = move_p;
        part.members[move_p].set(move_v);
    }
}

std::optional<std::vector<std::vector<int>>> extract_greedy(const Graph& g, int r,
                                                            int size_goal,
                                                            double mindeg_goal) {
    const int n = g.order();
    Bitset keep(n);
    keep.set_first(n);

    // 1. peel vertices carrying the most (r+1)-cliques until none are left
    while (true) {
        auto load = per_vertex_clique_load(g, keep, r + 1);
        int worst = -1;
        keep.for_each([&](int v) {
            if (load[v] > 0 && (worst < 0 || load[v] > load[worst])) worst = v;
        });
        if (worst < 0) break;
        keep.reset(worst);
    }

    // 2. partition by local search; evict the worst offender when stuck
    Partition part = greedy_partition(g, keep, r);
    while (hill_climb(g, keep, part) > 0) {
        int worst = -1, worst_within = -1;
        keep.for_each([&](int v) {
            int w = within_edges_of(g, v, part);
            if (w > worst_within) {
                worst_within = w;
                worst = v;
            }
        });
        if (worst < 0) break;
        keep.reset(worst);
        part.members[part.part_of[worst]].reset(worst);
        part.part_of[worst] = -1;
    }

    // 3. drop low-degree vertices until the induced minimum degree clears
    while (keep.any() && !(induced_min_degree(g, keep) > mindeg_goal)) {
        int worst = -1, worst_deg = -1;
        keep.for_each([&](int v) {
            int d = g.neighbors(v).and_count(keep);
            if (worst < 0 || d < worst_deg) {
                worst = v;
                worst_deg = d;
            }
        });
        keep.reset(worst);
        part.members[part.part_of[worst]].reset(worst);
        part.part_of[worst] = -1;
    }

    if (keep.count() < std::max(size_goal, 1)) return std::nullopt;

    std::vector<std::vector<int>> parts(r);
    keep.for_each([&](int v) { parts[part.part_of[v]].push_back(v); });
    fill_empty_parts(parts);
    canonicalize(parts);
    return parts;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> extract_rpartite(const Graph& g, int r,
                                                              int size_goal,
                                                              double mindeg_goal) {
    if (r < 1) throw std::invalid_argument("need at least one part");
    if (g.order() <= kExtractExhaustiveLimit)
        return extract_exhaustive(g, r, size_goal, mindeg_goal);
    return extract_greedy(g, r, size_goal, mindeg_goal);
}

}  // namespace turancert
