#include "turancert/multipartite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turancert/errors.hpp"
#include "turancert/rng.hpp"

namespace turancert {

namespace {

constexpr int kGreedyRestarts = 32;
constexpr std::uint64_t kGreedySeed = 0x6d70617274ULL;  // arbitrary fixed constant

std::vector<int> flatten(const std::vector<std::vector<int>>& parts) {
    std::vector<int> flat;
    for (const auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
    return flat;
}

// ---------------------------------------------------------------- exact ---

// Depth-first search over part tuples.  Vertices inside a part are chosen in
// ascending order and parts are filled in the order given, so the first
// witness found is the lexicographic minimum.  `avail` always holds the
// vertices adjacent to every member of all *completed* parts.
struct ExactSearch {
    const Graph& g;
    const std::vector<int>& sizes;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    std::vector<std::vector<int>> parts;
    Bitset used;

    ExactSearch(const Graph& graph, const std::vector<int>& sz, std::uint64_t budget_)
        : g(graph), sizes(sz), budget(budget_), used(graph.order()) {
        parts.resize(sizes.size());
    }

    int remaining_after(std::size_t part_idx) const {
        int sum = 0;
        for (std::size_t i = part_idx; i < sizes.size(); ++i) sum += sizes[i];
        return sum;
    }

    // fill part `p` starting after vertex `last`; `avail` excludes used vertices
    bool dfs(std::size_t p, int last, const Bitset& avail) {
        if (++nodes > budget) throw BudgetExceededError("exact multipartite search budget");
        if (static_cast<int>(parts[p].size()) == sizes[p]) {
            // part complete: restrict to its common neighborhood and descend
            if (p + 1 == sizes.size()) return true;
            Bitset next = avail;
            for (int v : parts[p]) next &= g.neighbors(v);
            next.subtract(used);
            if (next.count() < remaining_after(p + 1)) return false;
            return dfs(p + 1, -1, next);
        }
        int need = sizes[p] - static_cast<int>(parts[p].size());
        for (int v = avail.next(last + 1); v >= 0; v = avail.next(v + 1)) {
            if (used.test(v)) continue;
            // not enough candidates left above v
            Bitset rest = avail;
            rest.drop_through(v);
            rest.subtract(used);
            if (rest.count() + 1 < need) break;
            parts[p].push_back(v);
            used.set(v);
            if (dfs(p, v, avail)) return true;
            used.reset(v);
            parts[p].pop_back();
        }
        return false;
    }
};

std::optional<MultipartiteWitness> exact_multipartite(const Graph& g,
                                                      const std::vector<int>& sizes) {
    Bitset all(g.order());
    all.set_first(g.order());
    ExactSearch search(g, sizes, kExactNodeBudget);
    if (search.dfs(0, -1, all)) return MultipartiteWitness{search.parts};
    return std::nullopt;
}

// --------------------------------------------------------------- greedy ---

// One greedy construction pass.  Parts are grown one vertex at a time; each
// pick maximizes the surviving candidate pool for everything still to come.
// Restart 0 is fully deterministic; later restarts randomize the first pick
// of every part.
std::optional<std::vector<std::vector<int>>> greedy_pass(const Graph& g,
                                                         const std::vector<int>& sizes,
                                                         Rng* rng) {
    const int n = g.order();
    Bitset pool(n);  // adjacent to all completed parts
    pool.set_first(n);
    Bitset used(n);
    std::vector<std::vector<int>> parts;

    int still_needed = std::accumulate(sizes.begin(), sizes.end(), 0);
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        Bitset base = pool;  // candidates for this part
        base.subtract(used);
        Bitset future = pool;  // will shrink to the next pool
        std::vector<int> part;
        for (int j = 0; j < sizes[p]; ++j) {
            int best = -1;
            if (j == 0 && rng != nullptr) {
                int c = base.count();
                if (c == 0) return std::nullopt;
                std::uint64_t skip = rng->below(static_cast<std::uint64_t>(c));
                for (int v = base.first(); v >= 0; v = base.next(v + 1))
                    if (skip-- == 0) {
                        best = v;
                        break;
                    }
            } else {
                int best_score = -1;
                for (int v = base.first(); v >= 0; v = base.next(v + 1)) {
                    Bitset blocked = future & g.neighbors(v);
                    blocked.subtract(used);
                    int score = blocked.count();
                    if (score > best_score) {
                        best_score = score;
                        best = v;
                    }
                }
            }
            if (best < 0) return std::nullopt;
            part.push_back(best);
            used.set(best);
            base.reset(best);
            future &= g.neighbors(best);
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
        still_needed -= sizes[p];
        pool = future;
        pool.subtract(used);
        if (pool.count() < still_needed) return std::nullopt;
    }
    return parts;
}

std::optional<MultipartiteWitness> greedy_multipartite(const Graph& g,
                                                       const std::vector<int>& sizes) {
    std::optional<std::vector<std::vector<int>>> best;
    for (int restart = 0; restart < kGreedyRestarts; ++restart) {
        std::optional<std::vector<std::vector<int>>> got;
        if (restart == 0) {
            got = greedy_pass(g, sizes, nullptr);
        } else {
            Rng rng(kGreedySeed + static_cast<std::uint64_t>(restart));
            got = greedy_pass(g, sizes, &rng);
        }
        if (!got) continue;
        if (!best || flatten(*got) < flatten(*best)) best = got;
    }
    if (best) return MultipartiteWitness{*best};
    return std::nullopt;
}

void validate_sizes(const Graph& g, const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("no part sizes given");
    long long total = 0;
    for (int s : sizes) {
        if (s <= 0) throw std::invalid_argument("part sizes must be positive");
        total += s;
    }
    if (total > g.order())
        throw std::invalid_argument("part sizes exceed the number of vertices");
}

}  // namespace

std::optional<MultipartiteWitness> find_complete_multipartite(const Graph& g,
                                                              const std::vector<int>& sizes) {
    validate_sizes(g, sizes);
    long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (total <= kExactSumLimit && g.order() <= kExactOrderLimit)
        return exact_multipartite(g, sizes);
    return greedy_multipartite(g, sizes);
}

namespace {

// ------------------------------------------------------------- K_r(s..t) ---

// Exact core enumeration maximizing the final part.  Same skeleton as
// ExactSearch but runs to exhaustion, with a "cannot beat the incumbent"
// prune on the pool size.
struct CoreSearch {
    const Graph& g;
    int parts_count;  // r - 1
    int s;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool exhausted = false;  // set when the budget ran out

    std::vector<std::vector<int>> core;
    Bitset used;
    std::vector<std::vector<int>> best_core;
    Bitset best_pool;
    int best_t = 0;

    CoreSearch(const Graph& graph, int parts, int size, std::uint64_t budget_)
        : g(graph), parts_count(parts), s(size), budget(budget_), used(graph.order()),
          best_pool(graph.order()) {
        core.resize(parts_count);
    }

    void dfs(int p, int last, const Bitset& avail) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (p == parts_count) {
            int t = avail.count();
            if (t > best_t) {
                best_t = t;
                best_core = core;
                best_pool = avail;
            }
            return;
        }
        if (static_cast<int>(core[p].size()) == s) {
            Bitset next = avail;
            for (int v : core[p]) next &= g.neighbors(v);
            next.subtract(used);
            int slots = (parts_count - p - 1) * s;
            if (next.count() - slots <= best_t) return;  // cannot improve
            dfs(p + 1, -1, next);
            return;
        }
        int need = s - static_cast<int>(core[p].size());
        for (int v = avail.next(last + 1); v >= 0 && !exhausted; v = avail.next(v + 1)) {
            if (used.test(v)) continue;
            Bitset rest = avail;
            rest.drop_through(v);
            rest.subtract(used);
            if (rest.count() + 1 < need) break;
            core[p].push_back(v);
            used.set(v);
            dfs(p, v, avail);
            used.reset(v);
            core[p].pop_back();
        }
    }
};

std::optional<KrstWitness> greedy_kr_s_t(const Graph& g, int r, int s) {
    // r - 1 parts of size s; the trailing pool becomes the t-part
    std::vector<int> sizes(r - 1, s);
    std::optional<KrstWitness> best;
    for (int restart = 0; restart < kGreedyRestarts; ++restart) {
        std::optional<std::vector<std::vector<int>>> got;
        if (restart == 0) {
            got = greedy_pass(g, sizes, nullptr);
        } else {
            Rng rng(kGreedySeed + 77777 + static_cast<std::uint64_t>(restart));
            got = greedy_pass(g, sizes, &rng);
        }
        if (!got) continue;
        Bitset pool(g.order());
        pool.set_first(g.order());
        Bitset used(g.order());
        for (const auto& part : *got) {
            for (int v : part) {
                pool &= g.neighbors(v);
                used.set(v);
            }
        }
        pool.subtract(used);
        int t = pool.count();
        if (t < 1) continue;
        KrstWitness cand;
        cand.witness.parts = *got;
        cand.witness.parts.push_back(pool.to_vector());
        cand.t = static_cast<std::uint64_t>(t);
        cand.regime = SearchRegime::greedy;
        if (!best || cand.t > best->t ||
            (cand.t == best->t && flatten(cand.witness.parts) < flatten(best->witness.parts)))
            best = cand;
    }
    return best;
}

}  // namespace

std::optional<KrstWitness> find_kr_s_t(const Graph& g, int r, int s) {
    if (r < 2) throw std::invalid_argument("need at least two parts");
    if (s < 1) throw std::invalid_argument("core part size must be at least 1");
    const long long core_size = static_cast<long long>(r - 1) * s;
    if (core_size >= g.order()) return std::nullopt;  // no room for a t-part

    if (core_size <= kExactSumLimit && g.order() <= kExactOrderLimit) {
        Bitset all(g.order());
        all.set_first(g.order());
        CoreSearch search(g, r - 1, s, kExactNodeBudget);
        search.dfs(0, -1, all);
        if (!search.exhausted) {
            if (search.best_t < 1) return std::nullopt;  // proof of absence
            KrstWitness out;
            out.witness.parts = search.best_core;
            out.witness.parts.push_back(search.best_pool.to_vector());
            out.t = static_cast<std::uint64_t>(search.best_t);
            out.regime = SearchRegime::exact;
            return out;
        }
        // fall through: budget ran out, the exact claim is gone
        auto greedy = greedy_kr_s_t(g, r, s);
        if (!greedy && search.best_t >= 1) {
            KrstWitness out;
            out.witness.parts = search.best_core;
            out.witness.parts.push_back(search.best_pool.to_vector());
            out.t = static_cast<std::uint64_t>(search.best_t);
            out.regime = SearchRegime::greedy;  // not proven maximal
            return out;
        }
        return greedy;
    }
    return greedy_kr_s_t(g, r, s);
}

bool verify_multipartite_witness(const Graph& g, const MultipartiteWitness& w,
                                 const std::vector<int>& sizes) {
    if (w.parts.size() != sizes.size()) return false;
    const int n = g.order();
    Bitset seen(n);
    std::vector<Bitset> part_bits;
    part_bits.reserve(w.parts.size());
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        if (static_cast<int>(w.parts[i].size()) != sizes[i]) return false;
        Bitset bits(n);
        for (int v : w.parts[i]) {
            if (v < 0 || v >= n) return false;
            if (seen.test(v)) return false;  // duplicate or overlap
            seen.set(v);
            bits.set(v);
        }
        part_bits.push_back(std::move(bits));
    }
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        for (std::size_t j = i + 1; j < w.parts.size(); ++j)
            for (int v : w.parts[i])
                if (!part_bits[j].is_subset_of(g.neighbors(v))) return false;
    return true;
}

}  // namespace turancert
