#include "turancert/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "turancert/errors.hpp"
#include "turancert/rng.hpp"

namespace turancert {

Edge::Edge(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("edge endpoint is negative");
    if (a == b) throw std::invalid_argument("self-loop");
    u = std::min(a, b);
    v = std::max(a, b);
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order is negative");
    if (n > kMaxOrder)
        throw TooLargeError("graph order " + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxOrder));
    adj_.assign(n, Bitset(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    Edge e(u, v);  // validates
    check_vertex(e.u);
    check_vertex(e.v);
    if (adj_[e.u].test(e.v))
        throw InvalidEditError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                               ") already present");
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    Edge e(u, v);
    check_vertex(e.u);
    check_vertex(e.v);
    if (!adj_[e.u].test(e.v))
        throw InvalidEditError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                               ") not present");
    adj_[e.u].reset(e.v);
    adj_[e.v].reset(e.u);
    --m_;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        adj_[u].for_each([&](int v) {
            if (v > u) out.push_back(Edge(u, v));
        });
    }
    return out;
}

std::vector<int> turan_part_sizes(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("part count must satisfy 1 <= r <= n");
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];  // larger parts first
    return sizes;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("no part sizes given");
    long long n = 0;
    for (int s : sizes) {
        if (s <= 0) throw std::invalid_argument("part sizes must be positive");
        n += s;
    }
    if (n > kMaxOrder)
        throw TooLargeError("multipartite order " + std::to_string(n) + " exceeds limit");
    Graph g(static_cast<int>(n));
    int offset_i = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        int offset_j = offset_i + sizes[i];
        for (std::size_t j = i + 1; j < sizes.size(); ++j) {
            for (int a = 0; a < sizes[i]; ++a)
                for (int b = 0; b < sizes[j]; ++b) g.add_edge(offset_i + a, offset_j + b);
            offset_j += sizes[j];
        }
        offset_i += sizes[i];
    }
    return g;
}

Graph turan_graph(int n, int r) { return complete_multipartite(turan_part_sizes(n, r)); }

namespace {

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// k-th pair in the ascending (u, v) enumeration of all u < v
Edge pair_from_index(int n, std::uint64_t k) {
    // pairs with first coordinate < u: offset(u) = u*(n-1) - u*(u-1)/2
    auto offset = [&](std::uint64_t u) { return u * (n - 1) - u * (u - 1) / 2; };
    std::uint64_t lo = 0, hi = static_cast<std::uint64_t>(n) - 1;
    while (lo + 1 < hi) {
        std::uint64_t mid = (lo + hi) / 2;
        if (offset(mid) <= k)
            lo = mid;
        else
            hi = mid;
    }
    int u = static_cast<int>(lo);
    int v = static_cast<int>(lo + 1 + (k - offset(lo)));
    return Edge(u, v);
}

}  // namespace

Graph random_graph_fixed_edges(int n, std::uint64_t m, std::uint64_t seed) {
    Graph g(n);
    if (m > pair_count(n))
        throw std::invalid_argument("edge count " + std::to_string(m) + " exceeds pair count " +
                                    std::to_string(pair_count(n)));
    Rng rng(seed);
    for (std::uint64_t id : sample_distinct(rng, pair_count(n), m)) {
        Edge e = pair_from_index(n, id);
        g.add_edge(e.u, e.v);
    }
    return g;
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
    Graph out = g;
    for (const Edge& e : edits.additions) out.add_edge(e.u, e.v);
    for (const Edge& e : edits.removals) out.remove_edge(e.u, e.v);
    return out;
}

namespace {

// Exhaustive labeled-partition search with incremental cost and
// branch-and-bound pruning.  Assignments are explored in lexicographic
// order, so ties resolve toward the smallest assignment vector.
struct EditSearch {
    const Graph& g;
    std::vector<int> remaining;        // open slots per part
    std::vector<Bitset> part_members;  // assigned so far
    Bitset assigned;
    std::vector<int> assign;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::vector<int> best_assign;

    explicit EditSearch(const Graph& graph, const std::vector<int>& sizes)
        : g(graph),
          remaining(sizes),
          part_members(sizes.size(), Bitset(graph.order())),
          assigned(graph.order()),
          assign(graph.order(), -1) {}

    void dfs(int v, std::size_t cost) {
        if (cost >= best_cost) return;
        if (v == g.order()) {
            best_cost = cost;
            best_assign = assign;
            return;
        }
        int assigned_before = v;
        int edges_to_assigned = g.neighbors(v).and_count(assigned);
        for (std::size_t p = 0; p < remaining.size(); ++p) {
            if (remaining[p] == 0) continue;
            int within = g.neighbors(v).and_count(part_members[p]);
            int others = assigned_before - part_members[p].count();
            int cross_edges = edges_to_assigned - within;
            std::size_t step = static_cast<std::size_t>(within)      // edges to delete
                               + static_cast<std::size_t>(others - cross_edges);  // to add
            --remaining[p];
            part_members[p].set(v);
            assigned.set(v);
            assign[v] = static_cast<int>(p);
            dfs(v + 1, cost + step);
            assign[v] = -1;
            assigned.reset(v);
            part_members[p].reset(v);
            ++remaining[p];
        }
    }
};

}  // namespace

std::pair<std::size_t, EditSet> min_edit_to_turan_bruteforce(const Graph& g, int r) {
    const int n = g.order();
    if (n > 12) throw TooLargeError("brute-force edit search limited to 12 vertices");
    auto sizes = turan_part_sizes(n, r);  // validates r

    EditSearch search(g, sizes);
    search.dfs(0, 0);

    EditSet edits;
    edits.part_assignment = search.best_assign;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool same = search.best_assign[u] == search.best_assign[v];
            bool edge = g.has_edge(u, v);
            if (same && edge) edits.removals.push_back(Edge(u, v));
            if (!same && !edge) edits.additions.push_back(Edge(u, v));
        }
    }
    return {search.best_cost, edits};
}

bool is_complete_multipartite_under(const Graph& g, const std::vector<int>& part_of, int r) {
    const int n = g.order();
    if (static_cast<int>(part_of.size()) != n || r < 1) return false;
    for (int v = 0; v < n; ++v)
        if (part_of[v] < 0 || part_of[v] >= r) return false;
    std::vector<Bitset> part_bits(r, Bitset(n));
    for (int v = 0; v < n; ++v) part_bits[part_of[v]].set(v);
    // complete multipartite <=> every vertex is adjacent to exactly the
    // complement of its own part
    for (int v = 0; v < n; ++v) {
        Bitset expected(n);
        for (int p = 0; p < r; ++p)
            if (p != part_of[v]) expected |= part_bits[p];
        if (!(g.neighbors(v) == expected)) return false;
    }
    return true;
}

bool matches_turan_under(const Graph& g, const std::vector<int>& part_of, int r) {
    if (r > g.order()) return false;
    if (!is_complete_multipartite_under(g, part_of, r)) return false;
    std::vector<int> sizes(r, 0);
    for (int p : part_of) ++sizes[p];
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes == turan_part_sizes(g.order(), r);
}

}  // namespace turancert
