#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "turancert/bitset.hpp"

namespace turancert {

inline constexpr int kMaxOrder = 4096;

// Unordered vertex pair, normalized to u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b);  // throws std::invalid_argument on loops / negatives
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on {0, ..., n-1}.  Adjacency rows are bit sets,
// which keeps neighborhood intersection -- the hot loop of every clique
// kernel here -- at a few machine words per probe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // InvalidEditError if already present
    void remove_edge(int u, int v);  // InvalidEditError if absent

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    int max_degree() const;

    std::vector<Edge> edges() const;  // ascending by (u, v)

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<Bitset> adj_;
};

// Balanced complete multipartite graph: r parts whose sizes differ by at most
// one, larger parts first, vertices labeled contiguously part by part.
Graph turan_graph(int n, int r);
std::vector<int> turan_part_sizes(int n, int r);

// Complete multipartite graph with the given part sizes, contiguous labels.
Graph complete_multipartite(const std::vector<int>& sizes);

// Uniform random graph with exactly m edges.  Identical (n, m, seed) yields
// an identical graph on every platform.
Graph random_graph_fixed_edges(int n, std::uint64_t m, std::uint64_t seed);

struct EditSet {
    std::vector<Edge> additions;
    std::vector<Edge> removals;
    std::vector<int> part_assignment;  // vertex -> part, may be empty
    std::size_t edit_count() const { return additions.size() + removals.size(); }
};

// Applies additions and removals to a copy.  Every addition must be a
// non-edge and every removal an edge, otherwise InvalidEditError.
Graph apply_edits(const Graph& g, const EditSet& edits);

// Minimum number of edge edits turning g into the balanced complete
// r-partite graph, over all ways to label vertices with parts of the
// canonical sizes.  Exhaustive; n <= 12 or TooLargeError.
std::pair<std::size_t, EditSet> min_edit_to_turan_bruteforce(const Graph& g, int r);

// true iff part_of maps into [0, r), no edge joins equal parts, and every
// cross pair is an edge
bool is_complete_multipartite_under(const Graph& g, const std::vector<int>& part_of, int r);

// the above plus: the part sizes are exactly the canonical balanced sizes
bool matches_turan_under(const Graph& g, const std::vector<int>& part_of, int r);

}  // namespace turancert
