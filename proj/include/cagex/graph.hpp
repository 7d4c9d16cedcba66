#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace cagex {

using Edge = std::pair<int, int>;

inline constexpr int kUnreachable = -1;

// Fixed-universe vertex set over ids 0..n-1, stored as a bitset with a
// cached cardinality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vs);
    static VertexSet of(int universe, const std::vector<int>& vs);

    int universe() const { return n_; }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }
    void add(int v);
    void remove(int v);
    void toggle(int v);
    void clear();

    VertexSet complement() const;
    VertexSet intersection(const VertexSet& other) const;
    int intersection_count(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    std::vector<int> to_vector() const;

    bool operator==(const VertexSet&) const = default;

    // Orders sets by value as an n-bit integer, vertex 0 least significant.
    // Used as the deterministic tie-break between equally good witnesses.
    bool value_less(const VertexSet& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; adjacency is kept both as sorted neighbor lists and as
// bitset rows.
class Graph {
public:
    Graph(int n, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    const VertexSet& adjacency_row(int v) const;
    bool has_edge(int u, int v) const;

    // Edge list with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> rows_;
    std::vector<Edge> edges_;
};

// Length of a shortest cycle; std::nullopt if the graph is acyclic.
std::optional<int> girth(const Graph& g);

// Common degree k if the graph is regular (0 for edgeless), else nullopt.
std::optional<int> is_regular(const Graph& g);

// BFS distances from root; kUnreachable marks vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int root);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Edges with exactly one endpoint in s. Requires 0 < |s| < n.
std::vector<Edge> edge_boundary(const Graph& g, const VertexSet& s);
long long edge_boundary_size(const Graph& g, const VertexSet& s);

}  // namespace cagex
