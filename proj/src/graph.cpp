#include "cagex/graph.hpp"

#include "cagex/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <queue>
#include <string>

namespace cagex {

VertexSet::VertexSet(int universe) : n_(universe), count_(0) {
    if (universe < 0) throw hypothesis_error("vertex set universe must be nonnegative");
    words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::of(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
}

void VertexSet::add(int v) {
    assert(v >= 0 && v < n_);
    std::uint64_t& w = words_[static_cast<std::size_t>(v >> 6)];
    const std::uint64_t mask = 1ull << (v & 63);
    if (!(w & mask)) {
        w |= mask;
        ++count_;
    }
}

void VertexSet::remove(int v) {
    assert(v >= 0 && v < n_);
    std::uint64_t& w = words_[static_cast<std::size_t>(v >> 6)];
    const std::uint64_t mask = 1ull << (v & 63);
    if (w & mask) {
        w &= ~mask;
        --count_;
    }
}

void VertexSet::toggle(int v) {
    if (contains(v)) remove(v); else add(v);
}

void VertexSet::clear() {
    std::fill(words_.begin(), words_.end(), 0);
    count_ = 0;
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    if (n_ & 63) s.words_.back() &= (1ull << (n_ & 63)) - 1;
    s.count_ = n_ - count_;
    return s;
}

VertexSet VertexSet::intersection(const VertexSet& other) const {
    assert(n_ == other.n_);
    VertexSet s(n_);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        s.words_[i] = words_[i] & other.words_[i];
        total += std::popcount(s.words_[i]);
    }
    s.count_ = total;
    return s;
}

int VertexSet::intersection_count(const VertexSet& other) const {
    assert(n_ == other.n_);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += std::popcount(words_[i] & other.words_[i]);
    return total;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            const int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i) * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::value_less(const VertexSet& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    }
    return false;
}

Graph::Graph(int n, const std::vector<Edge>& edge_list) : n_(n) {
    if (n < 0) throw parse_error("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n), {});
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw parse_error("self-loop at vertex " + std::to_string(u));
        if (rows_[static_cast<std::size_t>(u)].contains(v))
            throw parse_error("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        rows_[static_cast<std::size_t>(u)].add(v);
        rows_[static_cast<std::size_t>(v)].add(u);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges_.begin(), edges_.end());
    m_ = static_cast<int>(edges_.size());
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw hypothesis_error("vertex out of range: " + std::to_string(v));
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw hypothesis_error("vertex out of range: " + std::to_string(v));
    return adj_[static_cast<std::size_t>(v)];
}

const VertexSet& Graph::adjacency_row(int v) const {
    if (v < 0 || v >= n_) throw hypothesis_error("vertex out of range: " + std::to_string(v));
    return rows_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw hypothesis_error("vertex out of range");
    return rows_[static_cast<std::size_t>(u)].contains(v);
}

std::vector<int> bfs_distances(const Graph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw hypothesis_error("BFS root out of range: " + std::to_string(root));
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// One BFS per root; the shortest cycle through the root is detected at the
// first non-tree edge, so the minimum over roots is exact. O(n*m).
std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        order.clear();
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        order.push_back(root);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int u = order[head];
            if (best != -1 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    order.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)] &&
                           dist[static_cast<std::size_t>(w)] >= dist[static_cast<std::size_t>(u)]) {
                    const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<int> is_regular(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        q.push(start);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(u)] ^ 1;
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

static void check_boundary_args(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw hypothesis_error("vertex set universe does not match graph order");
    if (s.empty())
        throw hypothesis_error("edge boundary requires a nonempty set");
    if (s.count() == g.vertex_count())
        throw hypothesis_error("edge boundary requires a proper subset");
}

std::vector<Edge> edge_boundary(const Graph& g, const VertexSet& s) {
    check_boundary_args(g, s);
    std::vector<Edge> out;
    for (const auto& [u, v] : g.edges())
        if (s.contains(u) != s.contains(v)) out.emplace_back(u, v);
    return out;
}

long long edge_boundary_size(const Graph& g, const VertexSet& s) {
    check_boundary_args(g, s);
    long long total = 0;
    for (int v : s.to_vector())
        total += g.degree(v) - g.adjacency_row(v).intersection_count(s);
    return total;
}

}  // namespace cagex
