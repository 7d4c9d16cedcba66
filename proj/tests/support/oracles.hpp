#pragma once

// Test-side reference implementations. Everything here recomputes results by a
// different route than the library so the two can disagree loudly.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cagex/graph.hpp"

namespace oracle {

inline void extend_cycle_search(const cagex::Graph& g, int start, int v,
                                int length, std::vector<char>& on_path,
                                int& best) {
    // Each cycle is enumerated from its smallest vertex, so only vertices
    // above `start` may appear in the interior of the path.
    if (best != 0 && length + 1 >= best) return;
    for (int w : g.neighbors(v)) {
        if (w == start && length >= 2) {
            if (best == 0 || length + 1 < best) best = length + 1;
        } else if (w > start && !on_path[w]) {
            on_path[w] = 1;
            extend_cycle_search(g, start, w, length + 1, on_path, best);
            on_path[w] = 0;
        }
    }
}

// Shortest cycle length by exhaustive path enumeration, or nullopt on a
// forest. Exponential in the worst case; intended for n up to ~14.
inline std::optional<int> girth_by_cycle_enumeration(const cagex::Graph& g) {
    int best = 0;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        extend_cycle_search(g, s, s, 0, on_path, best);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    if (best == 0) return std::nullopt;
    return best;
}

inline cagex::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<cagex::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return cagex::Graph(n, edges);
}

inline cagex::VertexSet random_subset(int universe, int size,
                                      std::mt19937& rng) {
    std::vector<int> pool(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    return cagex::VertexSet::of(universe, pool);
}

// Distance oracle by naive repeated edge relaxation.
inline std::vector<int> distances_by_relaxation(const cagex::Graph& g,
                                                int root) {
    const int inf = g.vertex_count() + 1;
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), inf);
    d[static_cast<std::size_t>(root)] = 0;
    for (int round = 0; round < g.vertex_count(); ++round) {
        bool changed = false;
        for (const auto& [u, v] : g.edges()) {
            auto du = d[static_cast<std::size_t>(u)];
            auto dv = d[static_cast<std::size_t>(v)];
            if (du + 1 < dv) { d[static_cast<std::size_t>(v)] = du + 1; changed = true; }
            if (dv + 1 < du) { d[static_cast<std::size_t>(u)] = dv + 1; changed = true; }
        }
        if (!changed) break;
    }
    for (auto& x : d)
        if (x == inf) x = cagex::kUnreachable;
    return d;
}

}  // namespace oracle
