#pragma once

#include "cagex/graph.hpp"

#include <vector>

namespace cagex {

// A graph fragment keeping host vertex ids: internal edges plus, per vertex,
// the number of dangling half-edges left by cutting the host's boundary.
struct Multipole {
    std::vector<int> vertices;         // sorted host ids
    std::vector<Edge> internal_edges;  // u < v, lexicographically sorted
    std::vector<int> semi_edges;       // aligned with vertices

    int semi_edge_total() const;
    int semi_edges_of(int host_vertex) const;
    int internal_degree(int host_vertex) const;
};

// Fragment induced by s: internal edges are host edges inside s, and each
// vertex keeps one semi-edge per host edge leaving s. Host degrees are
// preserved as internal degree + semi-edge count. Requires s nonempty.
Multipole induced_multipole(const Graph& g, const VertexSet& s);

}  // namespace cagex
