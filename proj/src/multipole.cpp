#include "cagex/multipole.hpp"

#include "cagex/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cagex {

int Multipole::semi_edge_total() const {
    return std::accumulate(semi_edges.begin(), semi_edges.end(), 0);
}

static std::size_t index_of(const std::vector<int>& sorted, int v, const char* what) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v)
        throw hypothesis_error(std::string(what) + ": vertex " + std::to_string(v) +
                               " is not part of the fragment");
    return static_cast<std::size_t>(it - sorted.begin());
}

int Multipole::semi_edges_of(int host_vertex) const {
    return semi_edges[index_of(vertices, host_vertex, "semi_edges_of")];
}

int Multipole::internal_degree(int host_vertex) const {
    index_of(vertices, host_vertex, "internal_degree");
    int d = 0;
    for (const auto& [u, v] : internal_edges)
        if (u == host_vertex || v == host_vertex) ++d;
    return d;
}

Multipole induced_multipole(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw hypothesis_error("vertex set universe does not match graph order");
    if (s.empty())
        throw hypothesis_error("induced fragment requires a nonempty set");

    Multipole mp;
    mp.vertices = s.to_vector();
    mp.semi_edges.assign(mp.vertices.size(), 0);
    for (std::size_t i = 0; i < mp.vertices.size(); ++i) {
        const int v = mp.vertices[i];
        for (int w : g.neighbors(v)) {
            if (!s.contains(w)) {
                ++mp.semi_edges[i];
            } else if (v < w) {
                mp.internal_edges.emplace_back(v, w);
            }
        }
    }
    std::sort(mp.internal_edges.begin(), mp.internal_edges.end());
    return mp;
}

}  // namespace cagex
