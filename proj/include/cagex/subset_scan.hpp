#pragma once

#include "cagex/errors.hpp"
#include "cagex/graph.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <utility>

namespace cagex {

// Visits every nonempty vertex subset exactly once in Gray-code order,
// maintaining the cut size incrementally: each step flips the single vertex
// countr_zero(i) and adjusts the cut by scanning its neighbors. Cost is
// O(deg) per subset. Requires n <= 62 so the step counter fits one word.
//
// visit(cut, set) is called after each flip; `set` aliases internal state.
template <typename Visit>
void scan_subsets(const Graph& g, Visit&& visit) {
    const int n = g.vertex_count();
    if (n < 1) throw hypothesis_error("subset scan over an empty graph");
    if (n > 62) throw cap_error("subset scan limited to 62 vertices, got " + std::to_string(n));
    VertexSet s(n);
    long long cut = 0;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        if (s.contains(v)) {
            s.remove(v);
            for (int w : g.neighbors(v)) cut += s.contains(w) ? 1 : -1;
        } else {
            for (int w : g.neighbors(v)) cut += s.contains(w) ? -1 : 1;
            s.add(v);
        }
        visit(cut, static_cast<const VertexSet&>(s));
    }
}

}  // namespace cagex
