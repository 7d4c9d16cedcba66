#pragma once

#include "cagex/graph.hpp"
#include "cagex/moore.hpp"
#include "cagex/rational.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace cagex {

// Number of vertices u whose radius-s_prime ball contains v. In a k-regular
// graph of odd girth 2s+1 with 0 <= s_prime <= s this equals
// moore_ball_order(k, s_prime) for every v. Brute force over all roots.
long long count_covering_vertices(const Graph& g, int v, int s_prime);

// Number of edges whose tree of depth s_prime (both endpoints grown to
// radius s_prime - 1) contains v. In a k-regular graph of even girth 2s
// with 0 <= s_prime <= s this equals moore_ball_order(k, s_prime) - 1 for
// every v. Brute force over all edges.
long long count_covering_edges(const Graph& g, int v, int s_prime);

// Root whose tree overlaps s the most. The overlap is guaranteed to reach
// threshold = beta * |s|; falling short would be a counting contradiction.
struct CoverageWitness {
    std::variant<int, Edge> root;
    VertexSet covered;  // tree vertices inside s
    long long covered_count;
    Rational threshold;
};

// Vertex-rooted trees of radius `depth` in a k-regular graph of odd girth
// 2s+1, depth <= s; beta = moore_ball_order(k, depth) / n. Ties take the
// lowest root id.
CoverageWitness best_covering_vertex(const Graph& g, const VertexSet& s, int depth);

// Edge-rooted analogue for even girth 2s, 1 <= depth <= s;
// beta = (moore_ball_order(k, depth) - 1) / m. Ties take the
// lexicographically first edge.
CoverageWitness best_covering_edge(const Graph& g, const VertexSet& s, int depth);

// Boundary floor |S| * (beta*k - 1) + 1, valid for 0 < |S| <= n/2.
Rational boundary_lower_bound(const BigInt& s_size, const Rational& beta, int k);

struct BoundaryViolation {
    VertexSet subset;
    long long boundary;
    Rational floor;
};

enum class CheckMode { exhaustive, sampled };

struct BoundaryCheckReport {
    Parity parity;
    Rational beta;
    CheckMode mode;
    unsigned long long subsets_checked;
    std::uint64_t seed;  // sampled mode only
    std::vector<BoundaryViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Tests |boundary(S)| >= boundary_lower_bound(|S|, beta, k) over subsets
// with 0 < |S| <= n/2, where beta comes from the girth parity. Exhaustive
// mode enumerates every subset (n <= exhaustive_cap); sampled mode draws
// `samples` random subsets. Violations are recorded, 64 at most.
BoundaryCheckReport verify_boundary_bound(const Graph& g, int exhaustive_cap = 26);
BoundaryCheckReport verify_boundary_bound_sampled(const Graph& g, long long samples,
                                                  std::uint64_t seed);

}  // namespace cagex
