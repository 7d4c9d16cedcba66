#pragma once

#include "cagex/graph.hpp"
#include "cagex/rational.hpp"

#include <utility>
#include <variant>

namespace cagex {

enum class Parity { odd, even };

// Parameters (k, g, c): degree, girth, and the order slack above the Moore
// bound. Validated on construction: k >= 3, g >= 3, c >= 0.
struct BoundParams {
    int k;
    int g;
    BigInt c;

    BoundParams(int k_, int g_, BigInt c_ = 0);
};

// Order of the ball of radius `depth` in a k-regular graph with no short
// cycles: 1 + k * sum_{i<depth} (k-1)^i. Requires k >= 3, depth >= 0.
BigInt moore_ball_order(int k, int depth);

// Same, for the ball of radius depth-1 around both endpoints of an edge:
// 2 * sum_{i<depth} (k-1)^i. Requires k >= 3, depth >= 1.
BigInt moore_edge_ball_order(int k, int depth);

// Minimum order of a k-regular graph of girth g, computed both as the layer
// sum and in closed form; the two must agree. Requires k >= 3, g >= 3.
BigInt moore_cage_bound(int k, int g);
BigInt moore_cage_bound_summation(int k, int g);

// Maximum order of a graph with maximum degree `delta` and diameter `d`.
// Equals moore_cage_bound(delta, 2d+1) for delta >= 3.
BigInt moore_dd_bound(int delta, int d);

// Order minus moore_cage_bound(k, g). Verifies that g really is k-regular
// with the stated girth before subtracting.
BigInt excess(const Graph& g, int k, int girth_value);

// Breadth-first tree certified to be the complete k-regular tree of its
// depth; construction fails loudly if regularity or girth is insufficient.
struct MooreTree {
    std::variant<int, Edge> root;
    int depth;
    VertexSet vertex_set;
    std::vector<int> parent;  // -1 at roots and outside the tree
};

// Ball of radius depth around root. Requires k-regular, girth >= 2*depth+1.
MooreTree moore_tree_vertex(const Graph& g, int root, int depth);

// Vertices within distance depth-1 of either endpoint of root_edge.
// Requires k-regular, girth >= 2*depth, depth >= 1.
MooreTree moore_tree_edge(const Graph& g, Edge root_edge, int depth);

// Fraction of the order covered by a ball two layers below the girth:
// moore_cage_bound(k, g-2) / n, for odd g >= 5 and n >= moore_cage_bound(k, g).
Rational beta_odd(const BoundParams& params, const BigInt& n);

// Edge-rooted analogue: (moore_cage_bound(k, g-1) - 1) / (k*n/2), for even
// g >= 4 and n >= moore_cage_bound(k, g).
Rational beta_even(const BoundParams& params, const BigInt& n);

}  // namespace cagex
