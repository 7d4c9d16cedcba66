#include "cagex/moore.hpp"

#include "cagex/errors.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace cagex {

BoundParams::BoundParams(int k_, int g_, BigInt c_) : k(k_), g(g_), c(std::move(c_)) {
    if (k < 3) throw hypothesis_error("degree must be at least 3, got " + std::to_string(k));
    if (g < 3) throw hypothesis_error("girth must be at least 3, got " + std::to_string(g));
    if (c < 0) throw hypothesis_error("order slack must be nonnegative, got " + c.str());
}

static void check_degree(int k) {
    if (k < 3) throw hypothesis_error("degree must be at least 3, got " + std::to_string(k));
}

BigInt moore_ball_order(int k, int depth) {
    check_degree(k);
    if (depth < 0) throw hypothesis_error("ball radius must be nonnegative");
    BigInt total = 1;
    BigInt layer = k;
    for (int i = 0; i < depth; ++i) {
        total += layer;
        layer *= k - 1;
    }
    return total;
}

BigInt moore_edge_ball_order(int k, int depth) {
    check_degree(k);
    if (depth < 1) throw hypothesis_error("edge ball radius must be at least 1");
    BigInt total = 0;
    BigInt layer = 2;
    for (int i = 0; i < depth; ++i) {
        total += layer;
        layer *= k - 1;
    }
    return total;
}

BigInt moore_cage_bound_summation(int k, int g) {
    check_degree(k);
    if (g < 3) throw hypothesis_error("girth must be at least 3, got " + std::to_string(g));
    if (g % 2 == 1) return moore_ball_order(k, (g - 1) / 2);
    return moore_edge_ball_order(k, g / 2);
}

BigInt moore_cage_bound(int k, int g) {
    const BigInt by_layers = moore_cage_bound_summation(k, g);
    BigInt closed;
    if (g % 2 == 1) {
        closed = (BigInt(k) * int_pow(k - 1, static_cast<unsigned>((g - 1) / 2)) - 2) / (k - 2);
    } else {
        closed = (BigInt(2) * int_pow(k - 1, static_cast<unsigned>(g / 2)) - 2) / (k - 2);
    }
    if (closed != by_layers)
        throw std::logic_error("closed form and layer sum disagree for k=" + std::to_string(k) +
                               " g=" + std::to_string(g));
    return closed;
}

BigInt moore_dd_bound(int delta, int d) {
    check_degree(delta);
    if (d < 1) throw hypothesis_error("diameter must be at least 1, got " + std::to_string(d));
    const BigInt value = moore_ball_order(delta, d);
    if (value != moore_cage_bound(delta, 2 * d + 1))
        throw std::logic_error("degree/diameter and girth forms disagree");
    return value;
}

BigInt excess(const Graph& g, int k, int girth_value) {
    check_degree(k);
    const auto reg = is_regular(g);
    if (!reg || *reg != k)
        throw hypothesis_error("graph is not " + std::to_string(k) + "-regular");
    const auto actual_girth = girth(g);
    if (!actual_girth || *actual_girth != girth_value)
        throw hypothesis_error("graph girth is " +
                               (actual_girth ? std::to_string(*actual_girth) : std::string("infinite")) +
                               ", expected " + std::to_string(girth_value));
    const BigInt bound = moore_cage_bound(k, girth_value);
    const BigInt order = g.vertex_count();
    if (order < bound)
        throw hypothesis_error("order " + order.str() + " is below the minimum " + bound.str());
    return order - bound;
}

namespace {

// Multi-source BFS truncated at max_dist; records parents inside the tree.
MooreTree grow_tree(const Graph& g, std::vector<int> sources, int max_dist) {
    const int n = g.vertex_count();
    MooreTree tree;
    tree.vertex_set = VertexSet(n);
    tree.parent.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    std::queue<int> q;
    for (int s : sources) {
        dist[static_cast<std::size_t>(s)] = 0;
        tree.vertex_set.add(s);
        q.push(s);
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (dist[static_cast<std::size_t>(u)] == max_dist) continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                tree.parent[static_cast<std::size_t>(w)] = u;
                tree.vertex_set.add(w);
                q.push(w);
            }
        }
    }
    return tree;
}

int require_regular(const Graph& g) {
    const auto reg = is_regular(g);
    if (!reg || *reg < 3)
        throw hypothesis_error("tree construction requires a k-regular graph with k >= 3");
    return *reg;
}

void require_girth_at_least(const Graph& g, int needed) {
    const auto girth_value = girth(g);
    if (girth_value && *girth_value < needed)
        throw hypothesis_error("girth " + std::to_string(*girth_value) + " is below the required " +
                               std::to_string(needed));
}

}  // namespace

MooreTree moore_tree_vertex(const Graph& g, int root, int depth) {
    if (root < 0 || root >= g.vertex_count())
        throw hypothesis_error("tree root out of range: " + std::to_string(root));
    if (depth < 0) throw hypothesis_error("tree depth must be nonnegative");
    const int k = require_regular(g);
    require_girth_at_least(g, 2 * depth + 1);
    MooreTree tree = grow_tree(g, {root}, depth);
    tree.root = root;
    tree.depth = depth;
    if (BigInt(tree.vertex_set.count()) != moore_ball_order(k, depth))
        throw std::logic_error("ball order does not match the regular tree of depth " +
                               std::to_string(depth));
    return tree;
}

MooreTree moore_tree_edge(const Graph& g, Edge root_edge, int depth) {
    auto [u, v] = root_edge;
    if (u > v) std::swap(u, v);
    if (!g.has_edge(u, v))
        throw hypothesis_error("tree root edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is not an edge");
    if (depth < 1) throw hypothesis_error("edge tree depth must be at least 1");
    const int k = require_regular(g);
    require_girth_at_least(g, 2 * depth);
    MooreTree tree = grow_tree(g, {u, v}, depth - 1);
    tree.root = Edge{u, v};
    tree.depth = depth;
    if (BigInt(tree.vertex_set.count()) != moore_edge_ball_order(k, depth))
        throw std::logic_error("edge ball order does not match the regular tree of depth " +
                               std::to_string(depth));
    return tree;
}

Rational beta_odd(const BoundParams& params, const BigInt& n) {
    if (params.g % 2 == 0 || params.g < 5)
        throw hypothesis_error("vertex-rooted coverage fraction requires odd girth >= 5");
    if (n < moore_cage_bound(params.k, params.g))
        throw hypothesis_error("order " + n.str() + " is below the minimum for girth " +
                               std::to_string(params.g));
    return Rational(moore_cage_bound(params.k, params.g - 2), n);
}

Rational beta_even(const BoundParams& params, const BigInt& n) {
    if (params.g % 2 == 1 || params.g < 4)
        throw hypothesis_error("edge-rooted coverage fraction requires even girth >= 4");
    if (n < moore_cage_bound(params.k, params.g))
        throw hypothesis_error("order " + n.str() + " is below the minimum for girth " +
                               std::to_string(params.g));
    return Rational(2 * (moore_cage_bound(params.k, params.g - 1) - 1), params.k * n);
}

}  // namespace cagex
