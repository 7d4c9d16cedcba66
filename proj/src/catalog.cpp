#include "cagex/catalog.hpp"

#include "cagex/errors.hpp"
#include "cagex/moore.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cagex {

Graph complete_graph(int n) {
    if (n < 1) throw hypothesis_error("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw hypothesis_error("bipartite sides must be nonempty");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw hypothesis_error("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph lcf_graph(const std::vector<int>& pattern, int repeats) {
    const int len = static_cast<int>(pattern.size());
    if (len < 1 || repeats < 1) throw hypothesis_error("empty chord pattern");
    const int n = len * repeats;
    std::set<Edge> edges;
    for (int v = 0; v < n; ++v) edges.insert({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
    for (int v = 0; v < n; ++v) {
        const int jump = pattern[static_cast<std::size_t>(v % len)];
        const int w = ((v + jump) % n + n) % n;
        if (w == v || w == (v + 1) % n || v == (w + 1) % n)
            throw hypothesis_error("chord pattern collides with the base cycle");
        edges.insert({std::min(v, w), std::max(v, w)});
    }
    const Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (is_regular(g) != std::optional<int>(3))
        throw hypothesis_error("chord pattern does not close into a cubic graph");
    return g;
}

Graph petersen() {
    // Vertices are the 2-subsets of {0..4}, adjacent when disjoint, laid out
    // so that 0..4 form the outer cycle and 5..9 the inner star.
    std::vector<std::pair<int, int>> labels(10);
    for (int i = 0; i < 5; ++i) {
        labels[static_cast<std::size_t>(i)] = {2 * i % 5, (2 * i + 1) % 5};
        labels[static_cast<std::size_t>(5 + i)] = {(2 * i + 2) % 5, (2 * i + 4) % 5};
    }
    std::vector<Edge> edges;
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) {
            const auto [a, b] = labels[static_cast<std::size_t>(u)];
            const auto [c, d] = labels[static_cast<std::size_t>(v)];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(u, v);
        }
    }
    return Graph(10, edges);
}

Graph heawood() {
    return lcf_graph({5, -5}, 7);
}

Graph mcgee() {
    return lcf_graph({12, 7, -7}, 8);
}

Graph tutte_coxeter() {
    return lcf_graph({-13, -9, 7, -7, 9, 13}, 5);
}

Graph hoffman_singleton() {
    // Five pentagons P_h (j ~ j+-1) and five pentagrams Q_i (j ~ j+-2);
    // vertex j of P_h joins vertex h*i+j (mod 5) of Q_i.
    const auto p = [](int h, int j) { return 5 * h + j; };
    const auto q = [](int i, int j) { return 25 + 5 * i + j; };
    std::set<Edge> edges;
    const auto link = [&edges](int u, int v) { edges.insert({std::min(u, v), std::max(u, v)}); };
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            link(p(h, j), p(h, (j + 1) % 5));
            link(q(h, j), q(h, (j + 2) % 5));
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) link(p(h, j), q(i, (h * i + j) % 5));
    return Graph(50, std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

CatalogEntry make_entry(std::string name, int k, int g, int order, std::function<Graph()> build) {
    const Graph graph = build();
    if (graph.vertex_count() != order)
        throw std::logic_error(name + ": order " + std::to_string(graph.vertex_count()) +
                               ", expected " + std::to_string(order));
    if (is_regular(graph) != std::optional<int>(k))
        throw std::logic_error(name + ": not " + std::to_string(k) + "-regular");
    if (girth(graph) != std::optional<int>(g))
        throw std::logic_error(name + ": girth mismatch, expected " + std::to_string(g));
    CatalogEntry entry;
    entry.name = std::move(name);
    entry.k = k;
    entry.girth_value = g;
    entry.order = order;
    entry.moore_value = moore_cage_bound(k, g);
    entry.excess_value = BigInt(order) - entry.moore_value;
    entry.build = std::move(build);
    return entry;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> list;
        list.push_back(make_entry("K4", 3, 3, 4, [] { return complete_graph(4); }));
        list.push_back(make_entry("K3,3", 3, 4, 6, [] { return complete_bipartite(3, 3); }));
        list.push_back(make_entry("petersen", 3, 5, 10, petersen));
        list.push_back(make_entry("heawood", 3, 6, 14, heawood));
        list.push_back(make_entry("mcgee", 3, 7, 24, mcgee));
        list.push_back(make_entry("tutte-coxeter", 3, 8, 30, tutte_coxeter));
        list.push_back(make_entry("hoffman-singleton", 7, 5, 50, hoffman_singleton));
        return list;
    }();
    return entries;
}

namespace {

std::optional<int> parse_number(const std::string& s) {
    if (s.empty() || s.size() > 6) return std::nullopt;
    int value = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return std::nullopt;
        value = value * 10 + (ch - '0');
    }
    return value;
}

}  // namespace

Graph catalog_graph(const std::string& name) {
    for (const auto& entry : catalog())
        if (entry.name == name) return entry.build();
    if (name.size() >= 2 && name[0] == 'K') {
        const auto comma = name.find(',');
        if (comma == std::string::npos) {
            if (const auto n = parse_number(name.substr(1))) return complete_graph(*n);
        } else {
            const auto a = parse_number(name.substr(1, comma - 1));
            const auto b = parse_number(name.substr(comma + 1));
            if (a && b) return complete_bipartite(*a, *b);
        }
    }
    if (name.size() >= 2 && name[0] == 'C') {
        if (const auto n = parse_number(name.substr(1))) return cycle_graph(*n);
    }
    throw parse_error("unknown catalog name: " + name);
}

std::optional<CatalogEntry> catalog_lookup(int k, int g) {
    if (k >= 3 && g == 3) {
        CatalogEntry entry;
        entry.name = "K" + std::to_string(k + 1);
        entry.k = k;
        entry.girth_value = 3;
        entry.order = k + 1;
        entry.moore_value = moore_cage_bound(k, 3);
        entry.excess_value = 0;
        entry.build = [k] { return complete_graph(k + 1); };
        return entry;
    }
    if (k >= 3 && g == 4) {
        CatalogEntry entry;
        entry.name = "K" + std::to_string(k) + "," + std::to_string(k);
        entry.k = k;
        entry.girth_value = 4;
        entry.order = 2 * k;
        entry.moore_value = moore_cage_bound(k, 4);
        entry.excess_value = 0;
        entry.build = [k] { return complete_bipartite(k, k); };
        return entry;
    }
    for (const auto& entry : catalog())
        if (entry.k == k && entry.girth_value == g) return entry;
    return std::nullopt;
}

Graph double_graph(const Graph& g, Edge root_edge) {
    const int n = g.vertex_count();
    auto [u, v] = root_edge;
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || !g.has_edge(u, v))
        throw hypothesis_error("replacement edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is not an edge");
    const auto reg = is_regular(g);
    if (!reg || *reg < 3)
        throw hypothesis_error("doubling requires a k-regular graph with k >= 3");

    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        if (a == u && b == v) continue;
        edges.emplace_back(a, b);
        edges.emplace_back(a + n, b + n);
    }
    edges.emplace_back(u, v + n);
    edges.emplace_back(std::min(u + n, v), std::max(u + n, v));
    Graph doubled(2 * n, edges);

    if (is_regular(doubled) != reg)
        throw std::logic_error("doubling broke regularity");
    if (girth(doubled) != girth(g))
        throw hypothesis_error("doubling changed the shortest cycle length: every shortest cycle "
                               "of the input passes through the replacement edge");
    return doubled;
}

std::vector<Graph> iterate_doubling(const Graph& g, int iterations, std::vector<Edge>* replaced) {
    if (iterations < 1) throw hypothesis_error("iteration count must be at least 1");
    if (replaced) replaced->clear();
    std::vector<Graph> chain;
    chain.push_back(g);
    std::vector<bool> blocked(static_cast<std::size_t>(g.vertex_count()), false);
    for (int step = 0; step < iterations; ++step) {
        const Graph& current = chain.back();
        const int n = current.vertex_count();
        std::optional<Edge> choice;
        for (const auto& [a, b] : current.edges()) {
            if (!blocked[static_cast<std::size_t>(a)] && !blocked[static_cast<std::size_t>(b)]) {
                choice = Edge{a, b};
                break;
            }
        }
        if (!choice)
            throw hypothesis_error("no edge avoids the previous replacement sites");
        if (replaced) replaced->push_back(*choice);
        chain.push_back(double_graph(current, *choice));
        std::vector<bool> next(static_cast<std::size_t>(2 * n), false);
        for (int w = 0; w < n; ++w)
            if (blocked[static_cast<std::size_t>(w)]) {
                next[static_cast<std::size_t>(w)] = true;
                next[static_cast<std::size_t>(w + n)] = true;
            }
        for (int w : {choice->first, choice->second}) {
            next[static_cast<std::size_t>(w)] = true;
            next[static_cast<std::size_t>(w + n)] = true;
        }
        blocked = std::move(next);
    }
    return chain;
}

}  // namespace cagex
