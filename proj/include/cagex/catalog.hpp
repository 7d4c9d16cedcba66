#pragma once

#include "cagex/graph.hpp"
#include "cagex/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cagex {

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);

// 3-regular graph on len*repeats vertices: a Hamiltonian cycle plus the
// chord i -> i + pattern[i mod len]. The pattern must close consistently.
Graph lcf_graph(const std::vector<int>& pattern, int repeats);

Graph petersen();           // k=3, girth 5, order 10
Graph heawood();            // k=3, girth 6, order 14
Graph mcgee();              // k=3, girth 7, order 24
Graph tutte_coxeter();      // k=3, girth 8, order 30
Graph hoffman_singleton();  // k=7, girth 5, order 50

// Named smallest-order witnesses, validated (order, regularity, girth) when
// the catalog is first built.
struct CatalogEntry {
    std::string name;
    int k;
    int girth_value;
    int order;
    BigInt moore_value;
    BigInt excess_value;
    std::function<Graph()> build;
};

const std::vector<CatalogEntry>& catalog();

// Lookup by entry name; also accepts the families "K<n>", "K<a>,<b>", "C<n>".
Graph catalog_graph(const std::string& name);

// Smallest known k-regular graph of girth g, when the catalog has one.
std::optional<CatalogEntry> catalog_lookup(int k, int g);

// Two disjoint copies with the root edge replaced by the two cross edges
// {u1,v2}, {u2,v1}. Copy i uses ids v + (i-1)*n. Requires k-regular with
// k >= 3 and root_edge present; the result is verified to be k-regular with
// the host's girth.
Graph double_graph(const Graph& g, Edge root_edge);

// Repeats double_graph `iterations` times, always on the lexicographically
// smallest edge not touching a previous replacement site. Returns the whole
// chain, starting with g itself; the replaced edges land in `replaced` when
// a sink is given.
std::vector<Graph> iterate_doubling(const Graph& g, int iterations,
                                    std::vector<Edge>* replaced = nullptr);

}  // namespace cagex
