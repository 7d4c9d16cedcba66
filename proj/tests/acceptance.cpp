// Gate checks for the whole pipeline: frozen values, exact identities, and
// runtime budgets. Each criterion prints one PASS or FAIL line; the process
// exits nonzero if any line fails.

#include "cagex/bounds.hpp"
#include "cagex/catalog.hpp"
#include "cagex/cheeger.hpp"
#include "cagex/coverage.hpp"
#include "cagex/graph.hpp"
#include "cagex/graph_io.hpp"
#include "cagex/moore.hpp"
#include "cagex/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace {

using cagex::BigInt;
using cagex::Graph;
using cagex::Rational;
using cagex::VertexSet;

int failures = 0;

void criterion(int number, const std::string& description, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < budget_seconds;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %s (%.2fs%s)\n", number, pass ? "PASS" : "FAIL",
                description.c_str(), elapsed, in_budget ? "" : ", over budget");
    if (!pass && !detail.empty()) std::printf("              %s\n", detail.c_str());
}

// Ratio |boundary(S)| / |S| recomputed from the raw edge list.
Rational ratio_from_scratch(const Graph& g, const VertexSet& s) {
    long long cut = 0;
    for (const auto& [u, v] : g.edges())
        if (s.contains(u) != s.contains(v)) ++cut;
    return Rational(BigInt(cut), BigInt(s.count()));
}

bool check_vertex_counts(const Graph& g, int radius_max, std::string& detail) {
    for (int r = 0; r <= radius_max; ++r) {
        const BigInt expected = cagex::moore_ball_order(3, r);
        if (r >= 1 && expected != cagex::moore_cage_bound(3, 2 * r + 1)) {
            detail = "ball order disagrees with the minimum order at radius " + std::to_string(r);
            return false;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (BigInt(cagex::count_covering_vertices(g, v, r)) != expected) {
                detail = "vertex " + std::to_string(v) + " at radius " + std::to_string(r);
                return false;
            }
        }
    }
    return true;
}

bool check_edge_counts(const Graph& g, int radius_max, std::string& detail) {
    for (int r = 0; r <= radius_max; ++r) {
        const BigInt expected = cagex::moore_ball_order(3, r) - 1;
        if (r >= 1 && expected != cagex::moore_cage_bound(3, 2 * r + 1) - 1) {
            detail = "ball order disagrees with the minimum order at radius " + std::to_string(r);
            return false;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (BigInt(cagex::count_covering_edges(g, v, r)) != expected) {
                detail = "vertex " + std::to_string(v) + " at radius " + std::to_string(r);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance: ten gate checks\n");

    criterion(1, "frozen minimum orders, closed form equal to the layer sum", 1.0,
              [](std::string& detail) {
                  const std::vector<std::tuple<int, int, long long>> frozen = {
                      {3, 5, 10}, {3, 6, 14}, {3, 7, 22}, {3, 8, 30}, {7, 5, 50}};
                  for (const auto& [k, g, value] : frozen)
                      if (cagex::moore_cage_bound(k, g) != value) {
                          detail = "frozen value at k=" + std::to_string(k) +
                                   " g=" + std::to_string(g);
                          return false;
                      }
                  for (int k = 3; k <= 12; ++k) {
                      if (cagex::moore_cage_bound(k, 3) != k + 1 ||
                          cagex::moore_cage_bound(k, 4) != 2 * k) {
                          detail = "triangle or quadrilateral row at k=" + std::to_string(k);
                          return false;
                      }
                      for (int g = 3; g <= 20; ++g)
                          if (cagex::moore_cage_bound(k, g) !=
                              cagex::moore_cage_bound_summation(k, g)) {
                              detail = "forms disagree at k=" + std::to_string(k) +
                                       " g=" + std::to_string(g);
                              return false;
                          }
                  }
                  return true;
              });

    criterion(2, "vertex covering counts exact on petersen and mcgee", 5.0,
              [](std::string& detail) {
                  return check_vertex_counts(cagex::petersen(), 2, detail) &&
                         check_vertex_counts(cagex::mcgee(), 3, detail);
              });

    criterion(3, "edge covering counts exact on heawood and tutte-coxeter", 10.0,
              [](std::string& detail) {
                  return check_edge_counts(cagex::heawood(), 3, detail) &&
                         check_edge_counts(cagex::tutte_coxeter(), 4, detail);
              });

    criterion(4, "boundary floor holds over every subset of petersen and heawood", 60.0,
              [](std::string& detail) {
                  const cagex::BoundaryCheckReport p =
                      cagex::verify_boundary_bound(cagex::petersen());
                  const cagex::BoundaryCheckReport h =
                      cagex::verify_boundary_bound(cagex::heawood());
                  if (!p.ok() || !h.ok()) {
                      detail = "a subset beats the floor";
                      return false;
                  }
                  if (p.subsets_checked != 637 || h.subsets_checked != 9907) {
                      detail = "admissible subset counts drifted";
                      return false;
                  }
                  return true;
              });

    criterion(5, "exact isoperimetric constants with independently checked witnesses", 10.0,
              [](std::string& detail) {
                  const std::vector<std::pair<Graph, Rational>> rows = {
                      {cagex::complete_graph(4), Rational(2)},
                      {cagex::cycle_graph(6), Rational(2, 3)},
                      {cagex::petersen(), Rational(1)}};
                  for (const auto& [g, expected] : rows) {
                      const cagex::CheegerResult result = cagex::cheeger_exact(g);
                      if (result.h != expected) {
                          detail = "constant is " + cagex::to_fraction_string(result.h) +
                                   ", expected " + cagex::to_fraction_string(expected);
                          return false;
                      }
                      const long long size = result.argmin_set.count();
                      if (size <= 0 || 2 * size > g.vertex_count()) {
                          detail = "witness set has inadmissible size";
                          return false;
                      }
                      if (ratio_from_scratch(g, result.argmin_set) != expected) {
                          detail = "witness ratio does not reproduce the constant";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "expansion floor 2/5 by two routes, certificates on petersen and heawood", 5.0,
              [](std::string& detail) {
                  const Rational route_a = cagex::expansion_bound_odd(3, 0, 2).value;
                  const BigInt n = cagex::moore_cage_bound(3, 5);
                  const Rational beta(cagex::moore_cage_bound(3, 3), n);
                  const Rational route_b = beta * 3 - 1 + Rational(BigInt(2), n);
                  if (route_a != Rational(2, 5) || route_b != Rational(2, 5)) {
                      detail = "routes give " + cagex::to_fraction_string(route_a) + " and " +
                               cagex::to_fraction_string(route_b);
                      return false;
                  }
                  const cagex::ExpansionCertificate pc =
                      cagex::certify_expansion(cagex::petersen(), 0);
                  if (!pc.verdict || pc.h != 1 || pc.bound.value != Rational(2, 5)) {
                      detail = "petersen certificate failed";
                      return false;
                  }
                  const BigInt hn = cagex::moore_cage_bound(3, 6);
                  const Rational heawood_beta(cagex::moore_cage_bound(3, 5) - 1, 3 * hn / 2);
                  const Rational heawood_direct = heawood_beta * 3 - 1 + Rational(BigInt(2), hn);
                  const cagex::ExpansionCertificate hc =
                      cagex::certify_expansion(cagex::heawood(), 0);
                  if (cagex::expansion_bound_even(3, 0, 3).value != Rational(3, 7) ||
                      heawood_direct != Rational(3, 7) || !hc.verdict || hc.h != 1 ||
                      hc.bound.value != Rational(3, 7)) {
                      detail = "heawood certificate failed";
                      return false;
                  }
                  return true;
              });

    criterion(7, "bounds sit within 1e-6 of 1/(k-1) at depth 40 for k up to 8", 1.0,
              [](std::string& detail) {
                  const Rational tolerance(1, 1000000);
                  for (int k = 3; k <= 8; ++k) {
                      for (const cagex::Parity parity : {cagex::Parity::odd, cagex::Parity::even}) {
                          const cagex::ExpansionBound bound =
                              parity == cagex::Parity::odd ? cagex::expansion_bound_odd(k, 0, 40)
                                                           : cagex::expansion_bound_even(k, 0, 40);
                          if (bound.limit != Rational(1, k - 1) ||
                              bound.gap != bound.limit - bound.value || bound.gap <= 0 ||
                              bound.gap >= tolerance) {
                              detail = "k=" + std::to_string(k) + " gap " +
                                       cagex::to_fraction_string(bound.gap);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(8, "petersen spectrum, ramanujan margin, and the two-sided sandwich", 1.0,
              [](std::string& detail) {
                  const Graph g = cagex::petersen();
                  const cagex::Spectrum s = cagex::spectrum(g);
                  const auto groups = cagex::eigenvalue_multiplicities(s);
                  const std::vector<std::pair<double, int>> expected = {{3, 1}, {1, 5}, {-2, 4}};
                  if (groups.size() != expected.size()) {
                      detail = "unexpected number of eigenvalue groups";
                      return false;
                  }
                  for (std::size_t i = 0; i < expected.size(); ++i)
                      if (std::abs(groups[i].first - expected[i].first) > 1e-8 ||
                          groups[i].second != expected[i].second) {
                          detail = "group " + std::to_string(i) + " off";
                          return false;
                      }
                  if (std::abs(s.lambda_abs() - 2.0) > 1e-8) {
                      detail = "second eigenvalue in absolute value is not 2";
                      return false;
                  }
                  const cagex::RamanujanVerdict rama = cagex::is_ramanujan(g, s);
                  if (!rama.verdict ||
                      std::abs(rama.margin - (2 * std::sqrt(2.0) - 2.0)) > 1e-8) {
                      detail = "margin " + std::to_string(rama.margin);
                      return false;
                  }
                  const cagex::SpectralSandwich sandwich =
                      cagex::cheeger_inequality_check(g, s, Rational(1));
                  if (!sandwich.pass || std::abs(sandwich.lower_abs - 0.5) > 1e-8 ||
                      std::abs(sandwich.upper_abs - std::sqrt(6.0)) > 1e-8 ||
                      sandwich.lower_abs > 1.0 || 1.0 > sandwich.upper_abs) {
                      detail = "sandwich endpoints off";
                      return false;
                  }
                  return true;
              });

    criterion(9, "doubling keeps degree and girth, cut 2, halving upper bounds", 10.0,
              [](std::string& detail) {
                  const Graph base = cagex::petersen();
                  const Graph doubled = cagex::double_graph(base, {0, 1});
                  if (cagex::is_regular(doubled) != 3 || cagex::girth(doubled) != 5) {
                      detail = "degree or girth drifted";
                      return false;
                  }
                  VertexSet first_copy(doubled.vertex_count());
                  for (int v = 0; v < base.vertex_count(); ++v) first_copy.add(v);
                  if (cagex::edge_boundary_size(doubled, first_copy) != 2) {
                      detail = "cut between the copies is not 2";
                      return false;
                  }
                  if (ratio_from_scratch(doubled, first_copy) != Rational(1, 5) ||
                      cagex::cheeger_exact(doubled).h != Rational(1, 5)) {
                      detail = "doubled constant is not 1/5";
                      return false;
                  }
                  const std::vector<Graph> chain = cagex::iterate_doubling(base, 3);
                  Rational previous(1);
                  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                      VertexSet copy(chain[i + 1].vertex_count());
                      for (int v = 0; v < chain[i].vertex_count(); ++v) copy.add(v);
                      const long long cut = cagex::edge_boundary_size(chain[i + 1], copy);
                      const Rational upper(BigInt(cut), BigInt(chain[i].vertex_count()));
                      if (cut != 2 || upper >= previous ||
                          upper != Rational(2, 10 * (1 << i))) {
                          detail = "step " + std::to_string(i) + " bound " +
                                   cagex::to_fraction_string(upper);
                          return false;
                      }
                      previous = upper;
                  }
                  return true;
              });

    criterion(10, "byte exact graph6 round trip over the whole catalog", 1.0,
               [](std::string& detail) {
                   for (const auto& entry : cagex::catalog()) {
                       const std::string line =
                           cagex::write_graph(entry.build(), cagex::GraphFormat::graph6);
                       const Graph back = cagex::parse_graph(line, cagex::GraphFormat::graph6);
                       if (cagex::write_graph(back, cagex::GraphFormat::graph6) != line) {
                           detail = entry.name + " does not survive the round trip";
                           return false;
                       }
                   }
                   const Graph reference = cagex::parse_graph("IsP@OkWHG", cagex::GraphFormat::graph6);
                   if (cagex::write_graph(reference, cagex::GraphFormat::graph6) != "IsP@OkWHG\n") {
                       detail = "reference line re-encodes differently";
                       return false;
                   }
                   return true;
               });

    if (failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d of 10 criteria FAILED\n", failures);
    return 1;
}
