#include "cagex/coverage.hpp"

#include "cagex/errors.hpp"
#include "cagex/subset_scan.hpp"

#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace cagex {

namespace {

constexpr std::size_t kMaxRecordedViolations = 64;

int require_regular_degree(const Graph& g) {
    const auto reg = is_regular(g);
    if (!reg || *reg < 3)
        throw hypothesis_error("coverage counting requires a k-regular graph with k >= 3");
    return *reg;
}

int require_girth(const Graph& g, Parity parity) {
    const auto girth_value = girth(g);
    if (!girth_value) throw hypothesis_error("coverage counting requires a finite girth");
    if (parity == Parity::odd && *girth_value % 2 == 0)
        throw hypothesis_error("vertex-rooted counting requires odd girth, got " +
                               std::to_string(*girth_value));
    if (parity == Parity::even && *girth_value % 2 == 1)
        throw hypothesis_error("edge-rooted counting requires even girth, got " +
                               std::to_string(*girth_value));
    return *girth_value;
}

// Vertices within `radius` of any source, as a bitset.
VertexSet ball(const Graph& g, std::initializer_list<int> sources, int radius) {
    const int n = g.vertex_count();
    VertexSet seen(n);
    if (radius < 0) return seen;
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    std::queue<int> q;
    for (int s : sources) {
        if (dist[static_cast<std::size_t>(s)] == kUnreachable) {
            dist[static_cast<std::size_t>(s)] = 0;
            seen.add(s);
            q.push(s);
        }
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (dist[static_cast<std::size_t>(u)] == radius) continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                seen.add(w);
                q.push(w);
            }
        }
    }
    return seen;
}

}  // namespace

long long count_covering_vertices(const Graph& g, int v, int s_prime) {
    if (v < 0 || v >= g.vertex_count())
        throw hypothesis_error("vertex out of range: " + std::to_string(v));
    require_regular_degree(g);
    const int gg = require_girth(g, Parity::odd);
    if (s_prime < 0 || s_prime > (gg - 1) / 2)
        throw hypothesis_error("radius " + std::to_string(s_prime) + " outside [0, " +
                               std::to_string((gg - 1) / 2) + "] for girth " + std::to_string(gg));
    long long count = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (ball(g, {u}, s_prime).contains(v)) ++count;
    return count;
}

long long count_covering_edges(const Graph& g, int v, int s_prime) {
    if (v < 0 || v >= g.vertex_count())
        throw hypothesis_error("vertex out of range: " + std::to_string(v));
    require_regular_degree(g);
    const int gg = require_girth(g, Parity::even);
    if (s_prime < 0 || s_prime > gg / 2)
        throw hypothesis_error("depth " + std::to_string(s_prime) + " outside [0, " +
                               std::to_string(gg / 2) + "] for girth " + std::to_string(gg));
    long long count = 0;
    for (const auto& [a, b] : g.edges())
        if (ball(g, {a, b}, s_prime - 1).contains(v)) ++count;
    return count;
}

CoverageWitness best_covering_vertex(const Graph& g, const VertexSet& s, int depth) {
    if (s.universe() != g.vertex_count())
        throw hypothesis_error("vertex set universe does not match graph order");
    if (s.empty()) throw hypothesis_error("coverage witness requires a nonempty set");
    require_regular_degree(g);
    const int gg = require_girth(g, Parity::odd);
    const int k = *is_regular(g);
    if (depth < 0 || depth > (gg - 1) / 2)
        throw hypothesis_error("radius " + std::to_string(depth) + " outside [0, " +
                               std::to_string((gg - 1) / 2) + "] for girth " + std::to_string(gg));

    int best_root = -1;
    int best_count = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int c = ball(g, {u}, depth).intersection_count(s);
        if (c > best_count) {
            best_count = c;
            best_root = u;
        }
    }

    CoverageWitness w;
    w.root = best_root;
    w.covered = ball(g, {best_root}, depth).intersection(s);
    w.covered_count = best_count;
    w.threshold = Rational(moore_ball_order(k, depth) * s.count(), g.vertex_count());
    if (Rational(best_count) < w.threshold)
        throw std::logic_error("maximum overlap fell below the averaging floor");
    return w;
}

CoverageWitness best_covering_edge(const Graph& g, const VertexSet& s, int depth) {
    if (s.universe() != g.vertex_count())
        throw hypothesis_error("vertex set universe does not match graph order");
    if (s.empty()) throw hypothesis_error("coverage witness requires a nonempty set");
    require_regular_degree(g);
    const int gg = require_girth(g, Parity::even);
    const int k = *is_regular(g);
    if (depth < 1 || depth > gg / 2)
        throw hypothesis_error("depth " + std::to_string(depth) + " outside [1, " +
                               std::to_string(gg / 2) + "] for girth " + std::to_string(gg));

    Edge best_root{-1, -1};
    int best_count = -1;
    for (const auto& [a, b] : g.edges()) {
        const int c = ball(g, {a, b}, depth - 1).intersection_count(s);
        if (c > best_count) {
            best_count = c;
            best_root = {a, b};
        }
    }

    CoverageWitness w;
    w.root = best_root;
    w.covered = ball(g, {best_root.first, best_root.second}, depth - 1).intersection(s);
    w.covered_count = best_count;
    w.threshold =
        Rational((moore_ball_order(k, depth) - 1) * s.count(), g.edge_count());
    if (Rational(best_count) < w.threshold)
        throw std::logic_error("maximum overlap fell below the averaging floor");
    return w;
}

Rational boundary_lower_bound(const BigInt& s_size, const Rational& beta, int k) {
    if (s_size < 1) throw hypothesis_error("subset size must be positive");
    if (beta <= 0 || beta > 1) throw hypothesis_error("coverage fraction must lie in (0, 1]");
    if (k < 3) throw hypothesis_error("degree must be at least 3, got " + std::to_string(k));
    return Rational(s_size) * (beta * k - 1) + 1;
}

namespace {

struct BoundSetup {
    int k;
    Parity parity;
    Rational beta;
};

BoundSetup boundary_setup(const Graph& g) {
    BoundSetup setup;
    setup.k = require_regular_degree(g);
    const auto girth_value = girth(g);
    if (!girth_value) throw hypothesis_error("boundary bound requires a finite girth");
    const int gg = *girth_value;
    const BigInt n = g.vertex_count();
    if (gg % 2 == 1) {
        setup.parity = Parity::odd;
        setup.beta = beta_odd(BoundParams(setup.k, gg), n);
    } else {
        setup.parity = Parity::even;
        setup.beta = beta_even(BoundParams(setup.k, gg), n);
    }
    return setup;
}

}  // namespace

BoundaryCheckReport verify_boundary_bound(const Graph& g, int exhaustive_cap) {
    const BoundSetup setup = boundary_setup(g);
    const int n = g.vertex_count();
    if (n > exhaustive_cap)
        throw cap_error("exhaustive boundary check over " + std::to_string(n) +
                        " vertices exceeds the cap " + std::to_string(exhaustive_cap));

    BoundaryCheckReport report;
    report.parity = setup.parity;
    report.beta = setup.beta;
    report.mode = CheckMode::exhaustive;
    report.seed = 0;
    report.subsets_checked = 0;

    // beta = p/q in lowest terms; the floor |S|(beta*k - 1) + 1 holds iff
    // q*cut >= |S|(p*k - q) + q. Everything fits in 64 bits for n <= 62.
    const long long p = numerator(setup.beta).convert_to<long long>();
    const long long q = denominator(setup.beta).convert_to<long long>();
    const long long k = setup.k;
    scan_subsets(g, [&](long long cut, const VertexSet& s) {
        const int size = s.count();
        if (2 * size > n) return;
        ++report.subsets_checked;
        if (q * cut < size * (p * k - q) + q && report.violations.size() < kMaxRecordedViolations)
            report.violations.push_back(
                {s, cut, boundary_lower_bound(size, setup.beta, setup.k)});
    });
    return report;
}

BoundaryCheckReport verify_boundary_bound_sampled(const Graph& g, long long samples,
                                                  std::uint64_t seed) {
    const BoundSetup setup = boundary_setup(g);
    if (samples < 1) throw hypothesis_error("sample count must be positive");
    const int n = g.vertex_count();
    if (n < 2) throw hypothesis_error("boundary bound needs at least two vertices");

    BoundaryCheckReport report;
    report.parity = setup.parity;
    report.beta = setup.beta;
    report.mode = CheckMode::sampled;
    report.seed = seed;
    report.subsets_checked = 0;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, n / 2);
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;

    for (long long trial = 0; trial < samples; ++trial) {
        const int target = size_dist(rng);
        for (int i = 0; i < target; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
        }
        VertexSet s(n);
        for (int i = 0; i < target; ++i) s.add(pool[static_cast<std::size_t>(i)]);
        const long long cut = edge_boundary_size(g, s);
        ++report.subsets_checked;
        const Rational floor = boundary_lower_bound(s.count(), setup.beta, setup.k);
        if (Rational(cut) < floor && report.violations.size() < kMaxRecordedViolations)
            report.violations.push_back({s, cut, floor});
    }
    return report;
}

}  // namespace cagex
