#include "cagex/cheeger.hpp"

#include "cagex/errors.hpp"
#include "cagex/subset_scan.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace cagex {

namespace {

void require_connected(const Graph& g) {
    if (g.vertex_count() < 2)
        throw hypothesis_error("isoperimetric constant needs at least two vertices");
    if (!is_connected(g))
        throw hypothesis_error("isoperimetric constant is defined for connected graphs only");
}

// ratio(cut_a, size_a) < ratio(cut_b, size_b), exactly.
bool ratio_less(long long cut_a, int size_a, long long cut_b, int size_b) {
    return cut_a * size_b < cut_b * size_a;
}

}  // namespace

CheegerResult cheeger_exact(const Graph& g, int n_cap) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n > n_cap)
        throw cap_error("exhaustive isoperimetric scan over " + std::to_string(n) +
                        " vertices exceeds the cap " + std::to_string(n_cap) +
                        "; raise the cap or use sampling");

    long long best_cut = -1;
    int best_size = 1;
    VertexSet best_set(n);
    unsigned long long scanned = 0;
    scan_subsets(g, [&](long long cut, const VertexSet& s) {
        ++scanned;
        const int size = s.count();
        if (2 * size > n) return;
        if (2 * size == n && !s.contains(0)) return;
        if (best_cut < 0 || ratio_less(cut, size, best_cut, best_size) ||
            (cut * best_size == best_cut * size && s.value_less(best_set))) {
            best_cut = cut;
            best_size = size;
            best_set = s;
        }
    });

    CheegerResult result;
    result.h = Rational(best_cut, best_size);
    result.argmin_set = best_set;
    result.method = CheegerMethod::exhaustive;
    result.subsets_scanned = scanned;
    return result;
}

namespace {

// Cut change from toggling v, evaluated before the flip.
long long toggle_delta(const Graph& g, const VertexSet& s, int v) {
    long long delta = 0;
    if (s.contains(v)) {
        for (int w : g.neighbors(v)) delta += s.contains(w) ? 1 : -1;
    } else {
        for (int w : g.neighbors(v)) delta += s.contains(w) ? -1 : 1;
    }
    return delta;
}

}  // namespace

CheegerResult cheeger_upper_sample(const Graph& g, long long samples, std::uint64_t seed) {
    require_connected(g);
    if (samples < 1) throw hypothesis_error("sample count must be positive");
    const int n = g.vertex_count();
    const int half = n / 2;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, half);
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;

    long long best_cut = -1;
    int best_size = 1;
    VertexSet best_set(n);
    unsigned long long evaluated = 0;

    const auto consider = [&](long long cut, int size, const VertexSet& s) {
        ++evaluated;
        if (best_cut < 0 || ratio_less(cut, size, best_cut, best_size) ||
            (cut * best_size == best_cut * size && s.value_less(best_set))) {
            best_cut = cut;
            best_size = size;
            best_set = s;
        }
    };

    for (long long trial = 0; trial < samples; ++trial) {
        const int target = size_dist(rng);
        for (int i = 0; i < target; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
        }
        VertexSet s(n);
        for (int i = 0; i < target; ++i) s.add(pool[static_cast<std::size_t>(i)]);
        long long cut = edge_boundary_size(g, s);
        consider(cut, s.count(), s);

        // Steepest descent: apply the single-vertex move with the best
        // resulting ratio while it strictly improves the current one.
        for (;;) {
            int move = -1;
            long long move_cut = 0;
            int move_size = 0;
            for (int v = 0; v < n; ++v) {
                const bool inside = s.contains(v);
                const int new_size = s.count() + (inside ? -1 : 1);
                if (new_size < 1 || 2 * new_size > n) continue;
                const long long new_cut = cut + toggle_delta(g, s, v);
                if (move < 0 || ratio_less(new_cut, new_size, move_cut, move_size)) {
                    move = v;
                    move_cut = new_cut;
                    move_size = new_size;
                }
            }
            if (move < 0 || !ratio_less(move_cut, move_size, cut, s.count())) break;
            s.toggle(move);
            cut = move_cut;
            consider(cut, s.count(), s);
        }
    }

    CheegerResult result;
    result.h = Rational(best_cut, best_size);
    result.argmin_set = best_set;
    result.method = CheegerMethod::sampled_upper_bound;
    result.subsets_scanned = evaluated;
    return result;
}

}  // namespace cagex
