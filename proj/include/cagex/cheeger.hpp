#pragma once

#include "cagex/graph.hpp"
#include "cagex/rational.hpp"

#include <cstdint>

namespace cagex {

enum class CheegerMethod { exhaustive, sampled_upper_bound };

struct CheegerResult {
    Rational h;
    VertexSet argmin_set;
    CheegerMethod method;
    unsigned long long subsets_scanned;
};

// Exact isoperimetric constant min |boundary(S)| / |S| over 0 < |S| <= n/2,
// by Gray-code enumeration of all subsets. When |S| = n/2 only sets
// containing vertex 0 are candidates (each complementary pair has exactly
// one). Ties go to the set with the smallest bitset value. Requires a
// connected graph with 2 <= n <= n_cap.
CheegerResult cheeger_exact(const Graph& g, int n_cap = 26);

// Upper bound from seeded random subsets, each refined by steepest-descent
// single-vertex moves until locally minimal. Deterministic for a fixed seed.
CheegerResult cheeger_upper_sample(const Graph& g, long long samples, std::uint64_t seed);

}  // namespace cagex
