#pragma once

#include "cagex/cheeger.hpp"
#include "cagex/graph.hpp"
#include "cagex/moore.hpp"
#include "cagex/rational.hpp"

#include <cstdint>

namespace cagex {

// Exact value of the isoperimetric lower bound for k-regular graphs of odd
// girth 2s+1 (or even girth 2s) and order at most the Moore value plus c.
struct ExpansionBound {
    int k;
    BigInt c;
    int s;
    Parity parity;
    Rational value;
    Rational limit;  // 1/(k-1), the supremum over s
    Rational gap;    // limit - value, strictly positive
};

// k >= 3, s >= 2, c >= 0. The displayed two-fraction form is cross-checked
// internally against beta*k - 1 + 2/n; the two must agree exactly.
ExpansionBound expansion_bound_odd(int k, const BigInt& c, int s);
ExpansionBound expansion_bound_even(int k, const BigInt& c, int s);

// Smallest s >= 2 whose bound is within epsilon of 1/(k-1).
// Requires 0 < epsilon < 1/(k-1).
int min_depth_for_epsilon(int k, const BigInt& c, const Rational& epsilon, Parity parity);

struct ExpansionCertificate {
    ExpansionBound bound;
    Rational h;
    CheegerMethod h_method;
    bool verdict;  // h >= bound.value
};

// Checks that g is k-regular (k >= 3), connected, of girth >= 5 when odd or
// >= 4 when even, with order at most moore_cage_bound(k, girth) + c, then
// compares its isoperimetric constant against the bound for its girth
// parity. The constant is exact when n <= exact_cap, otherwise a sampled
// upper bound.
ExpansionCertificate certify_expansion(const Graph& g, const BigInt& c, int exact_cap = 26,
                                       long long samples = 1000, std::uint64_t seed = 0);

}  // namespace cagex
