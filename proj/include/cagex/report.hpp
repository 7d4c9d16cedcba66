#pragma once

#include "cagex/graph.hpp"
#include "cagex/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace cagex {

using json = nlohmann::ordered_json;

struct AnalyzeOptions {
    BigInt c = 0;
    int exact_cap = 26;
    long long samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    bool include_timings = false;
};

// Exact rationals serialize as {"exact": "p/q", "approx": double}.
json rational_json(const Rational& r);
json bigint_json(const BigInt& v);

// Full pipeline over one connected k-regular graph (k >= 3): order bounds,
// isoperimetric constant (exact under the cap, sampled above), spectrum and
// the spectral sandwich, the girth-parity expansion bound, and per-vertex
// covering counts. Field order is fixed; identical inputs and options give
// byte-identical documents (timings stay out unless requested).
json analyze(const Graph& g, const std::string& name, const AnalyzeOptions& options);

}  // namespace cagex
