#include "cagex/report.hpp"

#include "cagex/bounds.hpp"
#include "cagex/cheeger.hpp"
#include "cagex/coverage.hpp"
#include "cagex/errors.hpp"
#include "cagex/moore.hpp"
#include "cagex/spectral.hpp"

#include <chrono>
#include <cstdint>
#include <limits>

namespace cagex {

json rational_json(const Rational& r) {
    json j;
    j["exact"] = to_fraction_string(r);
    j["approx"] = to_double(r);
    return j;
}

json bigint_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json isoperimetric_section(const Graph& g, const CheegerResult& result) {
    json j;
    j["value"] = rational_json(result.h);
    j["method"] = result.method == CheegerMethod::exhaustive ? "exhaustive" : "sampled_upper_bound";
    j["witness"] = result.argmin_set.to_vector();
    j["witness_boundary"] = edge_boundary_size(g, result.argmin_set);
    j["subsets_scanned"] = result.subsets_scanned;
    return j;
}

json spectral_section(const Graph& g, const Rational& h, const AnalyzeOptions& options) {
    const Spectrum s = spectrum(g, options.tol);
    json j;
    j["tolerance"] = s.tolerance;
    json groups = json::array();
    for (const auto& [value, count] : eigenvalue_multiplicities(s))
        groups.push_back(json{{"value", value}, {"multiplicity", count}});
    j["eigenvalue_groups"] = groups;
    j["lambda_second"] = s.lambda_second();
    j["lambda_abs"] = s.lambda_abs();

    const RamanujanVerdict rama = is_ramanujan(g, s);
    j["ramanujan"] = {{"lambda", rama.lambda},
                      {"threshold", rama.threshold},
                      {"margin", rama.margin},
                      {"verdict", rama.verdict}};

    const SpectralSandwich sandwich = cheeger_inequality_check(g, s, h);
    j["sandwich"] = {{"lower_signed", sandwich.lower_signed},
                     {"h", sandwich.h},
                     {"upper_signed", sandwich.upper_signed},
                     {"pass", sandwich.pass},
                     {"lower_abs", sandwich.lower_abs},
                     {"upper_abs", sandwich.upper_abs},
                     {"abs_upper_holds", sandwich.abs_upper_holds}};
    return j;
}

json expansion_section(const Graph& g, int k, int girth_value, const Rational& h,
                       const AnalyzeOptions& options) {
    json j;
    const int s = girth_value % 2 == 1 ? (girth_value - 1) / 2 : girth_value / 2;
    j["parity"] = girth_value % 2 == 1 ? "odd" : "even";
    j["s"] = s;
    j["c"] = bigint_json(options.c);
    if (s < 2) {
        j["applicable"] = false;
        j["reason"] = "girth below the bound's range";
        return j;
    }
    const BigInt cap = moore_cage_bound(k, girth_value) + options.c;
    if (BigInt(g.vertex_count()) > cap) {
        j["applicable"] = false;
        j["reason"] = "order exceeds moore_bound + c";
        return j;
    }
    j["applicable"] = true;
    const ExpansionBound bound = girth_value % 2 == 1 ? expansion_bound_odd(k, options.c, s)
                                                      : expansion_bound_even(k, options.c, s);
    const BoundParams params(k, girth_value, options.c);
    const Rational beta = girth_value % 2 == 1 ? beta_odd(params, g.vertex_count())
                                               : beta_even(params, g.vertex_count());
    j["beta"] = rational_json(beta);
    j["bound"] = rational_json(bound.value);
    j["limit"] = rational_json(bound.limit);
    j["gap"] = rational_json(bound.gap);
    j["certified"] = h >= bound.value;
    return j;
}

json covering_section(const Graph& g, int k, int girth_value) {
    json j;
    const bool odd = girth_value % 2 == 1;
    j["rooted_at"] = odd ? "vertices" : "edges";
    json radii = json::array();
    bool all_match = true;
    const int max_radius = odd ? (girth_value - 1) / 2 : girth_value / 2;
    for (int r = 0; r <= max_radius; ++r) {
        const BigInt expected = odd ? moore_ball_order(k, r) : moore_ball_order(k, r) - 1;
        bool match = true;
        for (int v = 0; v < g.vertex_count() && match; ++v) {
            const long long count =
                odd ? count_covering_vertices(g, v, r) : count_covering_edges(g, v, r);
            match = BigInt(count) == expected;
        }
        all_match = all_match && match;
        radii.push_back(json{{"radius", r}, {"expected", bigint_json(expected)}, {"all_vertices_match", match}});
    }
    j["per_radius"] = radii;
    j["verified"] = all_match;
    return j;
}

}  // namespace

json analyze(const Graph& g, const std::string& name, const AnalyzeOptions& options) {
    const auto reg = is_regular(g);
    if (!reg || *reg < 3)
        throw hypothesis_error("analysis requires a k-regular graph with k >= 3");
    if (!is_connected(g))
        throw hypothesis_error("analysis requires a connected graph");
    const int k = *reg;
    const auto girth_opt = girth(g);
    if (!girth_opt) throw hypothesis_error("analysis requires a finite girth");
    const int girth_value = *girth_opt;

    json timings;
    json j;
    j["name"] = name;
    j["order"] = g.vertex_count();
    j["size"] = g.edge_count();
    j["degree"] = k;
    j["girth"] = girth_value;

    const BigInt moore = moore_cage_bound(k, girth_value);
    j["moore_bound"] = bigint_json(moore);
    j["excess"] = bigint_json(excess(g, k, girth_value));

    auto start = Clock::now();
    const CheegerResult cheeger = g.vertex_count() <= options.exact_cap
                                      ? cheeger_exact(g, options.exact_cap)
                                      : cheeger_upper_sample(g, options.samples, options.seed);
    j["isoperimetric"] = isoperimetric_section(g, cheeger);
    timings["isoperimetric"] = ms_since(start);
    const Rational& h = cheeger.h;

    start = Clock::now();
    j["spectral"] = spectral_section(g, h, options);
    timings["spectral"] = ms_since(start);

    start = Clock::now();
    j["expansion"] = expansion_section(g, k, girth_value, h, options);
    timings["expansion"] = ms_since(start);

    start = Clock::now();
    j["covering"] = covering_section(g, k, girth_value);
    timings["covering"] = ms_since(start);

    j["options"] = {{"c", bigint_json(options.c)},
                    {"exact_cap", options.exact_cap},
                    {"samples", options.samples},
                    {"seed", options.seed},
                    {"tol", options.tol}};
    if (options.include_timings) j["timings_ms"] = timings;
    return j;
}

}  // namespace cagex
