#pragma once

#include "cagex/graph.hpp"
#include "cagex/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cagex {

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    std::optional<int> k;             // common degree, when regular
    double tolerance;

    // max(|second largest|, |smallest|); requires n >= 2.
    double lambda_abs() const;
    // The second largest eigenvalue with its sign; requires n >= 2.
    double lambda_second() const;
};

// Adjacency eigenvalues via cyclic Jacobi rotations on the dense symmetric
// matrix, iterated until the off-diagonal Frobenius mass drops below tol.
Spectrum spectrum(const Graph& g, double tol = 1e-10);

// Eigenvalues grouped into multiplicity classes: values within 1000*tol of
// the class representative collapse together.
std::vector<std::pair<double, int>> eigenvalue_multiplicities(const Spectrum& s);

struct RamanujanVerdict {
    double lambda;     // max-absolute nontrivial eigenvalue
    double threshold;  // 2*sqrt(k-1)
    double margin;     // threshold - lambda
    bool verdict;      // lambda <= threshold, compared at tolerance
};

// Requires a connected regular graph on at least 2 vertices.
RamanujanVerdict is_ramanujan(const Graph& g, const Spectrum& s);

// Both directions of the spectral sandwich on the isoperimetric constant:
// (k - lambda)/2 <= h <= sqrt(2k(k - lambda)). The pass verdict uses the
// signed second eigenvalue; the same bounds for the max-absolute variant
// are reported alongside for diagnosis (the upper direction can fail for
// that variant on bipartite graphs, where the smallest eigenvalue is -k).
struct SpectralSandwich {
    int k;
    double h;
    double lambda_second;
    double lower_signed, upper_signed;
    bool pass;
    double lambda_abs;
    double lower_abs, upper_abs;
    bool abs_upper_holds;
};

SpectralSandwich cheeger_inequality_check(const Graph& g, const Spectrum& s, const Rational& h);

// Eigenvalue window occupied by large doubled families: for every k >= 3,
// k - 2/k <= lambda <= k - 1/(2k^3) once the isoperimetric constant sits
// near 1/k; the wider variant uses 1/(k-1) instead of 1/k.
struct LambdaWindow {
    Rational lower;       // k - 2/k
    Rational upper;       // k - 1/(2k^3)
    Rational lower_wide;  // k - 2/(k-1)
    Rational upper_wide;  // k - 1/(2k(k-1)^2)
};

LambdaWindow lambda_bracket(int k);

}  // namespace cagex
