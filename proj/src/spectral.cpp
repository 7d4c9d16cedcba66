#include "cagex/spectral.hpp"

#include "cagex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cagex {

namespace {

double off_diagonal_mass(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sum += a[static_cast<std::size_t>(i * n + j)] *
                                                a[static_cast<std::size_t>(i * n + j)];
    return std::sqrt(2.0 * sum);
}

// Cyclic Jacobi sweeps: each rotation zeroes one off-diagonal pair; the
// off-diagonal mass converges quadratically once it is small.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol) {
    const auto at = [&a, n](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i * n + j)];
    };
    const double skip_floor = tol / (16.0 * n * n + 16.0);
    for (int sweep = 0; sweep < 128; ++sweep) {
        if (off_diagonal_mass(a, n) < tol) {
            std::vector<double> values(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = at(i, i);
            std::sort(values.begin(), values.end(), std::greater<double>());
            return values;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= skip_floor) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e12) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = at(i, p);
                    const double aiq = at(i, q);
                    at(i, p) = at(p, i) = c * aip - s * aiq;
                    at(i, q) = at(q, i) = s * aip + c * aiq;
                }
                const double app = at(p, p);
                const double aqq = at(q, q);
                at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
    }
    throw std::logic_error("rotation sweeps failed to converge");
}

}  // namespace

Spectrum spectrum(const Graph& g, double tol) {
    const int n = g.vertex_count();
    if (n < 1) throw hypothesis_error("spectrum of an empty graph");
    if (!(tol > 0.0) || tol > 1e-2)
        throw hypothesis_error("convergence tolerance must lie in (0, 1e-2]");
    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u * n + v)] = 1.0;
        a[static_cast<std::size_t>(v * n + u)] = 1.0;
    }
    Spectrum s;
    s.eigenvalues = jacobi_eigenvalues(std::move(a), n, tol);
    s.k = is_regular(g);
    s.tolerance = tol;
    return s;
}

double Spectrum::lambda_abs() const {
    if (eigenvalues.size() < 2)
        throw hypothesis_error("nontrivial eigenvalue needs at least two vertices");
    return std::max(std::abs(eigenvalues[1]), std::abs(eigenvalues.back()));
}

double Spectrum::lambda_second() const {
    if (eigenvalues.size() < 2)
        throw hypothesis_error("nontrivial eigenvalue needs at least two vertices");
    return eigenvalues[1];
}

std::vector<std::pair<double, int>> eigenvalue_multiplicities(const Spectrum& s) {
    std::vector<std::pair<double, int>> groups;
    const double width = 1000.0 * s.tolerance;
    for (double value : s.eigenvalues) {
        if (!groups.empty() && std::abs(groups.back().first - value) <= width)
            ++groups.back().second;
        else
            groups.emplace_back(value, 1);
    }
    return groups;
}

namespace {

int checked_degree(const Graph& g, const Spectrum& s) {
    if (static_cast<int>(s.eigenvalues.size()) != g.vertex_count())
        throw hypothesis_error("spectrum does not match the graph order");
    if (g.vertex_count() < 2)
        throw hypothesis_error("spectral comparison requires at least 2 vertices");
    if (!s.k || *s.k < 1)
        throw hypothesis_error("spectral comparison requires a regular graph");
    if (!is_connected(g))
        throw hypothesis_error("spectral comparison requires a connected graph");
    return *s.k;
}

}  // namespace

RamanujanVerdict is_ramanujan(const Graph& g, const Spectrum& s) {
    const int k = checked_degree(g, s);
    RamanujanVerdict verdict;
    verdict.lambda = s.lambda_abs();
    verdict.threshold = 2.0 * std::sqrt(static_cast<double>(k - 1));
    verdict.margin = verdict.threshold - verdict.lambda;
    verdict.verdict = verdict.lambda <= verdict.threshold + s.tolerance;
    return verdict;
}

SpectralSandwich cheeger_inequality_check(const Graph& g, const Spectrum& s, const Rational& h) {
    const int k = checked_degree(g, s);
    if (h < 0) throw hypothesis_error("isoperimetric constant cannot be negative");

    SpectralSandwich report;
    report.k = k;
    report.h = to_double(h);
    report.lambda_second = s.lambda_second();
    report.lambda_abs = s.lambda_abs();

    const auto lower = [k](double lambda) { return (k - lambda) / 2.0; };
    const auto upper = [k](double lambda) {
        return std::sqrt(std::max(0.0, 2.0 * k * (k - lambda)));
    };
    report.lower_signed = lower(report.lambda_second);
    report.upper_signed = upper(report.lambda_second);
    report.lower_abs = lower(report.lambda_abs);
    report.upper_abs = upper(report.lambda_abs);

    // Eigenvalue error <= tol, amplified by the sqrt near lambda = k.
    const double eps = 1000.0 * s.tolerance;
    report.pass = report.lower_signed <= report.h + eps && report.h <= report.upper_signed + eps;
    report.abs_upper_holds = report.h <= report.upper_abs + eps;
    return report;
}

LambdaWindow lambda_bracket(int k) {
    if (k < 3) throw hypothesis_error("degree must be at least 3, got " + std::to_string(k));
    LambdaWindow w;
    w.lower = Rational(k) - Rational(2, k);
    w.upper = Rational(k) - Rational(1, 2 * BigInt(k) * k * k);
    w.lower_wide = Rational(k) - Rational(2, k - 1);
    w.upper_wide = Rational(k) - Rational(1, 2 * BigInt(k) * (k - 1) * (k - 1));
    return w;
}

}  // namespace cagex
