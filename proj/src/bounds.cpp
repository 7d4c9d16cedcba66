#include "cagex/bounds.hpp"

#include "cagex/errors.hpp"

#include <stdexcept>
#include <string>

namespace cagex {

namespace {

void check_bound_args(int k, const BigInt& c, int s) {
    if (k < 3) throw hypothesis_error("degree must be at least 3, got " + std::to_string(k));
    if (s < 2) throw hypothesis_error("depth must be at least 2, got " + std::to_string(s));
    if (c < 0) throw hypothesis_error("order slack must be nonnegative, got " + c.str());
}

ExpansionBound finish(int k, const BigInt& c, int s, Parity parity, const Rational& value,
                      const Rational& cross_check) {
    if (value != cross_check)
        throw std::logic_error("the two evaluation routes disagree at k=" + std::to_string(k) +
                               " s=" + std::to_string(s));
    ExpansionBound bound;
    bound.k = k;
    bound.c = c;
    bound.s = s;
    bound.parity = parity;
    bound.value = value;
    bound.limit = Rational(1, k - 1);
    bound.gap = bound.limit - value;
    if (bound.gap <= 0)
        throw std::logic_error("bound reached its limit at finite depth s=" + std::to_string(s));
    return bound;
}

}  // namespace

ExpansionBound expansion_bound_odd(int k, const BigInt& c, int s) {
    check_bound_args(k, c, s);
    const BigInt pw = int_pow(k - 1, static_cast<unsigned>(s - 1));
    const BigInt slack = c * (k - 2);
    const BigInt denom = k * pw * (k - 1) - 2 + slack;
    const Rational value = Rational(BigInt(k) * k * pw - 2 + slack, denom) -
                           Rational(k * pw * (k - 1) + 2 * slack, denom);

    const BigInt n = moore_cage_bound(k, 2 * s + 1) + c;
    const Rational beta = beta_odd(BoundParams(k, 2 * s + 1, c), n);
    const Rational cross = beta * k - 1 + Rational(2, n);
    return finish(k, c, s, Parity::odd, value, cross);
}

ExpansionBound expansion_bound_even(int k, const BigInt& c, int s) {
    check_bound_args(k, c, s);
    const BigInt pw = int_pow(k - 1, static_cast<unsigned>(s - 1));
    const BigInt slack = c * (k - 2);
    const BigInt denom = 2 * pw * (k - 1) - 2 + slack;
    const Rational value = Rational(2 * k * pw - 2 + slack, denom) -
                           Rational(2 * pw * (k - 1) + 2 * slack, denom);

    const BigInt n = moore_cage_bound(k, 2 * s) + c;
    const Rational beta = beta_even(BoundParams(k, 2 * s, c), n);
    const Rational cross = beta * k - 1 + Rational(2, n);
    return finish(k, c, s, Parity::even, value, cross);
}

int min_depth_for_epsilon(int k, const BigInt& c, const Rational& epsilon, Parity parity) {
    if (k < 3) throw hypothesis_error("degree must be at least 3, got " + std::to_string(k));
    if (c < 0) throw hypothesis_error("order slack must be nonnegative");
    const Rational limit(1, k - 1);
    if (epsilon <= 0 || epsilon >= limit)
        throw hypothesis_error("tolerance must lie strictly between 0 and 1/(k-1)");
    const Rational target = limit - epsilon;
    for (int s = 2; s <= 100000; ++s) {
        const ExpansionBound bound = parity == Parity::odd ? expansion_bound_odd(k, c, s)
                                                           : expansion_bound_even(k, c, s);
        if (bound.value >= target) return s;
    }
    throw std::logic_error("no depth within range approaches the limit");
}

ExpansionCertificate certify_expansion(const Graph& g, const BigInt& c, int exact_cap,
                                       long long samples, std::uint64_t seed) {
    const auto reg = is_regular(g);
    if (!reg || *reg < 3)
        throw hypothesis_error("certification requires a k-regular graph with k >= 3");
    const int k = *reg;
    if (!is_connected(g))
        throw hypothesis_error("certification requires a connected graph");
    const auto girth_value = girth(g);
    if (!girth_value) throw hypothesis_error("certification requires a finite girth");
    const int gg = *girth_value;
    const int s = gg % 2 == 1 ? (gg - 1) / 2 : gg / 2;
    if (s < 2)
        throw hypothesis_error("girth " + std::to_string(gg) + " is below the bound's range");

    const BigInt n = g.vertex_count();
    const BigInt cap = moore_cage_bound(k, gg) + c;
    if (n > cap)
        throw hypothesis_error("order " + n.str() + " exceeds the admissible maximum " + cap.str() +
                               " for girth " + std::to_string(gg) + " and slack " + c.str());

    ExpansionCertificate cert;
    cert.bound = gg % 2 == 1 ? expansion_bound_odd(k, c, s) : expansion_bound_even(k, c, s);
    const CheegerResult h = g.vertex_count() <= exact_cap ? cheeger_exact(g, exact_cap)
                                                          : cheeger_upper_sample(g, samples, seed);
    cert.h = h.h;
    cert.h_method = h.method;
    cert.verdict = cert.h >= cert.bound.value;
    return cert;
}

}  // namespace cagex
