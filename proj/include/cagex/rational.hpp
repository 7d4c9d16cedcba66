#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cagex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; integers render without the "/q" part.
inline std::string to_fraction_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) {
    return r.template convert_to<double>();
}

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

}  // namespace cagex
