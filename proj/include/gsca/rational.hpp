#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gsca {

// Arbitrary-precision rational. boost keeps the invariants we need:
// lowest terms, positive denominator, exact arithmetic.
using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

// Canonical form: "n" when the denominator is 1, otherwise "n/d" with d > 0.
std::string render_rational(const Rational& r);

// Parses exactly the canonical form (optional leading '-', digits, optional "/digits").
Rational parse_rational(const std::string& s);

} // namespace gsca
