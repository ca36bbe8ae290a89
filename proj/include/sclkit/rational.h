#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sclkit {

// Arbitrary-precision rational in lowest terms, denominator positive.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" with q > 0 and gcd(p, q) = 1; integers keep the "/1".
std::string to_string(const Rational& r);

// Accepts "p", "p/q", "-p/q". Throws InvalidArgument on malformed text.
Rational rational_from_string(const std::string& text);

Integer lcm_of_denominators(const std::vector<Rational>& values);

Rational abs(const Rational& r);

}  // namespace sclkit
