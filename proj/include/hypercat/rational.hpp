#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypercat {

// Exact arithmetic carriers. All coefficient and counting arithmetic in this
// library is exact; floating point appears only at output boundaries.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational rational_from_string(const std::string& s);

// "p" for integers, otherwise "p/q" in lowest terms.
std::string rational_to_string(const Rational& r);

// Fixed-point decimal rendering with the given number of fractional digits,
// rounding half away from zero. Deterministic, locale-independent.
std::string rational_to_decimal(const Rational& r, int digits = 12);

Int factorial(unsigned long n);

}  // namespace hypercat
