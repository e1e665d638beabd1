#pragma once

#include <gmpxx.h>

#include <string>

namespace mtc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact binomial coefficient; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt gcd(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Narrow to `long`, throwing std::out_of_range if `x` does not fit.
long to_long(const BigInt& x, const char* what);

/// Parse a decimal integer, throwing std::invalid_argument on junk.
BigInt parse_bigint(const std::string& text);

}  // namespace mtc
