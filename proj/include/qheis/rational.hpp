#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qheis/errors.hpp"

namespace qheis {

// Arbitrary-precision rationals; GMP keeps them in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "n" or "n/d" (optional sign, decimal digits). Throws on anything else.
Rational rat_parse(std::string_view s);

/// Canonical string: "n" when the denominator is 1, otherwise "n/d".
std::string rat_str(const Rational& r);

/// r^e for any integer e; e < 0 requires r != 0.
Rational rat_pow(const Rational& r, long e);

bool rat_is_integer(const Rational& r);

/// The unique integer k with q^k == v, if one exists.
/// Requires q not in {0, 1, -1}; exact, no floating point involved.
std::optional<long> exact_q_log(const Rational& q, const Rational& v);

/// All positive divisors of |n|, n != 0. Trial division; fine at the
/// coefficient sizes this library produces.
std::vector<BigInt> divisors(const BigInt& n);

} // namespace qheis
