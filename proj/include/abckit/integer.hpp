#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>

namespace abckit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sentinel used for v(0) = +infinity.
inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

/// Exponent of the prime p in n. Returns kInfiniteValuation for n = 0.
std::int64_t valuation(const Integer& n, const Integer& p);
std::int64_t valuation(const Rational& q, const Integer& p);

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);

/// Prime factorization of |n| (n != 0); trial division followed by Pollard-Brent rho.
std::map<Integer, int> factor_integer(const Integer& n);

/// Product of the distinct primes dividing |n|.
Integer radical(const Integer& n);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

/// Parses "17", "-3/4" or "  12 " into a canonical rational.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Smallest integer >= q.
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

/// Symmetric residue of n modulo m, in (-m/2, m/2].
Integer symmetric_mod(const Integer& n, const Integer& m);

}  // namespace abckit
