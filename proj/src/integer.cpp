#include "abckit/integer.hpp"

#include "abckit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace abckit {

std::int64_t valuation(const Integer& n, const Integer& p) {
  if (n == 0) return kInfiniteValuation;
  if (mpz_cmp_ui(p.get_mpz_t(), 2) < 0) throw InvalidInput("valuation: modulus must be >= 2");
  Integer rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t valuation(const Rational& q, const Integer& p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw InvalidInput("factor_integer: zero has no factorization");
  std::map<Integer, int> out;
  Integer n = abs(n_in);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Integer(p)] += 1;
      n /= p;
    }
  }
  // wheel over 6k +- 1 up to a small bound
  for (unsigned long p = 7; p < 20000 && n > 1; p += 2) {
    if (p % 3 == 0 || p % 5 == 0) continue;
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Integer(p)] += 1;
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

Integer radical(const Integer& n) {
  Integer r = 1;
  for (const auto& [p, e] : factor_integer(n)) r *= p;
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("rpow: zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exponent);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
             ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw InvalidInput("empty integer literal");
  std::size_t start = (s.front() == '-') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw InvalidInput("malformed integer literal '" + std::string(text) + "'");
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer symmetric_mod(const Integer& n, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace abckit
