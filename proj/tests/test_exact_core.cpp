#include "abckit/ball.hpp"
#include "abckit/errors.hpp"
#include "abckit/factor.hpp"
#include "abckit/modpoly.hpp"
#include "abckit/poly.hpp"
#include "abckit/roots.hpp"

#include <doctest.h>

#include <random>

using namespace abckit;

namespace {

ModPoly mp(long p, std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return ModPoly(Integer(p), v);
}

Rational random_rational(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> dn(-num, num), dd(1, den);
  Rational q(Integer(dn(rng)), Integer(dd(rng)));
  q.canonicalize();
  return q;
}

// Enumerates monic polynomials of degree d over F_p and reports whether any divides f.
bool has_factor_of_degree(const ModPoly& f, int d) {
  long p = f.modulus().get_si();
  std::vector<long> c(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Integer> v(c.begin(), c.end());
    v.emplace_back(1);
    ModPoly g(f.modulus(), v);
    if ((f % g).is_zero()) return true;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == p) c[i++] = 0;
    if (i == c.size()) return false;
  }
}

bool brute_irreducible(const ModPoly& f) {
  for (int d = 1; 2 * d <= f.degree(); ++d)
    if (has_factor_of_degree(f, d)) return false;
  return true;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    Rational p = random_rational(rng, 1000000, 1000000);
    Rational q = random_rational(rng, 1000000, 1000000);
    CHECK((p + q) - q == p);
    if (q != 0) CHECK((p * q) / q == p);
  }
}

TEST_CASE("integer helpers") {
  CHECK(valuation(Integer(96), Integer(2)) == 5);
  CHECK(valuation(Rational(3, 8), Integer(2)) == -3);
  CHECK(radical(Integer(3 * 125 * 128)) == 30);
  auto f = factor_integer(Integer("600851475143"));
  CHECK(f.size() == 4);
  CHECK(f.at(Integer(6857)) == 1);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
}

TEST_CASE("factor_mod_p worked examples") {
  auto f5 = factor_mod_p(mp(5, {1, 0, 1}));
  REQUIRE(f5.size() == 2);
  CHECK(f5[0].first == mp(5, {2, 1}));
  CHECK(f5[1].first == mp(5, {3, 1}));
  auto f2 = factor_mod_p(mp(2, {1, 0, 1}));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first == mp(2, {1, 1}));
  CHECK(f2[0].second == 2);
  auto f3 = factor_mod_p(mp(3, {1, 0, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first == mp(3, {1, 0, 1}));
  CHECK_THROWS_AS(ModPoly(Integer(6)), InvalidModulus);
}

TEST_CASE("factor_mod_p reconstructs random inputs") {
  std::mt19937_64 rng(7);
  const long primes[] = {2, 3, 5, 7, 101};
  int irreducibility_checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    long p = primes[trial % 5];
    std::uniform_int_distribution<long> coeff(0, p - 1), deg(1, 8);
    int d = static_cast<int>(deg(rng));
    std::vector<long> c(static_cast<std::size_t>(d + 1));
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    ModPoly f = mp(p, c);
    auto fac = factor_mod_p(f, static_cast<unsigned long>(trial));
    ModPoly prod(Integer(p), {1});
    for (const auto& [g, m] : fac) {
      CHECK(g.leading() == 1);
      for (int k = 0; k < m; ++k) prod = prod * g;
      if (p <= 7 && trial % 3 == 0) {
        CHECK(brute_irreducible(g));
        ++irreducibility_checks;
      }
    }
    CHECK(prod == f.monic());
  }
  CHECK(irreducibility_checks > 100);
}

TEST_CASE("factor_mod_p handles p-th powers") {
  // (x^2 + x + 1)^3 (x + 1)^2 over F_3 and (x^3 + x + 1)^4 over F_2.
  ModPoly a = mp(3, {1, 1, 1});
  ModPoly f = a * a * a * mp(3, {1, 1}) * mp(3, {1, 1});
  ModPoly prod(Integer(3), {1});
  for (const auto& [g, m] : factor_mod_p(f))
    for (int k = 0; k < m; ++k) prod = prod * g;
  CHECK(prod == f);
  ModPoly b = mp(2, {1, 1, 0, 1});
  auto fb = factor_mod_p(b * b * b * b);
  REQUIRE(fb.size() == 1);
  CHECK(fb[0].second == 4);
}

TEST_CASE("factor_over_Q worked examples") {
  auto f = factor_over_Q(Poly::from_integers({-1, 0, 0, 0, 1}));
  REQUIRE(f.size() == 3);
  CHECK(f[0].first == Poly::from_integers({-1, 1}));
  CHECK(f[1].first == Poly::from_integers({1, 1}));
  CHECK(f[2].first == Poly::from_integers({1, 0, 1}));
  auto g = factor_over_Q(Poly::from_integers({1, -1, 1}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].first == Poly::from_integers({1, -1, 1}));
  auto h = factor_over_Q(Poly::from_integers({1, -2, 1}));
  REQUIRE(h.size() == 1);
  CHECK(h[0].first == Poly::from_integers({-1, 1}));
  CHECK(h[0].second == 2);
}

TEST_CASE("factor_over_Q round-trips cyclotomic and linear products") {
  std::vector<Poly> pool = {
      Poly::from_integers({1, 1}),           Poly::from_integers({1, 1, 1}),
      Poly::from_integers({1, 0, 1}),        Poly::from_integers({1, 1, 1, 1, 1}),
      Poly::from_integers({1, -1, 1}),       Poly::from_integers({1, 0, 0, 1, 0, 0, 1}),
      Poly::from_integers({1, 0, -1, 0, 1}), Poly::from_integers({1, -1, 0, 1, 0, -1, 0, 1}),
  };
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Poly prod = Poly::constant(random_rational(rng, 9, 5) + 10);
    int total = 0;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size());
    while (total < 12) {
      std::size_t k = pick(rng);
      Poly g = k == pool.size() ? Poly::linear_root(random_rational(rng, 6, 4)) : pool[k];
      if (total + g.degree() > 12) break;
      prod *= g;
      total += g.degree();
      if (trial % 4 == 0 && total >= 6) break;
    }
    auto fac = factor_over_Q(prod);
    Poly back = Poly::constant(prod.leading());
    for (const auto& [g, m] : fac) {
      CHECK(g.leading() == 1);
      back *= pow(g, static_cast<unsigned>(m));
      if (g.degree() > 1) CHECK(rational_roots(g).empty());
    }
    CHECK(back == prod);
  }
}

TEST_CASE("factor_over_Q splits products that need recombination") {
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  CHECK(is_irreducible(Poly::from_integers({1, 0, 0, 0, 1})));
  Poly f = Poly::from_integers({1, 0, 0, 0, 1}) * Poly::from_integers({-2, 0, 1}) * Poly::from_integers({3, 0, 1});
  auto fac = factor_over_Q(f);
  CHECK(fac.size() == 3);
  Poly nonmonic = Poly::from_integers({-1, 2}) * Poly::from_integers({5, 0, 3});
  auto fn = factor_over_Q(nonmonic);
  REQUIRE(fn.size() == 2);
  CHECK(fn[0].first == Poly(std::vector<Rational>{Rational(-1, 2), 1}));
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(Poly::from_integers({3, 0, 1})) == -12);
  CHECK(discriminant(Poly::from_integers({-2, 0, 0, 1})) == -108);
  // Res(x^2 + 1, x - 2) = 5.
  CHECK(resultant(Poly::from_integers({1, 0, 1}), Poly::from_integers({-2, 1})) == 5);
  // Multiplicativity against an expanded product.
  Poly a = Poly::from_integers({1, 2, 3}), b = Poly::from_integers({-1, 0, 4, 1}), c = Poly::from_integers({7, -1});
  CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
}

TEST_CASE("Newton polygon") {
  // x^2 - 2 at 2: both roots have valuation 1/2.
  auto s = newton_polygon(Poly::from_integers({-2, 0, 1}), Integer(2));
  REQUIRE(s.size() == 1);
  CHECK(s[0].slope == Rational(1, 2));
  CHECK(s[0].length == 2);
  // (x - 4)(x - 1/3) at 2 and 3.
  Poly f = Poly::linear_root(4) * Poly::linear_root(Rational(1, 3));
  auto s2 = newton_polygon(f, Integer(2));
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].slope == 0);
  CHECK(s2[1].slope == 2);
  auto s3 = newton_polygon(f, Integer(3));
  CHECK(s3[0].slope == -1);
}

TEST_CASE("root isolation worked examples") {
  auto r = isolate_complex_roots(Poly::from_integers({3, 0, 1}), 64);
  REQUIRE(r.size() == 2);
  CHECK(r[0].imag().mid() == doctest::Approx(1.7320508075688772));
  CHECK(r[1].imag().mid() == doctest::Approx(-1.7320508075688772));
  CHECK(r[0].real().contains(Rational(0)));
  auto l = isolate_complex_roots(Poly::from_integers({-2, 1}), 64);
  REQUIRE(l.size() == 1);
  CHECK(l[0].real().is_exact());
  CHECK(l[0].real().mid() == 2.0);
  auto z = isolate_complex_roots(Poly::from_integers({1, -1, 1}), 64);
  REQUIRE(z.size() == 2);
  CHECK(z[0].real().mid() == doctest::Approx(0.5));
  CHECK(z[0].imag().mid() == doctest::Approx(0.8660254037844386));
  auto c = isolate_complex_roots(Poly::from_integers({-2, 0, 0, 1}), 128);
  REQUIRE(c.size() == 3);
  CHECK(count_real_roots(c) == 1);
  CHECK(c[0].real().mid() == doctest::Approx(1.2599210498948732));
  CHECK(c[0].real().rad() < 1e-30);
}

TEST_CASE("root balls are sound on random polynomials with known roots") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<Rational, Rational>> known;
    Poly f = Poly::constant(1);
    std::uniform_int_distribution<int> nroots(1, 4);
    int nr = nroots(rng), nc = nroots(rng) - 1;
    for (int i = 0; i < nr; ++i) {
      Rational x = random_rational(rng, 20, 7);
      bool dup = false;
      for (auto& k : known) dup |= (k.first == x && k.second == 0);
      if (dup) continue;
      known.emplace_back(x, 0);
      f *= Poly::linear_root(x);
    }
    for (int i = 0; i < nc; ++i) {
      Rational a = random_rational(rng, 20, 7), b = random_rational(rng, 20, 7);
      if (b == 0) b = 1;
      bool dup = false;
      for (auto& k : known) dup |= (k.first == a && (k.second == b || k.second == -b));
      if (dup) continue;
      known.emplace_back(a, b);
      known.emplace_back(a, -b);
      f *= Poly(std::vector<Rational>{a * a + b * b, -2 * a, 1});
    }
    auto roots = isolate_complex_roots(f, 64);
    REQUIRE(roots.size() == known.size());
    for (const auto& [re, im] : known) {
      int hits = 0;
      for (const auto& z : roots) hits += (z.real().contains(re) && z.imag().contains(im)) ? 1 : 0;
      CHECK(hits == 1);
    }
    for (const auto& z : roots) CHECK(f.eval(z).contains_zero());
  }
}

TEST_CASE("ball arithmetic encloses exact results") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng, 1000, 999), b = random_rational(rng, 1000, 999);
    if (b == 0) continue;
    RealBall x = RealBall::from_rational(a, 64), y = RealBall::from_rational(b, 64);
    CHECK((x + y).contains(a + b));
    CHECK((x * y).contains(a * b));
    CHECK((x / y).contains(a / b));
    CHECK((x - y).contains(a - b));
  }
  RealBall two = RealBall::from_integer(2, 128);
  CHECK(exp(log(two)).contains(Rational(2)));
  CHECK(sqrt(RealBall::from_integer(9, 128)).contains(Rational(3)));
  CHECK(RealBall::pi(128).rad() < 1e-35);
}
