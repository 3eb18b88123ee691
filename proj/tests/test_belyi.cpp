#include "abckit/belyi.hpp"
#include "abckit/errors.hpp"
#include "abckit/factor.hpp"

#include <doctest.h>

#include <chrono>
#include <random>

using namespace abckit;

namespace {

ProjAlgebraic rat(const Rational& q) { return AlgebraicNumber::rational(q); }
ProjAlgebraic rat(long a, long b = 1) { return AlgebraicNumber::rational(Rational(a, b)); }
ProjAlgebraic alg(std::vector<long> c) { return AlgebraicNumber::root_of(Poly::from_integers(std::move(c))); }
const ProjAlgebraic kInf = std::nullopt;

Rational random_rational(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  Rational q(Integer(n(rng)), Integer(d(rng)));
  q.canonicalize();
  return q;
}

bool maps_into_tripod(const RationalMap& f, const ProjAlgebraic& x) { return in_tripod(image(f, x)); }

}  // namespace

TEST_CASE("choose_prime") {
  CHECK(choose_prime({}) == 2);
  CHECK(choose_prime({rat(1, 3), rat(2)}) == 2);
  CHECK(choose_prime({alg({-2, 0, 1})}) == 3);
  CHECK(choose_prime({rat(1, 2)}) == 3);
  CHECK(choose_prime({rat(1, 6), rat(1, 5)}) == 7);
}

TEST_CASE("move infinity and minpoly steps") {
  auto f = step_move_infinity(2);
  CHECK(f.eval(ProjRational()) == ProjRational(Rational(1, 2)));
  CHECK(f.eval(ProjRational(Rational(0))) == ProjRational(Rational(0)));
  CHECK(f.eval(ProjRational(Rational(1))) == ProjRational(Rational(1, 3)));
  CHECK(step_move_infinity(5).eval(ProjRational()) == ProjRational(Rational(1, 5)));

  // sqrt 2 at p = 3: m' = 2x has only the root 0.
  CHECK(!min_derivative_root_valuation(Poly::from_integers({-2, 0, 1}), 3));
  CHECK(image(RationalMap::polynomial(Poly::from_integers({-2, 0, 1})), rat(0)) == rat(-2));
  // zeta_6: m' = 2x - 1 with root 1/2 mapping to 3/4.
  Poly z6 = Poly::from_integers({1, -1, 1});
  CHECK(*min_derivative_root_valuation(z6, 3) == 0);
  CHECK(image(RationalMap::polynomial(z6), rat(1, 2)) == rat(3, 4));
  CHECK(*min_derivative_root_valuation(z6, 2) == -1);
}

TEST_CASE("fold critical points") {
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n) {
      auto F = step_fold(m, n);
      CHECK(F.degree() == m + n);
      Poly d = F.num().derivative();
      auto fac = factor_over_Q(d);
      int at0 = 0, at1 = 0, mid = 0, other = 0;
      Rational q(m, m + n);
      q.canonicalize();
      for (const auto& [g, k] : fac) {
        if (g == Poly::linear_root(0)) at0 = k;
        else if (g == Poly::linear_root(1)) at1 = k;
        else if (g == Poly::linear_root(q)) mid = k;
        else ++other;
      }
      CHECK(at0 == m - 1);
      CHECK(at1 == n - 1);
      CHECK(mid == 1);
      CHECK(other == 0);
    }
  CHECK(image(step_fold(1, 1), rat(1, 2)) == rat(1, 4));
  CHECK(image(step_fold(1, 2), rat(1, 3)) == rat(4, 27));
  CHECK(image(step_fold(2, 1), rat(2, 3)) == rat(4, 27));
  CHECK_THROWS_AS(step_fold(600, 600, 1000), DegreeCapExceeded);
}

TEST_CASE("composition degree law") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int t = 0; t < 100; ++t) {
    auto rp = [&] {
      std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
      for (auto& x : c) x = random_rational(rng, 5, 3);
      return Poly(c);
    };
    Poly a = rp(), b = rp(), c = rp(), d = rp();
    if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) continue;
    if (gcd(a, b).degree() > 0 || gcd(c, d).degree() > 0) continue;
    RationalMap f(a, b), g(c, d);
    if (f.degree() < 1 || g.degree() < 1) continue;
    CHECK(f.compose(g).degree() == f.degree() * g.degree());
  }
}

TEST_CASE("verify_belyi examples") {
  auto f = RationalMap::polynomial(Poly::from_integers({0, 4, -4}));
  auto c = verify_belyi(f, {rat(0), rat(1, 2), rat(1)}, {});
  CHECK(c.ok());
  for (const auto& v : c.critical_values) CHECK(in_tripod(v));
  CHECK(c.critical_values.size() == 2);  // 1 at z = 1/2 and infinity

  CHECK(verify_belyi(RationalMap::polynomial(Poly::from_integers({0, 0, 1})), {}, {}).ok());

  auto bad = verify_belyi(RationalMap::polynomial(Poly::from_integers({0, 1, 1})), {}, {});
  CHECK(!bad.ok());
  REQUIRE(bad.offending.size() == 1);
  CHECK(bad.offending[0] == rat(-1, 4));

  // R mapped into the tripod is rejected.
  CHECK(!verify_belyi(f, {}, {rat(0)}).ok());
  CHECK(!verify_belyi(f, {rat(2)}, {}).ok());
  // Non-rational critical value.
  auto cubic = verify_belyi(RationalMap::polynomial(Poly::from_integers({0, -3, 0, 1})), {}, {});
  CHECK(!cubic.ok());
  CHECK(cubic.offending.size() == 2);  // -2 and 2
}

TEST_CASE("build_belyi worked examples") {
  auto r = build_belyi({rat(0), rat(1, 2), rat(1)}, {});
  CHECK(r.map == RationalMap::polynomial(Poly::from_integers({0, 4, -4})));
  CHECK(r.certificate.ok());

  r = build_belyi({rat(1, 2)}, {});
  CHECK(r.map.degree() == 1);
  CHECK(maps_into_tripod(r.map, rat(1, 2)));

  r = build_belyi({}, {rat(5)});
  CHECK(r.map.degree() == 1);
  CHECK(!maps_into_tripod(r.map, rat(5)));

  r = build_belyi({}, {rat(0), rat(1), kInf});
  CHECK(r.map.degree() == 1);
  for (const auto& x : {rat(0), rat(1), kInf}) CHECK(!maps_into_tripod(r.map, x));

  r = build_belyi({alg({-2, 0, 1})}, {});
  CHECK(r.certificate.ok());
  CHECK(maps_into_tripod(r.map, alg({-2, 0, 1})));

  r = build_belyi({alg({1, -1, 1})}, {rat(2)});
  CHECK(r.certificate.ok());
  CHECK(!maps_into_tripod(r.map, rat(2)));

  r = build_belyi({alg({-2, 0, 0, 1})}, {});
  CHECK(r.map.degree() == 3);
  CHECK(r.certificate.ok());

  r = build_belyi({alg({-2, 0, 1}), rat(1, 3)}, {});
  CHECK(r.certificate.ok());
  CHECK(maps_into_tripod(r.map, rat(1, 3)));

  // Fold degrees explode here; the caps must stop it.
  CHECK_THROWS_AS(build_belyi({alg({-2, 0, 1}), rat(1, 3)}, {rat(2), kInf}), DegreeCapExceeded);

  r = build_belyi({rat(0), rat(1, 3), rat(1)}, {rat(-1)});
  CHECK(r.certificate.ok());

  CHECK_THROWS_AS(build_belyi({rat(2)}, {rat(2)}), InvalidInput);
  CHECK_THROWS_AS(build_belyi({rat(0), rat(1, 7), rat(1, 3), rat(1, 2), rat(1)}, {}, BelyiOptions{40, 1000, 1 << 26}),
                  DegreeCapExceeded);
}

TEST_CASE("random constructions pass the independent oracle") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> size(0, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<ProjAlgebraic> E, R;
    int k = size(rng);
    for (int i = 0; i < k; ++i) E.push_back(rat(random_rational(rng, 6, 4)));
    ProjAlgebraic r = rat(random_rational(rng, 6, 4));
    bool clash = false;
    for (const auto& e : E) clash = clash || same_orbit(e, r);
    if (!clash && t % 2) R.push_back(r);
    auto start = std::chrono::steady_clock::now();
    auto res = build_belyi(E, R);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
    CHECK(verify_belyi(res.map, E, R).ok());
  }
  for (int t = 0; t < 20; ++t) {
    std::vector<ProjAlgebraic> E = {rat(0), rat(1), rat(random_rational(rng, 3, 3))};
    auto res = build_belyi(E, {});
    CHECK(verify_belyi(res.map, E, {}).ok());
  }
}

TEST_CASE("derivative roots stay integral") {
  std::mt19937_64 rng(23);
  std::vector<long> primes = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<int> deg(2, 12), pick(0, 4);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int t = 0; t < 200; ++t) {
    long p = primes[static_cast<std::size_t>(pick(rng))];
    Poly m = Poly::constant(1);
    int d = deg(rng);
    for (int i = 0; i < d; ++i) {
      long q = den(rng);
      while (q % p == 0) q = den(rng);
      Rational root(Integer(num(rng)), Integer(q));
      root.canonicalize();
      m = m * Poly::linear_root(root);
    }
    auto low = min_derivative_root_valuation(m, p);
    if (low) CHECK(*low >= -valuation(Integer(d), Integer(p)));
  }
}

TEST_CASE("uniform sequence") {
  auto seq = uniform_sequence({}, 1);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].map == RationalMap::identity());
  CHECK(seq[1].R.size() == 3);
  for (const auto& x : tripod_preimage(seq[0].map)) CHECK(!maps_into_tripod(seq[1].map, x));

  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    std::vector<ProjAlgebraic> E;
    if (t % 3) E.push_back(rat(random_rational(rng, 4, 3)));
    if (t % 3 == 2) E.push_back(rat(random_rational(rng, 4, 3)));
    ProjAlgebraic r = t % 10 == 0 ? kInf : rat(random_rational(rng, 6, 5));
    bool clash = false;
    for (const auto& e : E) clash = clash || same_orbit(e, r);
    if (clash) continue;
    auto s = uniform_sequence(E, 1);
    // New points of R_1 - R_0 are disjoint from R_0 (empty) and regular for f_1.
    for (const auto& x : s[1].R) CHECK(!maps_into_tripod(s[1].map, x));
    CHECK((!maps_into_tripod(s[0].map, r) || !maps_into_tripod(s[1].map, r)));
  }

  auto s2 = uniform_sequence({}, 2);
  REQUIRE(s2.size() == 3);
  for (const auto& x : s2[1].R)
    CHECK(std::count_if(s2[2].R.begin(), s2[2].R.end(), [&](const ProjAlgebraic& y) { return same_orbit(x, y); }) == 1);
}
