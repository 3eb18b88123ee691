#include "abckit/errors.hpp"
#include "abckit/heights.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace abckit;

namespace {

FieldPtr eisenstein() {
  static const FieldPtr K = NumberField::create(Poly::from_integers({3, 0, 1}));
  return K;
}

FieldPtr gaussian() {
  static const FieldPtr K = NumberField::create(Poly::from_integers({1, 0, 1}));
  return K;
}

AbcPoint sixth_roots_point() {
  FieldPtr K = eisenstein();
  FieldElement z(K, {Rational(1, 2), Rational(1, 2)});
  FieldElement zb(K, {Rational(1, 2), Rational(-1, 2)});
  return AbcPoint::make(z, zb, FieldElement::rational(K, 1));
}

FieldElement random_element(const FieldPtr& K, std::mt19937_64& rng, long range = 6) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 3);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) {
    Rational x(Integer(num(rng)), Integer(den(rng)));
    x.canonicalize();
    c.push_back(x);
  }
  return FieldElement(K, c);
}

double value(const HeightValue& h) { return h.total(128).mid(); }

}  // namespace

TEST_CASE("heights of rational triples") {
  auto P = AbcPoint::rational(1, 8, 9);
  HeightValue h = global_height(P);
  CHECK(h.finite().empty());
  CHECK(value(h) == doctest::Approx(std::log(9.0)));
  CHECK(value(global_height(AbcPoint::rational(1, 1, 2))) == doctest::Approx(std::log(2.0)));
  HeightValue r = global_radical(AbcPoint::rational(3, 125, 128));
  CHECK(r.constant() == 1);
  CHECK(r.finite_string() == "log(2·3·5)");
  CHECK(value(r) == doctest::Approx(1 + std::log(30.0)));
  CHECK(value(global_radical(AbcPoint::rational(1, 1, 2))) == doctest::Approx(1 + std::log(2.0)));
  CHECK(global_height(AbcPoint::rational(3, 125, 128)).total(128).rad() < 1e-12);
}

TEST_CASE("non-normalized coordinates move height into the finite part") {
  FieldPtr Q = NumberField::rationals();
  auto P = AbcPoint::make(FieldElement::rational(Q, Rational(3, 4)), FieldElement::rational(Q, Rational(125, 4)),
                          FieldElement::rational(Q, 32));
  HeightValue h = global_height(P);
  CHECK(h.finite().at(Integer(2)) == 2);
  CHECK(value(h) == doctest::Approx(7 * std::log(2.0)));
}

TEST_CASE("projective height of arbitrary points") {
  FieldPtr Q = NumberField::rationals();
  auto q = [&](Rational x) { return FieldElement::rational(Q, x); };
  CHECK(value(projective_height({q(2), q(1)})) == doctest::Approx(std::log(2.0)));
  CHECK(value(projective_height({q(Rational(2, 3)), q(1)})) == doctest::Approx(std::log(3.0)));
  // zero coordinates contribute nothing
  CHECK(value(projective_height({q(5), q(0), q(1)})) == doctest::Approx(std::log(5.0)));
  auto P = AbcPoint::rational(3, 125, 128);
  CHECK(value(projective_height({P.a, P.b, P.c})) == doctest::Approx(value(global_height(P))));
  FieldElement i(gaussian(), {Rational(0), Rational(1)});
  CHECK(value(projective_height({i, FieldElement::rational(gaussian(), 1)})) == doctest::Approx(0).epsilon(1e-12));
  CHECK_THROWS_AS(projective_height({q(0), q(0)}), InvalidInput);
  CHECK_THROWS_AS(projective_height({q(1), FieldElement::rational(gaussian(), 1)}), InvalidInput);
}

TEST_CASE("the sixth roots of unity point") {
  AbcPoint P = sixth_roots_point();
  HeightValue h = global_height(P);
  CHECK(h.finite().empty());
  CHECK(h.total(128).contains(Rational(0)));
  CHECK(h.total(128).rad() < 1e-30);
  HeightValue r = global_radical(P);
  CHECK(r.constant() == 2);
  CHECK(r.finite().empty());
  CHECK(absolute_radical(P).contains(Rational(1)));
  CHECK(log_different(P).mid() == doctest::Approx(std::log(3.0) / 2));
  HeightOptions ex;
  ex.radical_exception = true;
  CHECK(value(global_radical(P, ex)) == 0.0);
}

TEST_CASE("absolute quantities") {
  auto P = AbcPoint::rational(3, 125, 128);
  auto Pi = P.in_field(gaussian());
  RealBall hq = absolute_height(P), hi = absolute_height(Pi);
  CHECK(std::fabs(hq.mid() - hi.mid()) < 1e-30);
  CHECK(value(global_height(Pi)) == doctest::Approx(2 * value(global_height(P))));
  CHECK(log_different(P).contains(Rational(0)));
  CHECK(log_different(Pi).contains(Rational(0)));  // minimal field is Q
  CHECK(absolute_radical(Pi).mid() == doctest::Approx(1 + std::log(30.0)));
}

TEST_CASE("tripod radical") {
  FieldPtr Q = NumberField::rationals();
  auto T = DivisorSpec::tripod();
  CHECK(radical_wrt_divisor(FieldElement::rational(Q, Rational(3, 128)), T).finite_string() == "log(2·3·5)");
  CHECK(radical_wrt_divisor(FieldElement::rational(Q, 2), T).finite_string() == "log(2)");
  CHECK(radical_wrt_divisor(FieldElement::rational(Q, Rational(7, 11)), T).finite_string() == "log(2·7·11)");
  CHECK_THROWS_AS(radical_wrt_divisor(FieldElement::rational(Q, 1), T), DomainError);
  CHECK_THROWS_AS(global_radical(AbcPoint::rational(0, 1, 1)), DomainError);
}

TEST_CASE("projective invariance and extension scaling") {
  std::mt19937_64 rng(23);
  std::vector<FieldPtr> fields = {NumberField::rationals(), gaussian(), eisenstein(),
                                  NumberField::create(Poly::from_integers({-2, 0, 0, 1}))};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& K = fields[static_cast<std::size_t>(trial) % fields.size()];
    FieldElement a = random_element(K, rng), b = random_element(K, rng), x = random_element(K, rng);
    if (x.is_zero() || (a.is_zero() && b.is_zero())) continue;
    AbcPoint P = AbcPoint::make(a, b, a + b);
    RealBall h1 = global_height(P).total(128), h2 = global_height(P.scaled(x)).total(128);
    CHECK(std::fabs(h1.mid() - h2.mid()) < 1e-25);
  }
}

TEST_CASE("height inequalities on random points") {
  std::mt19937_64 rng(29);
  std::vector<FieldPtr> fields = {NumberField::rationals(), gaussian(), eisenstein()};
  HeightOptions opts;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& K = fields[static_cast<std::size_t>(trial) % fields.size()];
    FieldElement a = random_element(K, rng);
    FieldElement one = FieldElement::rational(K, 1);
    if (a.is_zero() || a == one) continue;
    int d = K->degree();
    RealBall log2 = log(RealBall::from_integer(2, 128));
    RealBall h1 = global_height(AbcPoint::from_ratio(a)).total(128);
    std::uniform_int_distribution<int> nd(2, 6);
    int n = nd(rng);
    FieldElement an = a.pow(n);
    if (an == one) continue;
    RealBall hn = global_height(AbcPoint::from_ratio(an)).total(128);
    RealBall nb = RealBall::from_integer(n, 128), db = RealBall::from_integer(d, 128);
    CHECK(less_equal(hn, nb * h1 + db * log2) == std::optional<bool>(true));
    CHECK(less_equal(nb * h1 - db * nb * log2, hn) == std::optional<bool>(true));
    // radical bound: r <= 3[K:Q] + 3 h.
    RealBall r = global_radical(AbcPoint::from_ratio(a)).total(128);
    CHECK(less_equal(r, RealBall::from_integer(3 * d, 128) + RealBall::from_integer(3, 128) * h1) ==
          std::optional<bool>(true));
  }
}

TEST_CASE("pulled-back divisors") {
  RationalMap f = RationalMap::polynomial(Poly::from_integers({0, 4, -4}));
  DivisorSpec D = DivisorSpec::pullback(f);
  CHECK(D.degree() == 6);
  CHECK(D.reduced().degree() == 4);
  FieldPtr Q = NumberField::rationals();
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rational x(Integer(num(rng)), Integer(den(rng)));
    x.canonicalize();
    if (x == 0 || x == 1 || x == Rational(1, 2)) continue;
    FieldElement e = FieldElement::rational(Q, x);
    HeightValue rd = radical_wrt_divisor(e, D), rr = radical_wrt_divisor(e, D.reduced());
    CHECK(rd.finite() == rr.finite());
    // r_D <= deg D' + deg D' h(x : 1-x : 1)
    RealBall h = absolute_height(AbcPoint::from_ratio(e));
    RealBall degr = RealBall::from_integer(D.reduced().degree(), 128);
    CHECK(less_equal(rd.total(128), degr + degr * h) == std::optional<bool>(true));
    ++checked;
  }
  CHECK(checked > 80);
}
