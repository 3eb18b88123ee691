#include "abckit/restricted.hpp"

#include <sstream>

namespace abckit {

TripodNeighborhood::TripodNeighborhood(std::vector<NonarchEntry> nonarch, std::vector<ArchEntry> arch)
    : nonarch_(std::move(nonarch)), arch_(std::move(arch)) {
  for (const auto& e : nonarch_) {
    if (!is_prime(e.p)) throw InvalidInput("neighborhood: " + abckit::to_string(e.p) + " is not prime");
    if (e.g < 1) throw InvalidInput("neighborhood: g must be a positive integer");
    // Over F_2 every 2-adic unit x has v(1 - x) >= 1, so g = 1 leaves nothing outside.
    if (e.p == 2 && e.g < 2) throw InvalidInput("neighborhood: g must be at least 2 at p = 2");
  }
  for (const auto& e : arch_)
    if (e.g <= 0) throw InvalidInput("neighborhood: archimedean g must be positive");
}

namespace {

Decision inside_from(const Rational& vx, const Rational& v1x, int g) {
  return (vx >= g || vx <= -g || v1x >= g) ? Decision::Holds : Decision::Fails;
}

Rational normalized_valuation(const PrimeIdeal& P, const FieldElement& x) {
  std::int64_t v = valuation(P, x);
  if (v == kInfiniteValuation) return Rational(Integer(1) << 62);
  return Rational(Integer(static_cast<long>(v)), Integer(P.e));
}

}  // namespace

Decision in_neighborhood(const FieldElement& x, const PrimeIdeal& P, int g) {
  FieldElement one = FieldElement::rational(x.field(), 1);
  return inside_from(normalized_valuation(P, x), normalized_valuation(P, one - x), g);
}

Decision in_neighborhood(const Rational& x, const Integer& p, int g) {
  auto v = [&](const Rational& q) {
    return q == 0 ? Rational(Integer(1) << 62) : Rational(Integer(static_cast<long>(valuation(q, p))));
  };
  return inside_from(v(x), v(1 - x), g);
}

Decision in_neighborhood(const ComplexBall& x, const RealBall& g) {
  int prec = x.precision();
  RealBall small = exp(-g), big = exp(g);
  RealBall ax = abs(x), a1 = abs(ComplexBall::from_rational(1, prec) - x);
  std::optional<bool> c[] = {less_equal(ax, small), less_equal(big, ax), less_equal(a1, small)};
  bool unknown = false;
  for (const auto& b : c) {
    if (b && *b) return Decision::Holds;
    if (!b) unknown = true;
  }
  return unknown ? Decision::Undecided : Decision::Fails;
}

RestrictedReport restricted_hypothesis(const AbcPoint& P, const TripodNeighborhood& G, const HeightOptions& opts) {
  RestrictedReport rep;
  if (G.empty()) return rep;
  if (P.on_tripod()) {
    rep.qualifies = Decision::Fails;
    rep.evidence.push_back({"all", Decision::Holds, "point lies on the tripod"});
    if (P.a.is_rational() && P.b.is_rational() && P.c.is_rational()) rep.intro_form = false;
    return rep;
  }
  FieldElement x = P.ratio();
  const FieldPtr& K = x.field();
  bool undecided = false;

  for (const auto& e : G.nonarch()) {
    for (const auto& Pr : K->split_prime(e.p)) {
      FieldElement one = FieldElement::rational(K, 1);
      Rational vx = normalized_valuation(Pr, x), v1 = normalized_valuation(Pr, one - x);
      Decision d = inside_from(vx, v1, e.g);
      std::ostringstream os;
      os << "v(x)=" << abckit::to_string(vx) << " v(1-x)=" << abckit::to_string(v1) << " g=" << e.g;
      rep.evidence.push_back({Pr.to_string(), d, os.str()});
      if (d == Decision::Holds) rep.qualifies = Decision::Fails;
    }
  }

  for (const auto& e : G.arch()) {
    std::vector<std::size_t> idx;
    if (e.embedding) {
      if (*e.embedding >= static_cast<std::size_t>(K->degree())) throw InvalidInput("embedding index out of range");
      idx.push_back(*e.embedding);
    } else {
      for (std::size_t k = 0; k < static_cast<std::size_t>(K->degree()); ++k) idx.push_back(k);
    }
    for (std::size_t k : idx) {
      Decision d = Decision::Undecided;
      ComplexBall z(opts.precision);
      for (int prec = opts.precision; d == Decision::Undecided && prec <= opts.max_precision; prec *= 2) {
        z = x.embed(k, prec);
        d = in_neighborhood(z, RealBall::from_rational(e.g, prec));
      }
      rep.evidence.push_back({"iota" + std::to_string(k), d,
                              "x=" + z.to_string(12) + " g=" + abckit::to_string(e.g)});
      if (d == Decision::Holds) rep.qualifies = Decision::Fails;
      if (d == Decision::Undecided) undecided = true;
    }
  }
  if (undecided && rep.qualifies != Decision::Fails) rep.qualifies = Decision::Undecided;

  if (P.a.is_rational() && P.b.is_rational() && P.c.is_rational()) {
    Rational a = P.a.rational_value(), b = P.b.rational_value(), c = P.c.rational_value();
    Integer l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
    Integer A = Integer(a * l), B = Integer(b * l), C = Integer(c * l);
    Integer g = gcd(gcd(A, B), C);
    Integer prod = (A / g) * (B / g) * (C / g);
    bool ok = true;
    for (const auto& e : G.nonarch())
      if (valuation(prod, e.p) > e.g - 1) ok = false;
    rep.intro_form = ok;
  }
  return rep;
}

FermatParams fermat_params(const Rational& eps) {
  if (eps <= 0) throw InvalidInput("fermat_params: eps must be positive");
  FermatParams f;
  f.eps = eps;
  f.n = ceil(Rational(3) + Rational(6) / eps).get_si();
  if (eps < 1 && f.n < 9) f.n = 9;
  f.degree = f.n * f.n;
  f.two_g_minus_2 = f.n * (f.n - 3);
  f.genus = (f.n - 1) * (f.n - 2) / 2;
  f.deg_reduced = 3 * f.n;
  return f;
}

CanonicalDegreeReport canonical_degree_check(const RationalMap& f) {
  CanonicalDegreeReport rep;
  rep.degree = f.degree();
  for (const ProjRational& t : {ProjRational(Rational(0)), ProjRational(Rational(1)), ProjRational()})
    for (const auto& pt : fiber(f, t)) rep.preimage_points += pt.point_count();
  rep.two_g_minus_2 = rep.degree - rep.preimage_points;
  return rep;
}

}  // namespace abckit
