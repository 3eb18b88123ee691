#include "abckit/rational_map.hpp"

#include "abckit/errors.hpp"
#include "abckit/factor.hpp"

namespace abckit {

std::string to_string(const ProjRational& x) { return x ? to_string(*x) : std::string("inf"); }

RationalMap::RationalMap(Poly num, Poly den) {
  if (den.is_zero()) throw InvalidInput("rational map with zero denominator");
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  Rational lc = den.leading();
  num_ = num * (1 / lc);
  den_ = den * (1 / lc);
}

RationalMap RationalMap::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a * d - b * c == 0) throw InvalidInput("degenerate Moebius transformation");
  return RationalMap(Poly(std::vector<Rational>{b, a}), Poly(std::vector<Rational>{d, c}));
}

RationalMap RationalMap::compose(const RationalMap& g) const {
  int n = degree();
  std::vector<Poly> ppow{Poly::constant(1)}, qpow{Poly::constant(1)};
  for (int i = 1; i <= n; ++i) {
    ppow.push_back(ppow.back() * g.num_);
    qpow.push_back(qpow.back() * g.den_);
  }
  auto homog = [&](const Poly& h) {
    Poly acc;
    for (int i = 0; i <= h.degree(); ++i) {
      const Rational& c = h.coeffs()[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      acc += ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(n - i)] * c;
    }
    return acc;
  };
  return RationalMap(homog(num_), homog(den_));
}

ProjRational RationalMap::eval(const ProjRational& x) const {
  if (!x) {
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return std::nullopt;
    if (dn < dd) return Rational(0);
    return num_.leading() / den_.leading();
  }
  Rational d = den_.eval(*x);
  if (d == 0) return std::nullopt;
  return num_.eval(*x) / d;
}

FieldElement RationalMap::eval(const FieldElement& x) const {
  auto horner = [&](const Poly& p) {
    FieldElement acc = FieldElement::rational(x.field(), 0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
      acc = acc * x + FieldElement::rational(x.field(), *it);
    return acc;
  };
  FieldElement d = horner(den_);
  if (d.is_zero()) throw DomainError("evaluation at a pole");
  return horner(num_) / d;
}

Poly RationalMap::critical_numerator() const { return num_.derivative() * den_ - num_ * den_.derivative(); }

std::string RationalMap::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

std::vector<FiberPoint> fiber(const RationalMap& f, const ProjRational& t) {
  Poly eq;
  int inf_mult = 0;
  int dn = f.num().degree(), dd = f.den().degree();
  if (!t) {
    eq = f.den();
    if (dn > dd) inf_mult = dn - dd;
  } else {
    eq = f.num() - f.den() * *t;
    int de = eq.degree();
    if (std::max(dn, dd) > de) inf_mult = std::max(dn, dd) - de;
  }
  std::vector<FiberPoint> out;
  if (eq.degree() > 0)
    for (auto& [g, m] : factor_over_Q(eq)) out.push_back({g, m});
  if (inf_mult > 0) out.push_back({std::nullopt, inf_mult});
  return out;
}

}  // namespace abckit
