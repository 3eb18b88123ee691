#pragma once

#include "abckit/numfield.hpp"
#include "abckit/poly.hpp"

#include <optional>
#include <vector>

namespace abckit {

/// Point of P^1(Q); nullopt is infinity.
using ProjRational = std::optional<Rational>;

std::string to_string(const ProjRational& x);

/// Quotient N/D of coprime polynomials over Q, a cover P^1 -> P^1.
/// Normalized so that D is monic.
class RationalMap {
 public:
  RationalMap() : num_(Poly::x()), den_(Poly::constant(1)) {}
  RationalMap(Poly num, Poly den);

  static RationalMap identity() { return {}; }
  static RationalMap polynomial(Poly p) { return RationalMap(std::move(p), Poly::constant(1)); }
  /// (a z + b) / (c z + d); requires ad - bc != 0.
  static RationalMap mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// this o g
  RationalMap compose(const RationalMap& g) const;
  ProjRational eval(const ProjRational& x) const;
  /// f(x) for x in a number field; throws DomainError at a pole.
  FieldElement eval(const FieldElement& x) const;

  /// N' D - N D', whose roots are the finite critical points.
  Poly critical_numerator() const;

  std::string to_string(const std::string& var = "z") const;

  friend bool operator==(const RationalMap& f, const RationalMap& g) { return f.num_ == g.num_ && f.den_ == g.den_; }

 private:
  Poly num_;
  Poly den_;
};

/// One point of a fiber f^{-1}(t): either the Galois orbit of roots of an
/// irreducible monic polynomial, or infinity (orbit empty).
struct FiberPoint {
  std::optional<Poly> orbit;
  int multiplicity = 1;
  int point_count() const { return orbit ? orbit->degree() : 1; }
};

/// Points of f^{-1}(t) with ramification indices; t in P^1(Q).
std::vector<FiberPoint> fiber(const RationalMap& f, const ProjRational& t);

}  // namespace abckit
