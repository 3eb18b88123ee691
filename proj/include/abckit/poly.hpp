#pragma once

#include "abckit/ball.hpp"
#include "abckit/integer.hpp"

#include <tuple>
#include <utility>
#include <vector>

namespace abckit {

/// Dense univariate polynomial over Q, constant term first. The zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  static Poly x() { return monomial(1, 1); }
  /// x - r
  static Poly linear_root(const Rational& r);
  static Poly from_integers(const std::vector<long>& coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Poly monic() const;
  /// Positive rational c with f/c a primitive integer polynomial.
  Rational content() const;
  /// f / content, sign adjusted so the leading coefficient is positive.
  Poly primitive() const;
  /// Integer coefficients of primitive().
  std::vector<Integer> primitive_integer_coeffs() const;
  /// True when every coefficient is an integer.
  bool is_integral() const;

  Rational eval(const Rational& x) const;
  RealBall eval(const RealBall& x) const;
  ComplexBall eval(const ComplexBall& x) const;

  Poly derivative() const;
  /// f(g(x))
  Poly compose(const Poly& g) const;
  /// x^deg f(1/x)
  Poly reversed() const;
  /// f(c x)
  Poly scaled(const Rational& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Rational& c) { return f *= c; }
  friend Poly operator*(const Rational& c, Poly f) { return f *= c; }
  friend Poly operator/(const Poly& f, const Poly& g);
  friend Poly operator%(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_; }
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  /// Orders by degree, then by coefficients from the leading one down.
  friend bool operator<(const Poly& f, const Poly& g);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);
/// Extended gcd: returns (g, s, t) with s f + t h = g, g monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& f, const Poly& h);
Poly pow(const Poly& f, unsigned n);

Rational resultant(const Poly& f, const Poly& g);
Rational discriminant(const Poly& f);

/// Yun's algorithm: f = c * prod g_i^{m_i} with g_i monic, squarefree and
/// pairwise coprime. Multiplicities ascend.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);
/// Monic squarefree part.
Poly squarefree_part(const Poly& f);

/// One edge of a Newton polygon. Every one of the `length` roots attached to
/// the edge has p-adic valuation `slope`.
struct NewtonSegment {
  Rational slope;
  int length;
};

/// Newton polygon of f at p, as root valuations in ascending order.
/// Roots at zero (f(0) = 0) are omitted; their count is `zero_roots`.
std::vector<NewtonSegment> newton_polygon(const Poly& f, const Integer& p, int* zero_roots = nullptr);

}  // namespace abckit
