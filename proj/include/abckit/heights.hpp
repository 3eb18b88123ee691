#pragma once

#include "abckit/ball.hpp"
#include "abckit/errors.hpp"
#include "abckit/numfield.hpp"
#include "abckit/rational_map.hpp"

#include <map>
#include <string>

namespace abckit {

struct HeightOptions {
  int precision = 128;
  int max_precision = 1024;
  /// Spherical archimedean contribution log sqrt(|a|^2+|b|^2+|c|^2).
  bool spherical = false;
  /// Treat the radical of the sixth-roots-of-unity point as 0.
  bool radical_exception = false;
};

/// Projective point (a : b : c) with a + b = c.
struct AbcPoint {
  FieldElement a, b, c;

  /// Validates a + b = c and that some coordinate is nonzero.
  static AbcPoint make(FieldElement a, FieldElement b, FieldElement c);
  static AbcPoint rational(const Integer& a, const Integer& b, const Integer& c);
  /// (x : 1 - x : 1)
  static AbcPoint from_ratio(const FieldElement& x);

  const FieldPtr& field() const { return a.field(); }
  /// a / c; throws DomainError when c = 0.
  FieldElement ratio() const;
  AbcPoint scaled(const FieldElement& x) const;
  /// The same point with coordinates viewed in K, which must contain them
  /// (only rational points can be moved between fields).
  AbcPoint in_field(const FieldPtr& K) const;
  bool on_tripod() const { return a.is_zero() || b.is_zero() || c.is_zero(); }
  std::string to_string() const;
};

/// Exact combination sum_p q_p log p + constant, plus an enclosed
/// archimedean part.
class HeightValue {
 public:
  HeightValue() : arch_(RealBall(64)) {}
  explicit HeightValue(int precision) : arch_(precision) {}

  std::map<Integer, Rational>& finite() { return finite_; }
  const std::map<Integer, Rational>& finite() const { return finite_; }
  Rational& constant() { return constant_; }
  const Rational& constant() const { return constant_; }
  RealBall& arch() { return arch_; }
  const RealBall& arch() const { return arch_; }

  void add_log(const Integer& p, const Rational& q);
  HeightValue scaled(const Rational& q) const;
  HeightValue& operator+=(const HeightValue& other);

  RealBall finite_ball(int precision) const;
  RealBall total(int precision) const;
  /// "log(2^3·5)", with rational exponents written as 2^(1/2).
  std::string finite_string() const;
  std::string to_string(int precision = 128) const;

 private:
  std::map<Integer, Rational> finite_;
  Rational constant_ = 0;
  RealBall arch_;
};

HeightValue global_height(const AbcPoint& P, const HeightOptions& opts = {});
/// h_K of (x_0 : ... : x_n); zero coordinates are allowed, not all of them.
HeightValue projective_height(const std::vector<FieldElement>& point, const HeightOptions& opts = {});
HeightValue global_radical(const AbcPoint& P, const HeightOptions& opts = {});

/// Minimal field of definition F = Q(a/c) with the generator's image x.
struct MinimalField {
  FieldPtr field;
  FieldElement x;
};
MinimalField minimal_field(const AbcPoint& P);

HeightValue absolute_height_value(const AbcPoint& P, const HeightOptions& opts = {});
HeightValue absolute_radical_value(const AbcPoint& P, const HeightOptions& opts = {});
RealBall absolute_height(const AbcPoint& P, const HeightOptions& opts = {});
RealBall absolute_radical(const AbcPoint& P, const HeightOptions& opts = {});
/// log|disc F| / [F:Q] for the minimal field F.
RealBall log_different(const AbcPoint& P, const HeightOptions& opts = {});
HeightValue log_different_value(const AbcPoint& P);

/// Cartier-style description of a divisor on P^1 by local equations. A point
/// x is close to the divisor at v when v(eq(x)) > 0 for some equation.
struct DivisorEquation {
  /// Irreducible polynomial of the orbit, or nullopt for the point infinity
  /// (equation 1/x).
  std::optional<Poly> orbit;
  int multiplicity = 1;
};

class DivisorSpec {
 public:
  DivisorSpec() = default;
  explicit DivisorSpec(std::vector<DivisorEquation> eqs) : eqs_(std::move(eqs)) {}

  /// x = 0, x = 1, 1/x = 0.
  static DivisorSpec tripod();
  /// f^* of the tripod, with ramification multiplicities.
  static DivisorSpec pullback(const RationalMap& f);

  const std::vector<DivisorEquation>& equations() const noexcept { return eqs_; }
  DivisorSpec reduced() const;
  /// Sum of multiplicity times orbit size.
  int degree() const;

 private:
  std::vector<DivisorEquation> eqs_;
};

/// r_D(x) = (1/[F:Q]) sum over places v of F = Q(x) close to D of log N(P_v);
/// each place counted once.
HeightValue radical_wrt_divisor(const FieldElement& x, const DivisorSpec& spec);

/// Runs decide(prec) at doubling precisions until it returns a value.
/// Returns nullopt when still undecided at max_precision.
template <class F>
std::optional<bool> decide_with_escalation(const HeightOptions& opts, F&& decide) {
  for (int prec = opts.precision; prec <= opts.max_precision; prec *= 2) {
    try {
      if (auto r = decide(prec)) return r;
    } catch (const PrecisionExhausted&) {
    }
  }
  return std::nullopt;
}

}  // namespace abckit
