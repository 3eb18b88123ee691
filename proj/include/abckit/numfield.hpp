#pragma once

#include "abckit/ball.hpp"
#include "abckit/factor.hpp"
#include "abckit/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace abckit {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Prime ideal of the equation order above a rational prime p.
struct PrimeIdeal {
  Integer p;
  int e = 1;
  int f = 1;
  int label = 0;
  /// Local factor of the integral model of the defining polynomial (see
  /// NumberField::integral_model), known modulo p^precision.
  ZPoly local_factor;
  unsigned long precision = 0;

  Integer norm() const { return ipow(p, static_cast<unsigned long>(f)); }
  std::string to_string() const;
};

/// Element of a number field in power-basis coordinates.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  static FieldElement rational(FieldPtr field, const Rational& q);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidInput unless is_rational().
  Rational rational_value() const;
  Poly as_poly() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  FieldElement inverse() const;
  FieldElement pow(long n) const;
  FieldElement pow(const Integer& n) const;

  /// N_{K/Q}(a).
  Rational norm() const;
  /// Image under the k-th complex embedding.
  ComplexBall embed(std::size_t k, int precision) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// min_poly must be irreducible over Q; it is made monic.
  static FieldPtr create(const Poly& min_poly, std::optional<Integer> disc_override = std::nullopt);
  /// Q presented as Q[x]/(x).
  static FieldPtr rationals();

  int degree() const noexcept { return min_poly_.degree(); }
  const Poly& min_poly() const noexcept { return min_poly_; }
  /// s such that s*theta is a root of the monic integer polynomial integral_model().
  const Integer& scale() const noexcept { return scale_; }
  const ZPoly& integral_model() const noexcept { return model_; }
  /// Discriminant of the integral model.
  const Integer& poly_disc() const noexcept { return poly_disc_; }
  const std::optional<Integer>& disc_override() const noexcept { return disc_override_; }
  int r1() const noexcept { return r1_; }
  int r2() const noexcept { return (degree() - r1_) / 2; }

  /// Images of theta under the d embeddings: real ones first, then
  /// conjugate pairs (positive imaginary part first). Cached per precision.
  std::vector<ComplexBall> embeddings(int precision) const;

  /// Primes above p, sorted by label. Cached.
  std::vector<PrimeIdeal> split_prime(const Integer& p) const;
  /// Same, with local factors known to at least `digits` p-adic digits.
  std::vector<PrimeIdeal> split_prime(const Integer& p, unsigned long digits) const;

  Integer field_discriminant() const;

  bool same_as(const NumberField& other) const { return min_poly_ == other.min_poly_; }

 private:
  NumberField() = default;

  Poly min_poly_;
  Integer scale_ = 1;
  ZPoly model_;
  Integer poly_disc_;
  std::optional<Integer> disc_override_;
  int r1_ = 0;

  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<ComplexBall>> embedding_cache_;
  mutable std::map<Integer, std::vector<PrimeIdeal>> split_cache_;
  mutable std::optional<Integer> field_disc_cache_;
};

/// Starting p-adic precision for splittings.
inline constexpr unsigned long kBasePadicDigits = 32;

/// v_P(a); kInfiniteValuation for a = 0.
std::int64_t valuation(const PrimeIdeal& P, const FieldElement& a);

/// Minimal polynomial over Q (monic).
Poly min_poly_of(const FieldElement& a);

/// Rational primes p for which some prime above p may have v_P(a) != 0.
std::vector<Integer> support_primes(const FieldElement& a);

/// Rational primes below which every listed element may have a common
/// nonzero valuation: denominators and the gcd of the norms.
std::vector<Integer> common_support_primes(const std::vector<FieldElement>& elems);

}  // namespace abckit
