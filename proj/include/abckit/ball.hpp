#pragma once

#include "abckit/integer.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace abckit {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

 private:
  mpfr_t value_;
};

/// Midpoint-radius enclosure of a real number. The exact value always lies in
/// [center - radius, center + radius]; every operation widens the radius by the
/// rounding error it commits.
class RealBall {
 public:
  explicit RealBall(int prec = 128);

  static RealBall from_integer(const Integer& n, int prec);
  static RealBall from_rational(const Rational& q, int prec);
  static RealBall from_double(double x, int prec);
  /// Enclosure of [lo, hi]; requires lo <= hi.
  static RealBall from_endpoints(const BigFloat& lo, const BigFloat& hi, int prec);
  static RealBall pi(int prec);

  int precision() const noexcept { return prec_; }
  const BigFloat& center() const noexcept { return center_; }
  const BigFloat& radius() const noexcept { return radius_; }

  BigFloat lower() const;
  BigFloat upper() const;
  double mid() const { return center_.to_double(); }
  /// Radius rounded up to a double.
  double rad() const { return radius_.to_double(MPFR_RNDU); }

  bool is_exact() const { return mpfr_zero_p(radius_.get()) != 0; }
  bool contains_zero() const;
  bool is_positive() const;
  bool is_negative() const;
  bool contains(const Rational& q) const;
  /// True if the other ball lies inside this one.
  bool contains(const RealBall& other) const;

  RealBall operator-() const;
  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  RealBall& operator+=(const RealBall& b) { return *this = *this + b; }
  RealBall& operator-=(const RealBall& b) { return *this = *this - b; }
  RealBall& operator*=(const RealBall& b) { return *this = *this * b; }

  /// "center±radius" with the given number of significant digits.
  std::string to_string(int digits = 17) const;

 private:
  int prec_;
  BigFloat center_;
  BigFloat radius_;

  friend RealBall make_ball(BigFloat center, int ternary, BigFloat radius, int prec);
};

RealBall abs(const RealBall& x);
RealBall sqr(const RealBall& x);
/// Square root of a quantity known to be nonnegative; negative parts of the
/// enclosure are clipped.
RealBall sqrt_nonneg(const RealBall& x);
RealBall sqrt(const RealBall& x);
RealBall log(const RealBall& x);
RealBall exp(const RealBall& x);
RealBall max(const RealBall& a, const RealBall& b);
RealBall min(const RealBall& a, const RealBall& b);
RealBall pow(const RealBall& x, unsigned long n);
/// x * 2^k, exact.
RealBall mul_2si(const RealBall& x, long k);
/// Smallest ball containing both.
RealBall hull(const RealBall& a, const RealBall& b);

/// Certified comparisons; nullopt means the enclosures overlap.
std::optional<bool> less(const RealBall& a, const RealBall& b);
std::optional<bool> less_equal(const RealBall& a, const RealBall& b);

class ComplexBall {
 public:
  explicit ComplexBall(int prec = 128) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexBall from_rational(const Rational& re, int prec);

  const RealBall& real() const noexcept { return re_; }
  const RealBall& imag() const noexcept { return im_; }
  int precision() const noexcept { return re_.precision(); }
  bool is_real() const { return im_.is_exact() && mpfr_zero_p(im_.center().get()); }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

  ComplexBall operator-() const { return {-re_, -im_}; }
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

  std::string to_string(int digits = 17) const;

 private:
  RealBall re_;
  RealBall im_;
};

ComplexBall conj(const ComplexBall& z);
RealBall abs2(const ComplexBall& z);
RealBall abs(const ComplexBall& z);
/// log|z| for z certainly nonzero.
RealBall log_abs(const ComplexBall& z);
ComplexBall pow(const ComplexBall& z, unsigned long n);
ComplexBall pow(const ComplexBall& z, const Integer& n);

}  // namespace abckit
