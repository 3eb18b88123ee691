#include "abckit/ball.hpp"

#include "abckit/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace abckit {

namespace {

constexpr mpfr_prec_t kRadiusPrec = 64;
constexpr int kGuardBits = 16;

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

// Adds a bound on the rounding error of `center` to `radius` when the
// operation producing center was inexact.
static void add_rounding_error(BigFloat& radius, const BigFloat& center, int ternary) {
  if (ternary == 0 || !mpfr_regular_p(center.get())) return;
  BigFloat ulp(kRadiusPrec);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(center.get()) - mpfr_get_prec(center.get()),
                   MPFR_RNDU);
  mpfr_add(radius.get(), radius.get(), ulp.get(), MPFR_RNDU);
}

RealBall make_ball(BigFloat center, int ternary, BigFloat radius, int prec) {
  RealBall b(prec);
  add_rounding_error(radius, center, ternary);
  b.center_ = std::move(center);
  b.radius_ = std::move(radius);
  return b;
}

RealBall::RealBall(int prec) : prec_(prec), center_(prec), radius_(kRadiusPrec) {}

RealBall RealBall::from_integer(const Integer& n, int prec) {
  BigFloat c(prec);
  int t = mpfr_set_z(c.get(), n.get_mpz_t(), MPFR_RNDN);
  return make_ball(std::move(c), t, BigFloat(kRadiusPrec), prec);
}

RealBall RealBall::from_rational(const Rational& q, int prec) {
  BigFloat c(prec);
  int t = mpfr_set_q(c.get(), q.get_mpq_t(), MPFR_RNDN);
  return make_ball(std::move(c), t, BigFloat(kRadiusPrec), prec);
}

RealBall RealBall::from_double(double x, int prec) {
  BigFloat c(prec);
  int t = mpfr_set_d(c.get(), x, MPFR_RNDN);
  return make_ball(std::move(c), t, BigFloat(kRadiusPrec), prec);
}

RealBall RealBall::from_endpoints(const BigFloat& lo, const BigFloat& hi, int prec) {
  if (mpfr_nan_p(lo.get()) || mpfr_nan_p(hi.get()) || mpfr_inf_p(lo.get()) ||
      mpfr_inf_p(hi.get()))
    throw PrecisionExhausted("ball endpoint is not finite");
  BigFloat c(prec);
  BigFloat sum(std::max(lo.precision(), hi.precision()) + 2);
  mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);  // exact for the chosen precision
  mpfr_div_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  mpfr_set(c.get(), sum.get(), MPFR_RNDN);
  BigFloat r1(kRadiusPrec), r2(kRadiusPrec);
  mpfr_sub(r1.get(), c.get(), lo.get(), MPFR_RNDU);
  mpfr_sub(r2.get(), hi.get(), c.get(), MPFR_RNDU);
  mpfr_max(r1.get(), r1.get(), r2.get(), MPFR_RNDU);
  RealBall b(prec);
  b.center_ = std::move(c);
  b.radius_ = std::move(r1);
  return b;
}

RealBall RealBall::pi(int prec) {
  BigFloat lo(prec + kGuardBits), hi(prec + kGuardBits);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return from_endpoints(lo, hi, prec);
}

BigFloat RealBall::lower() const {
  BigFloat r(prec_ + kGuardBits);
  mpfr_sub(r.get(), center_.get(), radius_.get(), MPFR_RNDD);
  return r;
}

BigFloat RealBall::upper() const {
  BigFloat r(prec_ + kGuardBits);
  mpfr_add(r.get(), center_.get(), radius_.get(), MPFR_RNDU);
  return r;
}

bool RealBall::contains_zero() const {
  return mpfr_sgn(lower().get()) <= 0 && mpfr_sgn(upper().get()) >= 0;
}

bool RealBall::is_positive() const { return mpfr_sgn(lower().get()) > 0; }

bool RealBall::is_negative() const { return mpfr_sgn(upper().get()) < 0; }

bool RealBall::contains(const Rational& q) const {
  return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
}

bool RealBall::contains(const RealBall& other) const {
  return mpfr_cmp(lower().get(), other.lower().get()) <= 0 &&
         mpfr_cmp(upper().get(), other.upper().get()) >= 0;
}

RealBall RealBall::operator-() const {
  RealBall b = *this;
  mpfr_neg(b.center_.get(), b.center_.get(), MPFR_RNDN);
  return b;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  int prec = std::max(a.prec_, b.prec_);
  BigFloat c(prec), r(kRadiusPrec);
  int t = mpfr_add(c.get(), a.center_.get(), b.center_.get(), MPFR_RNDN);
  mpfr_add(r.get(), a.radius_.get(), b.radius_.get(), MPFR_RNDU);
  return make_ball(std::move(c), t, std::move(r), prec);
}

RealBall operator-(const RealBall& a, const RealBall& b) { return a + (-b); }

RealBall operator*(const RealBall& a, const RealBall& b) {
  int prec = std::max(a.prec_, b.prec_);
  BigFloat c(prec), r(kRadiusPrec), t1(kRadiusPrec), t2(kRadiusPrec);
  int t = mpfr_mul(c.get(), a.center_.get(), b.center_.get(), MPFR_RNDN);
  // |a.c| * b.r + |b.c| * a.r + a.r * b.r
  mpfr_abs(t1.get(), a.center_.get(), MPFR_RNDU);
  mpfr_mul(t1.get(), t1.get(), b.radius_.get(), MPFR_RNDU);
  mpfr_abs(t2.get(), b.center_.get(), MPFR_RNDU);
  mpfr_mul(t2.get(), t2.get(), a.radius_.get(), MPFR_RNDU);
  mpfr_add(r.get(), t1.get(), t2.get(), MPFR_RNDU);
  mpfr_mul(t1.get(), a.radius_.get(), b.radius_.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t1.get(), MPFR_RNDU);
  return make_ball(std::move(c), t, std::move(r), prec);
}

namespace {

// Image of a monotone function on the ball, evaluated at directed-rounded endpoints.
template <class F>
RealBall monotone_image(const RealBall& x, F&& f, bool increasing) {
  int prec = x.precision();
  BigFloat lo = x.lower(), hi = x.upper();
  BigFloat flo(prec + kGuardBits), fhi(prec + kGuardBits);
  if (increasing) {
    f(flo.get(), lo.get(), MPFR_RNDD);
    f(fhi.get(), hi.get(), MPFR_RNDU);
  } else {
    f(flo.get(), hi.get(), MPFR_RNDD);
    f(fhi.get(), lo.get(), MPFR_RNDU);
  }
  return RealBall::from_endpoints(flo, fhi, prec);
}

}  // namespace

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero()) throw PrecisionExhausted("division by a ball containing zero");
  RealBall inv = monotone_image(
      b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_ui_div(r, 1, x, rnd); }, false);
  return a * inv;
}

std::string RealBall::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, center_.get());
  std::string s(buf.data());
  char rbuf[64];
  std::snprintf(rbuf, sizeof rbuf, "%.2g", rad());
  return s + "±" + rbuf;
}

RealBall abs(const RealBall& x) {
  if (x.is_positive()) return x;
  if (x.is_negative()) return -x;
  BigFloat lo = x.lower(), hi = x.upper();
  mpfr_abs(lo.get(), lo.get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), lo.get(), MPFR_RNDU);
  BigFloat zero(hi.precision());
  return RealBall::from_endpoints(zero, hi, x.precision());
}

RealBall sqr(const RealBall& x) {
  RealBall a = abs(x);
  BigFloat lo = a.lower(), hi = a.upper();
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  BigFloat l2(lo.precision() * 2), h2(hi.precision() * 2);
  mpfr_sqr(l2.get(), lo.get(), MPFR_RNDD);
  mpfr_sqr(h2.get(), hi.get(), MPFR_RNDU);
  return RealBall::from_endpoints(l2, h2, x.precision());
}

RealBall sqrt_nonneg(const RealBall& x) {
  int prec = x.precision();
  BigFloat lo = x.lower(), hi = x.upper();
  if (mpfr_sgn(hi.get()) < 0) throw DomainError("sqrt of a negative enclosure");
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  BigFloat slo(prec + kGuardBits), shi(prec + kGuardBits);
  mpfr_sqrt(slo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(shi.get(), hi.get(), MPFR_RNDU);
  return RealBall::from_endpoints(slo, shi, prec);
}

RealBall sqrt(const RealBall& x) {
  if (mpfr_sgn(x.lower().get()) < 0) throw PrecisionExhausted("sqrt of a ball reaching below zero");
  return sqrt_nonneg(x);
}

RealBall log(const RealBall& x) {
  if (!x.is_positive()) throw PrecisionExhausted("log of a ball not certainly positive");
  return monotone_image(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_log(r, v, rnd); },
                        true);
}

RealBall exp(const RealBall& x) {
  return monotone_image(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_exp(r, v, rnd); },
                        true);
}

RealBall max(const RealBall& a, const RealBall& b) {
  int prec = std::max(a.precision(), b.precision());
  BigFloat lo = a.lower(), hi = a.upper();
  BigFloat lo2 = b.lower(), hi2 = b.upper();
  BigFloat l(prec + kGuardBits), h(prec + kGuardBits);
  mpfr_max(l.get(), lo.get(), lo2.get(), MPFR_RNDD);
  mpfr_max(h.get(), hi.get(), hi2.get(), MPFR_RNDU);
  return RealBall::from_endpoints(l, h, prec);
}

RealBall min(const RealBall& a, const RealBall& b) { return -max(-a, -b); }

RealBall hull(const RealBall& a, const RealBall& b) {
  int prec = std::max(a.precision(), b.precision());
  BigFloat l(prec + kGuardBits), h(prec + kGuardBits);
  mpfr_min(l.get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(h.get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return RealBall::from_endpoints(l, h, prec);
}

RealBall pow(const RealBall& x, unsigned long n) {
  RealBall result = RealBall::from_integer(1, x.precision());
  RealBall base = x;
  while (n > 0) {
    if (n & 1ul) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

RealBall mul_2si(const RealBall& x, long k) {
  BigFloat lo = x.lower(), hi = x.upper();
  mpfr_mul_2si(lo.get(), lo.get(), k, MPFR_RNDD);
  mpfr_mul_2si(hi.get(), hi.get(), k, MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi, x.precision());
}

std::optional<bool> less(const RealBall& a, const RealBall& b) {
  if (mpfr_cmp(a.upper().get(), b.lower().get()) < 0) return true;
  if (mpfr_cmp(a.lower().get(), b.upper().get()) >= 0) return false;
  return std::nullopt;
}

std::optional<bool> less_equal(const RealBall& a, const RealBall& b) {
  if (mpfr_cmp(a.upper().get(), b.lower().get()) <= 0) return true;
  if (mpfr_cmp(a.lower().get(), b.upper().get()) > 0) return false;
  return std::nullopt;
}

ComplexBall ComplexBall::from_rational(const Rational& re, int prec) {
  return {RealBall::from_rational(re, prec), RealBall(prec)};
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  RealBall d = abs2(b);
  ComplexBall n = a * conj(b);
  return {n.re_ / d, n.im_ / d};
}

std::string ComplexBall::to_string(int digits) const {
  return "(" + re_.to_string(digits) + ") + (" + im_.to_string(digits) + ")i";
}

ComplexBall conj(const ComplexBall& z) { return {z.real(), -z.imag()}; }

RealBall abs2(const ComplexBall& z) { return sqr(z.real()) + sqr(z.imag()); }

RealBall abs(const ComplexBall& z) {
  if (z.imag().is_exact() && mpfr_zero_p(z.imag().center().get())) return abs(z.real());
  return sqrt_nonneg(abs2(z));
}

RealBall log_abs(const ComplexBall& z) {
  RealBall a2 = abs2(z);
  if (!a2.is_positive()) throw PrecisionExhausted("log|z| of a ball containing zero");
  RealBall half = RealBall::from_rational(Rational(1, 2), z.precision());
  return half * log(a2);
}

ComplexBall pow(const ComplexBall& z, unsigned long n) {
  ComplexBall result = ComplexBall::from_rational(1, z.precision());
  ComplexBall base = z;
  while (n > 0) {
    if (n & 1ul) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ComplexBall pow(const ComplexBall& z, const Integer& n) {
  if (n < 0) throw InvalidInput("negative exponent");
  ComplexBall result = ComplexBall::from_rational(1, z.precision());
  ComplexBall base = z;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

}  // namespace abckit
