#include "abckit/ellenberg.hpp"

#include <sstream>

namespace abckit {

namespace {

constexpr long kMaxArchScan = 10'000'000;

}  // namespace

ArithmeticDivisor& ArithmeticDivisor::add_finite(const Integer& p, int D, int label) {
  for (const auto& P : field_->split_prime(p))
    if (P.label == label) return add_finite(P, D);
  throw InvalidInput("no prime with label " + std::to_string(label) + " above " + abckit::to_string(p));
}

ArithmeticDivisor& ArithmeticDivisor::add_finite(const PrimeIdeal& P, int D) {
  if (D < 1) throw InvalidInput("arithmetic divisor coefficients must be positive");
  for (const auto& c : finite_)
    if (c.prime.p == P.p && c.prime.label == P.label) throw InvalidInput("prime listed twice: " + P.to_string());
  finite_.push_back({P, D});
  return *this;
}

ArithmeticDivisor& ArithmeticDivisor::set_arch(std::size_t embedding, const Rational& D) {
  if (D <= 0) throw InvalidInput("arithmetic divisor coefficients must be positive");
  if (embedding >= static_cast<std::size_t>(field_->degree()))
    throw InvalidInput("embedding index out of range");
  arch_ = ArchCondition{embedding, D};
  return *this;
}

std::string ArithmeticDivisor::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : finite_) {
    os << (first ? "" : " + ") << c.D << "*" << c.prime.to_string();
    first = false;
  }
  if (arch_) os << (first ? "" : " + ") << abckit::to_string(arch_->D) << "*iota" << arch_->embedding;
  if (first && !arch_) os << "0";
  return os.str();
}

Integer compute_n0(const ArithmeticDivisor& D) {
  Integer n0 = 1;
  for (const auto& c : D.finite())
    n0 *= (c.prime.norm() - 1) * ipow(c.prime.p, static_cast<unsigned long>(c.D - 1));
  return n0;
}

RealBall compute_C(const ArithmeticDivisor& D, int precision) {
  RealBall n0 = RealBall::from_integer(compute_n0(D), precision);
  if (!D.arch()) return n0;
  RealBall d = RealBall::from_rational(D.arch()->D, precision);
  RealBall factor = RealBall::from_integer(32, precision) * RealBall::pi(precision) * d *
                        exp(RealBall::from_integer(2, precision) * d) +
                    RealBall::from_integer(1, precision);
  return factor * n0;
}

std::optional<ArchSearchResult> arch_exponent_search(const ComplexBall& a, const RealBall& d) {
  int prec = a.precision();
  RealBall pi = RealBall::pi(prec);
  RealBall bound = max(RealBall::from_integer(8, prec) * pi * exp(d),
                       RealBall::from_integer(32, prec) * pi * d * exp(RealBall::from_integer(2, prec) * d) +
                           RealBall::from_integer(1, prec));
  double limit_d = bound.upper().to_double(MPFR_RNDU) + 1;
  std::optional<RealBall> absL;
  try {
    absL = abs(log_abs(a));
  } catch (const PrecisionExhausted&) {
  }
  if (absL && absL->is_positive()) {
    // Past d / |log|a|| the divergence branch is certain.
    double m_div = d.upper().to_double(MPFR_RNDU) / absL->lower().to_double(MPFR_RNDD) + 2;
    if (m_div < limit_d) limit_d = m_div;
  }
  if (limit_d > static_cast<double>(kMaxArchScan))
    throw DegreeCapExceeded("archimedean exponent search range exceeds " + std::to_string(kMaxArchScan));
  long limit = static_cast<long>(limit_d);
  RealBall target = exp(-d);
  ComplexBall power = a;
  bool undecided = false;
  for (long m = 1; m <= limit; ++m) {
    if (m > 1) power = power * a;
    RealBall dist = abs(power - ComplexBall::from_rational(1, prec));
    auto c = less_equal(dist, target);
    if (c && *c) return ArchSearchResult{m, ArchBranch::Contraction, dist, !undecided};
    if (absL) {
      RealBall grow = RealBall::from_integer(m, prec) * *absL;
      auto g = less_equal(d, grow);
      if (g && *g) return ArchSearchResult{m, ArchBranch::Divergence, grow, !undecided};
      if (!g) undecided = true;
    } else {
      undecided = true;
    }
    if (!c) undecided = true;
  }
  if (undecided) return std::nullopt;
  throw InternalError("no archimedean exponent below the guaranteed bound");
}

std::string to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::ValA: return "A";
    case ConditionKind::ValInvA: return "1/A";
    case ConditionKind::ValOneMinusA: return "1-A";
  }
  return "?";
}

namespace {

std::optional<ArchCertificate> certify_arch(const ComplexBall& z, const ArchCondition& cond, int prec) {
  RealBall D = RealBall::from_rational(cond.D, prec);
  ArchCertificate cert;
  cert.embedding = cond.embedding;
  cert.D = cond.D;
  cert.precision = prec;
  try {
    RealBall l = log_abs(z);
    if (less_equal(D, -l).value_or(false)) {
      cert.kind = ConditionKind::ValA;
      cert.value = -l;
      return cert;
    }
    if (less_equal(D, l).value_or(false)) {
      cert.kind = ConditionKind::ValInvA;
      cert.value = l;
      return cert;
    }
  } catch (const PrecisionExhausted&) {
  }
  try {
    RealBall l1 = -log_abs(ComplexBall::from_rational(1, prec) - z);
    if (less_equal(D, l1).value_or(false)) {
      cert.kind = ConditionKind::ValOneMinusA;
      cert.value = l1;
      return cert;
    }
  } catch (const PrecisionExhausted&) {
  }
  return std::nullopt;
}

}  // namespace

TransformResult transform(const FieldElement& a, const ArithmeticDivisor& D, const HeightOptions& opts) {
  if (!a.field()->same_as(*D.field())) throw InvalidInput("transform: element and divisor live in different fields");
  FieldElement one = FieldElement::rational(a.field(), 1);
  if (a.is_zero() || a == one) throw InvalidInput("transform: a must not be 0 or 1");

  TransformResult res;
  res.n0 = compute_n0(D);
  res.n = res.n0;
  res.bound_C = compute_C(D, opts.precision);

  if (const auto& arch = D.arch()) {
    bool done = false;
    for (int prec = opts.precision; !done && prec <= opts.max_precision; prec *= 2) {
      ComplexBall ia = a.embed(arch->embedding, prec);
      ComplexBall b = pow(ia, res.n0);
      auto found = arch_exponent_search(b, RealBall::from_rational(arch->D, prec));
      if (!found || (!found->minimal && prec * 2 <= opts.max_precision)) continue;
      Integer n = res.n0 * found->m;
      auto cert = certify_arch(pow(ia, n), *arch, prec);
      if (!cert) continue;
      cert->branch = found->branch;
      cert->m = found->m;
      res.n = n;
      res.arch = cert;
      done = true;
    }
    if (!done) throw UndecidableComparison("archimedean condition undecided at max precision");
  }

  res.A = a.pow(res.n);
  if (res.A == one) throw DegenerateTransform("A = a^" + abckit::to_string(res.n) + " = 1, so 1-A = 0");
  if (res.A.is_zero()) throw DegenerateTransform("A = 0");
  FieldElement oneMinus = one - res.A;
  for (const auto& c : D.finite()) {
    FiniteCertificate fc{c.prime, c.D, ConditionKind::ValA, 0};
    std::int64_t vA = valuation(c.prime, res.A);
    if (vA >= c.D) {
      fc.value = vA;
    } else if (-vA >= c.D) {
      fc.kind = ConditionKind::ValInvA;
      fc.value = -vA;
    } else {
      fc.kind = ConditionKind::ValOneMinusA;
      fc.value = valuation(c.prime, oneMinus);
      if (fc.value < c.D)
        throw VerificationFailed("finite condition fails at " + c.prime.to_string() + " for n = " +
                                 abckit::to_string(res.n));
    }
    res.finite.push_back(fc);
  }
  return res;
}

}  // namespace abckit
