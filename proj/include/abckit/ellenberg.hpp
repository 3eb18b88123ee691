#pragma once

#include "abckit/heights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abckit {

struct FiniteCondition {
  PrimeIdeal prime;
  int D = 1;
};

struct ArchCondition {
  std::size_t embedding = 0;
  Rational D;
};

/// Positive arithmetic divisor with at most one archimedean coefficient.
class ArithmeticDivisor {
 public:
  explicit ArithmeticDivisor(FieldPtr field) : field_(std::move(field)) {}

  /// Adds D at the prime of the given label above p.
  ArithmeticDivisor& add_finite(const Integer& p, int D, int label = 0);
  ArithmeticDivisor& add_finite(const PrimeIdeal& P, int D);
  /// Replaces any previous archimedean coefficient.
  ArithmeticDivisor& set_arch(std::size_t embedding, const Rational& D);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<FiniteCondition>& finite() const noexcept { return finite_; }
  const std::optional<ArchCondition>& arch() const noexcept { return arch_; }
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<FiniteCondition> finite_;
  std::optional<ArchCondition> arch_;
};

Integer compute_n0(const ArithmeticDivisor& D);
/// (32 pi D_i e^{2 D_i} + 1) n0, or n0 without an archimedean part.
RealBall compute_C(const ArithmeticDivisor& D, int precision = 128);

enum class ArchBranch { Contraction, Divergence };

struct ArchSearchResult {
  long m = 0;
  ArchBranch branch = ArchBranch::Contraction;
  /// |a^m - 1| for contraction, |log|a^m|| for divergence.
  RealBall witness;
  /// False when a smaller exponent could not be decided at this precision.
  bool minimal = true;
};

/// Smallest m >= 1 with certified |a^m - 1| <= e^{-d} or |log|a^m|| >= d.
/// Scans up to max(8 pi e^d, 32 pi d e^{2d} + 1); returns nullopt when some
/// exponent in range could not be decided at this precision and none was
/// certified. Throws InternalError when every exponent is certified to fail.
std::optional<ArchSearchResult> arch_exponent_search(const ComplexBall& a, const RealBall& d);

enum class ConditionKind { ValA, ValInvA, ValOneMinusA };
std::string to_string(ConditionKind k);

struct FiniteCertificate {
  PrimeIdeal prime;
  int D = 1;
  ConditionKind kind = ConditionKind::ValA;
  std::int64_t value = 0;
};

struct ArchCertificate {
  std::size_t embedding = 0;
  Rational D;
  ConditionKind kind = ConditionKind::ValA;
  ArchBranch branch = ArchBranch::Contraction;
  long m = 0;
  /// Enclosure of -log|iA|, log|iA| or -log|1 - iA| according to kind.
  RealBall value;
  int precision = 0;
};

struct TransformResult {
  Integer n;
  Integer n0;
  FieldElement A;
  std::vector<FiniteCertificate> finite;
  std::optional<ArchCertificate> arch;
  RealBall bound_C;
};

/// A = a^n with n a multiple of n0 chosen so that A is close to the tripod at
/// every place of D.
TransformResult transform(const FieldElement& a, const ArithmeticDivisor& D, const HeightOptions& opts = {});

}  // namespace abckit
