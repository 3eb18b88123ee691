#pragma once

#include "abckit/heights.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abckit {

enum class Decision { Holds, Fails, Undecided, NotApplicable };
std::string to_string(Decision d);

/// The error term psi of the effective abc conjecture.
class ErrorFunction {
 public:
  enum class Kind { Affine, Envelope, Sqrt };

  /// psi(h) = eps h + M
  static ErrorFunction affine(const Rational& eps, const Rational& M);
  /// psi(h) = min over the table of eps h + M(eps)
  static ErrorFunction envelope(std::vector<std::pair<Rational, Rational>> table);
  /// psi(h) = c sqrt(h)
  static ErrorFunction sqrt_form(const Rational& c = 4);
  /// eps = 1/2, M = 0, i.e. h <= 2r over Q.
  static ErrorFunction half_preset() { return affine(Rational(1, 2), 0); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::pair<Rational, Rational>>& table() const noexcept { return table_; }
  RealBall operator()(const RealBall& h) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Affine;
  std::vector<std::pair<Rational, Rational>> table_;
  Rational coeff_ = 0;
};

struct ConjectureReport {
  int degree = 1;            // [K:Q] of the field the point is given in
  HeightValue height_K;      // h_K
  HeightValue radical_K;     // r_K
  RealBall h, r, ld;         // absolute height, absolute radical, log different
  RealBall quality;          // h / r
  /// Smallest eps with h_K <= r_K + eps h_K (M = 0); absent when h_K = 0.
  std::optional<RealBall> eps_needed;
  /// r_K + [K:Q] psi(h) - h_K for the half preset.
  RealBall psi_residual;
  /// h - ld - r, the amount psi(h) must cover.
  RealBall uniform_residual;
  /// 2 + sqrt(ld + r + 4) - sqrt(h); negative would contradict the falsifiable form.
  RealBall falsifiable_margin;
  Decision effective = Decision::Undecided;
  Decision falsifiable = Decision::Undecided;
  Decision good_abc = Decision::NotApplicable;
  int precision = 0;

  bool undecided() const {
    return effective == Decision::Undecided || falsifiable == Decision::Undecided ||
           good_abc == Decision::Undecided;
  }
  /// A certified violation of sqrt(h) <= 2 + sqrt(ld + r + 4).
  bool challenge() const { return falsifiable == Decision::Fails; }
};

ConjectureReport evaluate(const AbcPoint& P, const HeightOptions& opts = {});

/// h_K <= r_K + [K:Q] psi(h)
Decision check_effective(const AbcPoint& P, const ErrorFunction& psi, const HeightOptions& opts = {});

/// h_Q >= r_Q + 6 sqrt(h) / log h for a rational point; NotApplicable when
/// h <= 1 or the point is not rational.
Decision good_abc(const AbcPoint& P, const HeightOptions& opts = {});

struct GoodAbcScan {
  std::vector<std::size_t> good;
  std::vector<std::size_t> undecided;
  std::vector<std::size_t> skipped;
};
GoodAbcScan good_abc_scan(const std::vector<AbcPoint>& corpus, const HeightOptions& opts = {});

}  // namespace abckit
