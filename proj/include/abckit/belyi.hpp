#pragma once

#include "abckit/rational_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abckit {

/// A root of an irreducible polynomial over Q. The Belyi construction works
/// with whole Galois orbits, so root_index only matters for display and for
/// the complex enclosure.
struct AlgebraicNumber {
  Poly min_poly;  // monic, irreducible
  int root_index = 0;

  static AlgebraicNumber rational(const Rational& q);
  /// Validates irreducibility; the index refers to the order of
  /// isolate_complex_roots.
  static AlgebraicNumber root_of(const Poly& f, int root_index = 0);
  /// Minimal polynomial of x over Q, root index 0.
  static AlgebraicNumber of(const FieldElement& x);

  int degree() const { return min_poly.degree(); }
  bool is_rational() const { return degree() == 1; }
  Rational rational_value() const;
  ComplexBall value(int precision) const;
  bool same_orbit(const AlgebraicNumber& o) const { return min_poly == o.min_poly; }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.min_poly == b.min_poly && a.root_index == b.root_index;
  }
  std::string to_string() const;
};

/// Point of P^1 over Qbar; nullopt is infinity.
using ProjAlgebraic = std::optional<AlgebraicNumber>;
std::string to_string(const ProjAlgebraic& x);
bool same_orbit(const ProjAlgebraic& a, const ProjAlgebraic& b);
/// 0, 1 or infinity.
bool in_tripod(const ProjAlgebraic& x);

struct BelyiOptions {
  long max_degree = 1'000'000;
  int max_iterations = 1000;
  /// Budget for degree times coefficient size of the map, in bits.
  double max_size_bits = 1 << 26;
};

struct BelyiStep {
  std::string kind;  // pole, move-infinity, minpoly, fold, affine, mobius
  std::string detail;
  RationalMap map;
};

struct BelyiCertificate {
  std::vector<ProjAlgebraic> critical_values;
  std::vector<ProjAlgebraic> image_of_E;
  std::vector<ProjAlgebraic> image_of_R;
  std::vector<BelyiStep> steps;
  /// Human readable reasons; empty when the map is certified.
  std::vector<std::string> failures;
  /// Critical values outside the tripod.
  std::vector<ProjAlgebraic> offending;

  bool ok() const { return failures.empty(); }
};

/// Smallest prime p exceeding every degree in E with every element p-integral.
Integer choose_prime(const std::vector<ProjAlgebraic>& E);
/// z / (1 + p z)
RationalMap step_move_infinity(const Integer& p);
/// z^m (1 - z)^n
RationalMap step_fold(long m, long n, long max_degree = 1'000'000);
/// Smallest p-adic valuation of a nonzero root of f' (nullopt when f' has no
/// nonzero roots).
std::optional<Rational> min_derivative_root_valuation(const Poly& f, const Integer& p);
/// f(x) as a point of P^1 (Galois orbit of the image).
ProjAlgebraic image(const RationalMap& f, const ProjAlgebraic& x);

/// Independent check that f is ramified only above {0, 1, inf}, maps E into
/// the tripod and R outside it.
BelyiCertificate verify_belyi(const RationalMap& f, const std::vector<ProjAlgebraic>& E,
                              const std::vector<ProjAlgebraic>& R);

struct BelyiResult {
  RationalMap map;
  BelyiCertificate certificate;
};

/// Belyi map for (E, R); throws VerificationFailed when the constructed map
/// does not pass verify_belyi.
BelyiResult build_belyi(const std::vector<ProjAlgebraic>& E, const std::vector<ProjAlgebraic>& R,
                        const BelyiOptions& opts = {});

struct UniformStage {
  RationalMap map;
  std::vector<ProjAlgebraic> R;
};

/// f_0, ..., f_{k_max} with R_{n+1} = R_n + (f_n^{-1}(T) - E).
std::vector<UniformStage> uniform_sequence(const std::vector<ProjAlgebraic>& E, int k_max,
                                           const BelyiOptions& opts = {});

/// Points of f^{-1}(T) as orbits.
std::vector<ProjAlgebraic> tripod_preimage(const RationalMap& f);

}  // namespace abckit
