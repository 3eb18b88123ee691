#pragma once

#include "abckit/conjectures.hpp"
#include "abckit/rational_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abckit {

/// G_v = { v(x) >= g or v(x) <= -g or v(1 - x) >= g }, with v normalized by
/// v(p) = 1, at every prime above p.
struct NonarchEntry {
  Integer p;
  int g = 2;
};

/// G_i = { |x| <= e^-g or |x| >= e^g or |1 - x| <= e^-g }; all embeddings
/// unless one is named.
struct ArchEntry {
  std::optional<std::size_t> embedding;
  Rational g;
};

class TripodNeighborhood {
 public:
  TripodNeighborhood() = default;
  /// Validates g >= 1, g >= 2 at p = 2 (F_2 residue field) and g > 0 at
  /// archimedean places.
  TripodNeighborhood(std::vector<NonarchEntry> nonarch, std::vector<ArchEntry> arch);

  const std::vector<NonarchEntry>& nonarch() const noexcept { return nonarch_; }
  const std::vector<ArchEntry>& arch() const noexcept { return arch_; }
  bool empty() const { return nonarch_.empty() && arch_.empty(); }

 private:
  std::vector<NonarchEntry> nonarch_;
  std::vector<ArchEntry> arch_;
};

/// Holds means x lies in the neighborhood.
Decision in_neighborhood(const FieldElement& x, const PrimeIdeal& P, int g);
Decision in_neighborhood(const Rational& x, const Integer& p, int g);
Decision in_neighborhood(const ComplexBall& x, const RealBall& g);

struct PlaceEvidence {
  std::string place;
  Decision inside = Decision::Undecided;
  std::string detail;
};

struct RestrictedReport {
  /// Holds when x = a/c avoids G at every place and embedding.
  Decision qualifies = Decision::Holds;
  std::vector<PlaceEvidence> evidence;
  /// v_p(abc) <= g - 1 for every nonarchimedean entry, for rational points
  /// (coordinates scaled to coprime integers).
  std::optional<bool> intro_form;
};

RestrictedReport restricted_hypothesis(const AbcPoint& P, const TripodNeighborhood& G,
                                       const HeightOptions& opts = {});

struct FermatParams {
  Rational eps;
  long n = 0;
  long degree = 0;
  long two_g_minus_2 = 0;
  long genus = 0;
  long deg_reduced = 0;
};

/// Smallest n >= 3 + 6/eps, and n >= 9 when eps < 1.
FermatParams fermat_params(const Rational& eps);

struct CanonicalDegreeReport {
  int degree = 0;
  int preimage_points = 0;
  /// deg f - #f^{-1}(T); -2 for every Belyi map on P^1.
  int two_g_minus_2 = 0;
  bool ok() const { return two_g_minus_2 == -2; }
};

CanonicalDegreeReport canonical_degree_check(const RationalMap& f);

}  // namespace abckit
