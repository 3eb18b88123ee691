#pragma once

#include "abckit/errors.hpp"
#include "abckit/factor.hpp"

#include <vector>

namespace abckit {

/// Raised internally when a p-adic computation needs more digits; callers
/// double the precision and retry.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// One irreducible factor of a polynomial over Z_p together with the
/// ramification data of the corresponding prime.
struct LocalFactor {
  ZPoly poly;                // monic, coefficients in [0, p^precision)
  unsigned long precision;   // digits to which poly is known
  int e;
  int f;
};

/// Factors a monic squarefree integer polynomial over Z_p from an
/// approximation modulo p^digits. Repeated residual factors are resolved by
/// order-one Newton polygons: integral slopes recurse after rescaling the
/// variable, and a single fractional segment is accepted when its residual
/// polynomial is irreducible (linear residual factor) or the segment is
/// Eisenstein-like (higher degree residual factor). Anything else raises
/// UnsupportedSplitting.
std::vector<LocalFactor> padic_factor(const ZPoly& f, const Integer& p, unsigned long digits);

/// f(x + r) with exact integer arithmetic.
ZPoly taylor_shift(const ZPoly& f, const Integer& r);

}  // namespace abckit
