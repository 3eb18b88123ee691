#pragma once

#include "abckit/modpoly.hpp"
#include "abckit/poly.hpp"

#include <utility>
#include <vector>

namespace abckit {

/// Integer polynomial, constant term first.
using ZPoly = std::vector<Integer>;

namespace zpoly {

void trim(ZPoly& f);
int degree(const ZPoly& f);
/// Coefficients reduced into [0, m).
ZPoly reduce(ZPoly f, const Integer& m);
/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric(ZPoly f, const Integer& m);
ZPoly add(const ZPoly& f, const ZPoly& g);
ZPoly sub(const ZPoly& f, const ZPoly& g);
ZPoly mul(const ZPoly& f, const ZPoly& g);
/// Division by a monic g with coefficients reduced mod m.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& f, const ZPoly& g, const Integer& m);
ZPoly from_modpoly(const ModPoly& f);
ZPoly from_poly(const Poly& f);  // requires integral coefficients
Poly to_poly(const ZPoly& f);

}  // namespace zpoly

/// Lifts a factorization f = prod g_i mod p of a monic integer polynomial into
/// monic factors modulo p^k. The g_i must be monic and pairwise coprime mod p.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Integer& p,
                               unsigned long k);

/// Irreducible factors over Q, monic, sorted, with multiplicities.
std::vector<std::pair<Poly, int>> factor_over_Q(const Poly& f);

/// True when f (nonconstant) is irreducible over Q.
bool is_irreducible(const Poly& f);

/// Distinct rational roots of f, ascending.
std::vector<Rational> rational_roots(const Poly& f);

}  // namespace abckit
