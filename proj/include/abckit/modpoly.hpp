#pragma once

#include "abckit/integer.hpp"
#include "abckit/poly.hpp"

#include <utility>
#include <vector>

namespace abckit {

/// Polynomial over F_p, constant term first, coefficients in [0, p).
class ModPoly {
 public:
  /// Zero polynomial. Throws InvalidModulus unless p is prime.
  explicit ModPoly(Integer p);
  ModPoly(Integer p, std::vector<Integer> coeffs);
  /// Reduction of a p-integral rational polynomial.
  static ModPoly from_poly(const Poly& f, const Integer& p);

  const Integer& modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const;

  ModPoly monic() const;
  ModPoly derivative() const;
  Integer eval(const Integer& x) const;
  /// Lift with coefficients in [0, p).
  Poly to_poly() const;

  ModPoly operator-() const;
  friend ModPoly operator+(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator-(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator*(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator*(const ModPoly& f, const Integer& c);
  friend ModPoly operator/(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator%(const ModPoly& f, const ModPoly& g);
  friend bool operator==(const ModPoly& f, const ModPoly& g) { return f.p_ == g.p_ && f.c_ == g.c_; }
  friend bool operator!=(const ModPoly& f, const ModPoly& g) { return !(f == g); }
  friend bool operator<(const ModPoly& f, const ModPoly& g);

  std::string to_string(const std::string& var = "x") const;

 private:
  struct Unchecked {};
  ModPoly(Unchecked, Integer p, std::vector<Integer> coeffs);
  void trim();
  ModPoly make(std::vector<Integer> coeffs) const;

  Integer p_;
  std::vector<Integer> c_;

  friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g);
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g);
ModPoly gcd(const ModPoly& f, const ModPoly& g);
/// (g, s, t) with s f + t h = g monic.
std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& f, const ModPoly& h);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);

/// Complete factorization over F_p into monic irreducibles with multiplicities,
/// sorted. Equal-degree splitting draws from a generator seeded with `seed`.
std::vector<std::pair<ModPoly, int>> factor_mod_p(const ModPoly& f, unsigned long seed = 0);

}  // namespace abckit
