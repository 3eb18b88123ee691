#include "abckit/padic.hpp"

#include <numeric>

namespace abckit {

ZPoly taylor_shift(const ZPoly& f, const Integer& r) {
  ZPoly g = f;
  std::size_t n = g.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) mpz_addmul(g[j].get_mpz_t(), g[j + 1].get_mpz_t(), r.get_mpz_t());
  return g;
}

namespace {

using Point = std::pair<long, std::int64_t>;

// Points (i, v_p(c_i)) of coefficients known to be nonzero modulo p^digits.
std::vector<Point> known_points(const ZPoly& g, const Integer& p, unsigned long digits) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    std::int64_t v = valuation(g[i], p);
    if (v < static_cast<std::int64_t>(digits)) pts.emplace_back(static_cast<long>(i), v);
  }
  return pts;
}

Poly points_poly(const ZPoly& g, const Integer& p, unsigned long digits) {
  // Poly whose coefficient valuations match the known points; the rest are 0.
  std::vector<Rational> v(g.size());
  for (const auto& [i, val] : known_points(g, p, digits)) v[static_cast<std::size_t>(i)] = Rational(ipow(p, static_cast<unsigned long>(val)));
  return Poly(std::move(v));
}

std::vector<LocalFactor> ramified_linear(const ZPoly& g, const Integer& r, int k, const Integer& p,
                                         unsigned long digits);
std::vector<LocalFactor> ramified_general(const ZPoly& g, const ModPoly& phi, int k, const Integer& p,
                                          unsigned long digits);

}  // namespace

std::vector<LocalFactor> padic_factor(const ZPoly& f, const Integer& p, unsigned long digits) {
  if (digits < 1) throw InsufficientPrecision("p-adic precision exhausted");
  Integer pd = ipow(p, digits);
  ZPoly fr = zpoly::reduce(f, pd);
  ModPoly fbar(p, fr);
  auto fac = factor_mod_p(fbar, 0);
  std::vector<ModPoly> blocks;
  for (const auto& [phi, k] : fac) {
    ModPoly b(p, {1});
    for (int i = 0; i < k; ++i) b = b * phi;
    blocks.push_back(b);
  }
  std::vector<ZPoly> lifted = blocks.size() == 1 ? std::vector<ZPoly>{fr} : hensel_lift(fr, blocks, p, digits);
  std::vector<LocalFactor> out;
  for (std::size_t j = 0; j < fac.size(); ++j) {
    const auto& [phi, k] = fac[j];
    if (k == 1) {
      out.push_back({lifted[j], digits, 1, phi.degree()});
    } else if (phi.degree() == 1) {
      Integer r = (p - phi.coeff(0)) % p;
      auto sub = ramified_linear(lifted[j], r, k, p, digits);
      out.insert(out.end(), sub.begin(), sub.end());
    } else {
      auto sub = ramified_general(lifted[j], phi, k, p, digits);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

namespace {

std::vector<LocalFactor> ramified_linear(const ZPoly& g, const Integer& r, int k, const Integer& p,
                                         unsigned long digits) {
  Integer pd = ipow(p, digits);
  ZPoly s = zpoly::reduce(taylor_shift(g, r), pd);
  if (s.empty() || s[0] == 0) throw InsufficientPrecision("root not separated at this precision");
  std::vector<NewtonSegment> segs = newton_polygon(points_poly(s, p, digits), p);
  const Rational& lam = segs.front().slope;
  if (lam.get_den() == 1) {
    unsigned long L = lam.get_num().get_ui();
    unsigned long shift = static_cast<unsigned long>(k) * L;
    if (shift >= digits) throw InsufficientPrecision("slope rescaling exhausts precision");
    unsigned long nd = digits - shift;
    // H(z) = S(p^L z) / p^{kL}.
    ZPoly h(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      Integer c = s[i] * ipow(p, L * i);
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ipow(p, shift).get_mpz_t());
      h[i] = c;
    }
    auto sub = padic_factor(h, p, nd);
    std::vector<LocalFactor> out;
    Integer pnd = ipow(p, nd);
    for (auto& lf : sub) {
      // U_y(y) = p^{L deg U} U(y / p^L), then x = y + r.
      std::size_t du = lf.poly.size() - 1;
      ZPoly uy(lf.poly.size());
      for (std::size_t i = 0; i <= du; ++i) uy[i] = lf.poly[i] * ipow(p, L * (du - i));
      ZPoly ux = zpoly::reduce(taylor_shift(uy, -r), ipow(p, lf.precision));
      out.push_back({ux, lf.precision, lf.e, lf.f});
    }
    return out;
  }
  if (segs.size() != 1)
    throw UnsupportedSplitting("several Newton polygon segments with a fractional slope at p = " + to_string(p));
  int e = static_cast<int>(lam.get_den().get_si());
  int t = k / e;
  if (t == 1) return {{g, digits, e, 1}};
  // Residual polynomial along the single segment.
  long h = lam.get_num().get_si();
  std::vector<Integer> res(static_cast<std::size_t>(t + 1));
  for (int j = 0; j <= t; ++j) {
    const Integer& c = s[static_cast<std::size_t>(j * e)];
    Integer q = ipow(p, static_cast<unsigned long>(h * (t - j)));
    if (c != 0 && mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) res[static_cast<std::size_t>(j)] = c / q;
  }
  auto rf = factor_mod_p(ModPoly(p, res), 0);
  if (rf.size() == 1 && rf[0].second == 1) return {{g, digits, e, t}};
  throw UnsupportedSplitting("residual polynomial is reducible at p = " + to_string(p));
}

std::vector<LocalFactor> ramified_general(const ZPoly& g, const ModPoly& phi, int k, const Integer& p,
                                          unsigned long digits) {
  Integer pd = ipow(p, digits);
  ZPoly ph = zpoly::from_modpoly(phi);
  // phi-adic expansion g = sum a_i phi^i.
  std::vector<std::int64_t> vals;
  ZPoly rest = g;
  for (int i = 0; i <= k; ++i) {
    auto [q, r] = zpoly::divmod_monic(rest, ph, pd);
    std::int64_t v = static_cast<std::int64_t>(digits);
    for (const auto& c : r)
      if (c != 0) v = std::min(v, valuation(c, p));
    vals.push_back(v);
    rest = q;
  }
  std::int64_t v0 = vals[0];
  if (v0 >= static_cast<std::int64_t>(digits)) throw InsufficientPrecision("phi-adic constant vanishes");
  if (std::gcd(v0, static_cast<std::int64_t>(k)) != 1)
    throw UnsupportedSplitting("non-Eisenstein phi-adic polygon at p = " + to_string(p));
  for (int i = 1; i < k; ++i)
    if (vals[static_cast<std::size_t>(i)] * k < v0 * (k - i))
      throw UnsupportedSplitting("phi-adic polygon has several segments at p = " + to_string(p));
  return {{g, digits, k, phi.degree()}};
}

}  // namespace

}  // namespace abckit
