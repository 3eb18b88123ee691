#include "abckit/factor.hpp"

#include "abckit/errors.hpp"

#include <algorithm>

namespace abckit {

namespace zpoly {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly reduce(ZPoly f, const Integer& m) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
  return f;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  for (auto& c : f) c = symmetric_mod(c, m);
  trim(f);
  return f;
}

ZPoly add(const ZPoly& f, const ZPoly& g) {
  ZPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < f.size()) r[i] += f[i];
    if (i < g.size()) r[i] += g[i];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& f, const ZPoly& g) {
  ZPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < f.size()) r[i] += f[i];
    if (i < g.size()) r[i] -= g[i];
  }
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& f, const ZPoly& g) {
  if (f.empty() || g.empty()) return {};
  ZPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
  }
  trim(r);
  return r;
}

std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& f, const ZPoly& g, const Integer& m) {
  if (g.empty() || g.back() != 1) throw InternalError("divmod_monic needs a monic divisor");
  ZPoly r = m == 0 ? f : reduce(f, m);
  if (degree(r) < degree(g)) return {{}, r};
  std::size_t dg = g.size() - 1;
  ZPoly q(r.size() - dg);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = r[k + dg];
    if (m != 0) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
  }
  r.resize(dg);
  if (m != 0) {
    r = reduce(std::move(r), m);
    q = reduce(std::move(q), m);
  }
  trim(r);
  trim(q);
  return {q, r};
}

ZPoly from_modpoly(const ModPoly& f) { return f.coeffs(); }

ZPoly from_poly(const Poly& f) {
  ZPoly r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw InternalError("non-integral coefficient");
    r.push_back(c.get_num());
  }
  return r;
}

Poly to_poly(const ZPoly& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f) v.emplace_back(c);
  return Poly(std::move(v));
}

}  // namespace zpoly

namespace {

ZPoly product_mod(const std::vector<ModPoly>& fs, std::size_t lo, std::size_t hi, const Integer& p) {
  ModPoly acc(p, {1});
  for (std::size_t i = lo; i < hi; ++i) acc = acc * fs[i];
  return zpoly::from_modpoly(acc);
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Integer& p,
                               unsigned long k) {
  using namespace zpoly;
  Integer pk = ipow(p, k);
  if (factors.size() == 1) return {reduce(f, pk)};
  std::size_t half = factors.size() / 2;
  ModPoly gbar(p, product_mod(factors, 0, half, p));
  ModPoly hbar(p, product_mod(factors, half, factors.size(), p));
  auto [one, sbar, tbar] = xgcd(gbar, hbar);
  if (one.degree() != 0) throw InternalError("Hensel factors are not coprime");
  ZPoly g = from_modpoly(gbar), h = from_modpoly(hbar);
  ZPoly s = from_modpoly(sbar), t = from_modpoly(tbar);
  Integer m = p;
  while (m < pk) {
    Integer m2 = m * m;
    ZPoly e = reduce(sub(f, mul(g, h)), m2);
    auto [q, r] = divmod_monic(mul(s, e), h, m2);
    ZPoly g2 = reduce(add(g, add(mul(t, e), mul(q, g))), m2);
    ZPoly h2 = reduce(add(h, r), m2);
    ZPoly b = reduce(sub(add(mul(s, g2), mul(t, h2)), ZPoly{1}), m2);
    auto [c, d] = divmod_monic(mul(s, b), h2, m2);
    s = reduce(sub(s, d), m2);
    t = reduce(sub(sub(t, mul(t, b)), mul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  g = reduce(std::move(g), pk);
  h = reduce(std::move(h), pk);
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  auto out = hensel_lift(g, left, p, k);
  auto rest = hensel_lift(h, right, p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

namespace {

// Factors a monic squarefree integer polynomial into monic irreducibles.
std::vector<ZPoly> factor_monic_squarefree(ZPoly f) {
  using namespace zpoly;
  std::vector<ZPoly> out;
  if (degree(f) <= 1) {
    out.push_back(f);
    return out;
  }
  if (f[0] == 0) {
    out.push_back(ZPoly{0, 1});
    f.erase(f.begin());
    auto rest = factor_monic_squarefree(f);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  int n = degree(f);

  // Pick the candidate prime with the fewest modular factors.
  Poly fq = to_poly(f);
  Integer best_p;
  std::vector<ModPoly> best;
  int good = 0;
  Integer p = 2;
  for (int tries = 0; tries < 200 && good < 4; ++tries, p = next_prime(p)) {
    ModPoly fb = ModPoly::from_poly(fq, p);
    if (gcd(fb, fb.derivative()).degree() != 0) continue;
    ++good;
    auto fac = factor_mod_p(fb, 0);
    if (best.empty() || fac.size() < best.size()) {
      best.clear();
      for (auto& [g, mult] : fac) best.push_back(g);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.empty()) throw InternalError("no good prime found");
  if (best.size() == 1) {
    out.push_back(f);
    return out;
  }

  // Mignotte-style coefficient bound for any factor.
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = ipow(2, static_cast<unsigned long>(n)) * (n + 1) * maxc;
  unsigned long k = 1;
  Integer pk = best_p;
  while (pk <= 2 * bound) {
    pk *= best_p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, k);

  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{1};
      for (auto i : idx) cand = reduce(mul(cand, lifted[i]), pk);
      cand = symmetric(std::move(cand), pk);
      bool plausible = cand[0] != 0 && mpz_divisible_p(f[0].get_mpz_t(), cand[0].get_mpz_t());
      if (plausible) {
        auto [q, r] = divmod_monic(f, cand, Integer(0));
        if (r.empty()) {
          out.push_back(cand);
          f = q;
          for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
          found = true;
          break;
        }
      }
      // Next combination.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(f) > 0) out.push_back(f);
  return out;
}

std::vector<Poly> factor_squarefree(const Poly& g) {
  if (g.degree() <= 1) return {g.monic()};
  std::vector<Integer> G = g.primitive_integer_coeffs();
  int n = g.degree();
  Integer lc = G.back();
  // F(x) = lc^{n-1} G(x / lc) is monic with integer coefficients.
  ZPoly F(G.size());
  for (int i = 0; i < n; ++i) F[static_cast<std::size_t>(i)] = G[static_cast<std::size_t>(i)] * ipow(lc, static_cast<unsigned long>(n - 1 - i));
  F[static_cast<std::size_t>(n)] = 1;
  std::vector<Poly> out;
  for (const auto& h : factor_monic_squarefree(F)) {
    Poly back = zpoly::to_poly(h).scaled(Rational(lc));
    out.push_back(back.monic());
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_over_Q(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (auto& h : factor_squarefree(g)) out.emplace_back(std::move(h), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_Q(f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::vector<Rational> rational_roots(const Poly& f) {
  std::vector<Rational> roots;
  for (const auto& [g, mult] : factor_over_Q(f))
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace abckit
