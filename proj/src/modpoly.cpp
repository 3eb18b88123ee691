#include "abckit/modpoly.hpp"

#include "abckit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace abckit {

namespace {

Integer mod(const Integer& a, const Integer& p) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

Integer inverse(const Integer& a, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw InternalError("non-invertible residue");
  return r;
}

}  // namespace

ModPoly::ModPoly(Integer p) : p_(std::move(p)) {
  if (p_ < 2 || !is_prime(p_)) throw InvalidModulus("modulus " + abckit::to_string(p_) + " is not prime");
}

ModPoly::ModPoly(Integer p, std::vector<Integer> coeffs) : ModPoly(std::move(p)) {
  c_ = std::move(coeffs);
  for (auto& c : c_) c = mod(c, p_);
  trim();
}

ModPoly::ModPoly(Unchecked, Integer p, std::vector<Integer> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
  trim();
}

ModPoly ModPoly::make(std::vector<Integer> coeffs) const { return ModPoly(Unchecked{}, p_, std::move(coeffs)); }

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::from_poly(const Poly& f, const Integer& p) {
  ModPoly r(p);
  r.c_.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) {
    if (mpz_divisible_p(q.get_den_mpz_t(), p.get_mpz_t()))
      throw InvalidInput("coefficient " + abckit::to_string(q) + " is not p-integral");
    Integer num = mod(q.get_num(), p);
    r.c_.push_back(mod(num * inverse(mod(q.get_den(), p), p), p));
  }
  r.trim();
  return r;
}

const Integer& ModPoly::leading() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return c_.back();
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  Integer inv = inverse(leading(), p_);
  std::vector<Integer> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = mod(c_[i] * inv, p_);
  return make(std::move(v));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return make({});
  std::vector<Integer> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mod(c_[i] * static_cast<unsigned long>(i), p_);
  return make(std::move(v));
}

Integer ModPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod(acc * x + *it, p_);
  return acc;
}

Poly ModPoly::to_poly() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.emplace_back(c);
  return Poly(std::move(v));
}

ModPoly ModPoly::operator-() const {
  std::vector<Integer> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = mod(-c_[i], p_);
  return make(std::move(v));
}

ModPoly operator+(const ModPoly& f, const ModPoly& g) {
  std::vector<Integer> v(std::max(f.c_.size(), g.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(f.coeff(i) + g.coeff(i), f.p_);
  return f.make(std::move(v));
}

ModPoly operator-(const ModPoly& f, const ModPoly& g) {
  std::vector<Integer> v(std::max(f.c_.size(), g.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(f.coeff(i) - g.coeff(i), f.p_);
  return f.make(std::move(v));
}

ModPoly operator*(const ModPoly& f, const ModPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.make({});
  std::vector<Integer> v(f.c_.size() + g.c_.size() - 1);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] == 0) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
  }
  for (auto& c : v) c = mod(c, f.p_);
  return f.make(std::move(v));
}

ModPoly operator*(const ModPoly& f, const Integer& c) {
  std::vector<Integer> v(f.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(f.c_[i] * c, f.p_);
  return f.make(std::move(v));
}

ModPoly operator/(const ModPoly& f, const ModPoly& g) { return divmod(f, g).first; }
ModPoly operator%(const ModPoly& f, const ModPoly& g) { return divmod(f, g).second; }

bool operator<(const ModPoly& f, const ModPoly& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  for (int i = f.degree(); i >= 0; --i) {
    const auto& a = f.c_[static_cast<std::size_t>(i)];
    const auto& b = g.c_[static_cast<std::size_t>(i)];
    if (a != b) return a < b;
  }
  return false;
}

std::string ModPoly::to_string(const std::string& var) const { return to_poly().to_string(var); }

std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g) {
  if (g.is_zero()) throw InvalidInput("polynomial division by zero");
  if (f.p_ != g.p_) throw InvalidInput("mismatched moduli");
  if (f.degree() < g.degree()) return {f.make({}), f};
  std::vector<Integer> r = f.c_;
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - g.degree() + 1));
  Integer inv = inverse(g.leading(), f.p_);
  std::size_t dg = g.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = mod(r[k + dg] * inv, f.p_);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[k + j] = mod(r[k + j] - c * g.c_[j], f.p_);
  }
  r.resize(dg);
  return {f.make(std::move(q)), f.make(std::move(r))};
}

ModPoly gcd(const ModPoly& f, const ModPoly& g) {
  ModPoly a = f, b = g;
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& f, const ModPoly& h) {
  const Integer& p = f.modulus();
  ModPoly r0 = f, r1 = h;
  ModPoly s0(p, {1}), s1(p);
  ModPoly t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Integer inv;
  mpz_invert(inv.get_mpz_t(), r0.leading().get_mpz_t(), p.get_mpz_t());
  return {r0 * inv, s0 * inv, t0 * inv};
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  ModPoly result(base.modulus(), {1});
  result = result % m;
  ModPoly b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

namespace {

using Factors = std::vector<std::pair<ModPoly, int>>;

ModPoly pth_root(const ModPoly& f) {
  const Integer& p = f.modulus();
  unsigned long pu = p.get_ui();
  std::vector<Integer> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += pu) v.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(v));
}

// Squarefree factorization of a monic polynomial over F_p.
void squarefree(const ModPoly& f, int mult, Factors& out) {
  if (f.degree() <= 0) return;
  const Integer& p = f.modulus();
  ModPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(p.get_ui()), out);
    return;
  }
  ModPoly c = gcd(f, d);
  ModPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(p.get_ui()), out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
  const Integer& p = f.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly x(p, {0, 1});
  ModPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    ModPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

ModPoly random_poly(const Integer& p, int degree, gmp_randclass& rng) {
  std::vector<Integer> v(static_cast<std::size_t>(degree));
  for (auto& c : v) c = rng.get_z_range(p);
  return ModPoly(p, std::move(v));
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of irreducibles of degree d.
void equal_degree(const ModPoly& f, int d, gmp_randclass& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Integer& p = f.modulus();
  while (true) {
    ModPoly a = random_poly(p, f.degree(), rng);
    if (a.degree() <= 0) continue;
    ModPoly b(p);
    if (p == 2) {
      ModPoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      Integer e = (ipow(p, static_cast<unsigned long>(d)) - 1) / 2;
      b = powmod(a, e, f) - ModPoly(p, {1});
    }
    ModPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<ModPoly, int>> factor_mod_p(const ModPoly& f, unsigned long seed) {
  if (f.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  Factors sqf;
  squarefree(f.monic(), 1, sqf);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  Factors out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.emplace_back(g.monic(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

}  // namespace abckit
