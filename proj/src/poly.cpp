#include "abckit/poly.hpp"

#include "abckit/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <tuple>

namespace abckit {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& r) { return Poly(std::vector<Rational>{-r, 1}); }

Poly Poly::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Rational Poly::content() const {
  if (is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (leading() < 0) c = -c;
  Poly r = *this;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

std::vector<Integer> Poly::primitive_integer_coeffs() const {
  Poly p = primitive();
  std::vector<Integer> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(c.get_num());
  return out;
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealBall Poly::eval(const RealBall& x) const {
  RealBall acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + RealBall::from_rational(*it, x.precision());
  return acc;
}

ComplexBall Poly::eval(const ComplexBall& x) const {
  ComplexBall acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + ComplexBall::from_rational(*it, x.precision());
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

Poly Poly::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
  Poly r = *this;
  Rational pw = 1;
  for (auto& x : r.coeffs_) {
    x *= pw;
    pw *= c;
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Rational> r(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) r[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& g) { return *this = *this * g; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

bool operator<(const Poly& f, const Poly& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  for (int i = f.degree(); i >= 0; --i) {
    const auto& a = f.coeffs_[static_cast<std::size_t>(i)];
    const auto& b = g.coeffs_[static_cast<std::size_t>(i)];
    if (a != b) return a < b;
  }
  return false;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || i == 0) out << abckit::to_string(a);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw InvalidInput("polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly(), f};
  std::vector<Rational> r = f.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - g.degree() + 1));
  const auto& gc = g.coeffs();
  Rational inv = 1 / g.leading();
  std::size_t dg = gc.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + dg] * inv;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= c * gc[j];
  }
  r.resize(dg);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

namespace {

using u64 = std::uint64_t;
using Zp = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

void trim(Zp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Zp reduce(const std::vector<Integer>& c, u64 p) {
  Zp out(c.size());
  Integer P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer r = c[i] % P;
    if (r < 0) r += P;
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

// Monic gcd over F_p, dense u64 coefficients.
Zp gcd_mod(Zp a, Zp b, u64 p) {
  while (!b.empty()) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 q = mulmod(a.back(), inv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(q, b[i], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  u64 inv = powmod(a.back(), p - 2, p);
  for (auto& x : a) x = mulmod(x, inv, p);
  return a;
}

const std::vector<u64>& gcd_primes(std::size_t k) {
  static std::vector<u64> primes;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  Integer c = primes.empty() ? Integer(1UL << 62) : Integer(static_cast<unsigned long>(primes.back()));
  while (primes.size() < k) {
    do c -= 1;
    while (!is_prime(c));
    primes.push_back(c.get_ui());
  }
  return primes;
}

bool divides_exactly(const Poly& h, const Poly& f) { return (f % h).is_zero(); }

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Poly::constant(1);
  std::vector<Integer> F = f.primitive_integer_coeffs(), G = g.primitive_integer_coeffs();
  Integer b = gcd(F.back(), G.back());
  int best = std::min(f.degree(), g.degree()) + 1;
  std::vector<Integer> H;
  Integer M = 1;
  Poly last;
  for (std::size_t k = 0;; ++k) {
    u64 p = gcd_primes(k + 1)[k];
    Integer P(static_cast<unsigned long>(p));
    if (F.back() % P == 0 || G.back() % P == 0) continue;
    Zp h = gcd_mod(reduce(F, p), reduce(G, p), p);
    int d = static_cast<int>(h.size()) - 1;
    if (d == 0) return Poly::constant(1);
    if (d > best) continue;
    u64 bp = reduce({b}, p).empty() ? 0 : reduce({b}, p)[0];
    for (auto& x : h) x = mulmod(x, bp, p);
    if (d < best) {
      best = d;
      H.assign(h.size(), 0);
      for (std::size_t i = 0; i < h.size(); ++i) H[i] = Integer(static_cast<unsigned long>(h[i]));
      M = P;
    } else {
      // CRT: H + M * ((h - H) / M mod p)
      Integer Minv;
      mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), P.get_mpz_t());
      for (std::size_t i = 0; i < h.size(); ++i) {
        Integer t = (Integer(static_cast<unsigned long>(h[i])) - H[i]) % P;
        if (t < 0) t += P;
        t = (t * Minv) % P;
        H[i] += M * t;
      }
      M *= P;
    }
    std::vector<Rational> c(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) c[i] = Rational(symmetric_mod(H[i], M));
    Poly cand = Poly(c).primitive();
    if (cand == last && divides_exactly(cand, f) && divides_exactly(cand, g)) return cand.monic();
    last = cand;
  }
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& f, const Poly& h) {
  Poly r0 = f, r1 = h;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow(const Poly& f, unsigned n) {
  Poly result = Poly::constant(1);
  Poly base = f;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  // Res(A, B) = (-1)^{mn} lc(B)^{m - deg R} Res(B, R) with R = A mod B.
  Poly a = f, b = g;
  Rational acc = 1;
  while (true) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rational bm = rpow(b.leading(), m);
      return acc * bm;
    }
    if (m == 0) {
      return acc * rpow(a.leading(), n);
    }
    Poly r = a % b;
    if (r.is_zero()) return 0;
    if ((static_cast<long>(m) * n) % 2 != 0) acc = -acc;
    acc *= rpow(b.leading(), m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const Poly& f) {
  int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of a constant polynomial");
  if (n == 1) return 1;
  Rational r = resultant(f, f.derivative()) / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  Poly fm = f.monic();
  Poly fp = fm.derivative();
  Poly a = gcd(fm, fp);
  Poly b = fm / a;
  Poly c = fp / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree part of zero");
  if (f.degree() <= 0) return Poly::constant(1);
  Poly fm = f.monic();
  return (fm / gcd(fm, fm.derivative())).monic();
}

std::vector<NewtonSegment> newton_polygon(const Poly& f, const Integer& p, int* zero_roots) {
  if (f.is_zero()) throw InvalidInput("Newton polygon of zero");
  std::vector<std::pair<long, std::int64_t>> pts;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) pts.emplace_back(static_cast<long>(i), valuation(c[i], p));
  if (zero_roots) *zero_roots = static_cast<int>(pts.front().first);
  // Lower convex hull, left to right.
  std::vector<std::pair<long, std::int64_t>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      // Remove a if it lies on or above the segment o -> pt.
      __int128 cross = static_cast<__int128>(a.first - o.first) * (pt.second - o.second) -
                       static_cast<__int128>(a.second - o.second) * (pt.first - o.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  std::vector<NewtonSegment> segs;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    long len = hull[k].first - hull[k - 1].first;
    Rational slope(Integer(static_cast<long>(hull[k - 1].second - hull[k].second)), Integer(len));
    slope.canonicalize();
    segs.push_back({slope, static_cast<int>(len)});
  }
  std::reverse(segs.begin(), segs.end());
  return segs;
}

}  // namespace abckit
