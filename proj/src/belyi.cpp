#include "abckit/belyi.hpp"

#include "abckit/errors.hpp"
#include "abckit/factor.hpp"
#include "abckit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace abckit {

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) { return {Poly::linear_root(q), 0}; }

AlgebraicNumber AlgebraicNumber::root_of(const Poly& f, int root_index) {
  if (f.degree() < 1) throw InvalidInput("algebraic number: constant polynomial");
  if (!is_irreducible(f)) throw InvalidInput("algebraic number: " + f.to_string() + " is reducible");
  if (root_index < 0 || root_index >= f.degree()) throw InvalidInput("algebraic number: root index out of range");
  return {f.monic(), root_index};
}

AlgebraicNumber AlgebraicNumber::of(const FieldElement& x) { return {min_poly_of(x), 0}; }

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw InvalidInput("algebraic number is not rational: " + to_string());
  return -min_poly.coeff(0);
}

ComplexBall AlgebraicNumber::value(int precision) const {
  if (is_rational()) return ComplexBall::from_rational(rational_value(), precision);
  return isolate_complex_roots(min_poly, precision).at(static_cast<std::size_t>(root_index));
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return abckit::to_string(rational_value());
  return "root" + std::to_string(root_index) + "(" + min_poly.to_string("x") + ")";
}

std::string to_string(const ProjAlgebraic& x) { return x ? x->to_string() : "inf"; }

bool same_orbit(const ProjAlgebraic& a, const ProjAlgebraic& b) {
  if (!a || !b) return !a && !b;
  return a->same_orbit(*b);
}

bool in_tripod(const ProjAlgebraic& x) {
  if (!x) return true;
  return x->is_rational() && (x->rational_value() == 0 || x->rational_value() == 1);
}

namespace {

bool divides(const Poly& g, const Poly& a) { return a.is_zero() || (a % g).is_zero(); }

bool orbit_less(const ProjAlgebraic& a, const ProjAlgebraic& b) {
  if (!a || !b) return a && !b;
  if (a->is_rational() && b->is_rational()) return a->rational_value() < b->rational_value();
  return a->min_poly < b->min_poly;
}

void insert_orbit(std::vector<ProjAlgebraic>& set, const ProjAlgebraic& x) {
  for (const auto& y : set)
    if (same_orbit(x, y)) return;
  set.push_back(x);
}

std::vector<ProjAlgebraic> normalized(const std::vector<ProjAlgebraic>& in) {
  std::vector<ProjAlgebraic> out;
  for (const auto& x : in) insert_orbit(out, x);
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

Rational leading_ratio(const RationalMap& f) { return f.num().leading() / f.den().leading(); }

/// Ramification index of f at infinity.
int ramification_at_infinity(const RationalMap& f) {
  int dn = f.num().degree(), dd = f.den().degree();
  if (dn != dd) return std::abs(dn - dd);
  Poly rest = f.num() - f.den() * leading_ratio(f);
  return dd - rest.degree();
}

/// Finite branch values and f(inf) when f is ramified there.
std::vector<ProjAlgebraic> branch_values(const RationalMap& f) {
  std::vector<ProjAlgebraic> out;
  Poly crit = f.critical_numerator();
  if (!crit.is_zero() && crit.degree() > 0)
    for (const auto& [g, mult] : factor_over_Q(crit)) insert_orbit(out, image(f, AlgebraicNumber{g.monic(), 0}));
  if (ramification_at_infinity(f) >= 2) insert_orbit(out, image(f, std::nullopt));
  return out;
}

std::size_t coeff_bits(const RationalMap& f) {
  std::size_t b = 0;
  for (const Poly* p : {&f.num(), &f.den()})
    for (const auto& c : p->coeffs())
      b = std::max(b, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2));
  return b;
}

struct Builder {
  const BelyiOptions& opts;
  RationalMap f;
  std::vector<BelyiStep> steps;
  int iterations = 0;

  void apply(const RationalMap& step, std::string kind, std::string detail) {
    long deg = static_cast<long>(f.degree()) * step.degree();
    if (deg > opts.max_degree)
      throw DegreeCapExceeded("Belyi map degree " + std::to_string(deg) + " exceeds cap " +
                              std::to_string(opts.max_degree));
    // Rough size of the composite in bits; composing past this is hopeless.
    double est = static_cast<double>(coeff_bits(step)) +
                 step.degree() * (static_cast<double>(coeff_bits(f)) + std::log2(f.degree() + 1.0) + 1);
    if (est * static_cast<double>(deg + 1) > static_cast<double>(opts.max_size_bits))
      throw DegreeCapExceeded("Belyi map of degree " + std::to_string(deg) + " would need about " +
                              std::to_string(static_cast<long>(est)) + "-bit coefficients");
    f = step.compose(f);
    steps.push_back({std::move(kind), std::move(detail), step});
  }
  void tick() {
    if (++iterations > opts.max_iterations)
      throw DegreeCapExceeded("Belyi construction exceeded " + std::to_string(opts.max_iterations) + " steps");
  }
};

std::vector<ProjAlgebraic> map_set(const RationalMap& g, const std::vector<ProjAlgebraic>& E) {
  std::vector<ProjAlgebraic> out;
  for (const auto& x : E) insert_orbit(out, image(g, x));
  return out;
}

/// Degree one map sending no point of R into the tripod.
RationalMap avoiding_mobius(const std::vector<ProjAlgebraic>& R) {
  bool bad = false;
  std::vector<Rational> rats;
  for (const auto& r : R) {
    if (r && r->is_rational()) rats.push_back(r->rational_value());
    if (in_tripod(r)) bad = true;
  }
  if (!bad) return RationalMap::identity();
  auto hit = [&](const Rational& q) { return std::find(rats.begin(), rats.end(), q) != rats.end(); };
  // 2 (z - a) / (z - b): zero at a, pole at b, value 1 at 2a - b, value 2 at inf.
  for (long s = 2;; ++s)
    for (long a = -s; a <= s; ++a)
      for (long b = -s; b <= s; ++b) {
        if (a == b || hit(a) || hit(b) || hit(Rational(2 * a - b))) continue;
        return RationalMap::mobius(2, -2 * a, 1, -b);
      }
}

}  // namespace

ProjAlgebraic image(const RationalMap& f, const ProjAlgebraic& x) {
  if (!x) {
    int dn = f.num().degree(), dd = f.den().degree();
    if (dn > dd) return std::nullopt;
    if (dn < dd) return AlgebraicNumber::rational(0);
    return AlgebraicNumber::rational(leading_ratio(f));
  }
  if (x->is_rational()) {
    ProjRational v = f.eval(ProjRational(x->rational_value()));
    if (!v) return std::nullopt;
    return AlgebraicNumber::rational(*v);
  }
  if (divides(x->min_poly, f.den())) return std::nullopt;
  FieldPtr K = NumberField::create(x->min_poly);
  return AlgebraicNumber::of(f.eval(FieldElement::generator(K)));
}

Integer choose_prime(const std::vector<ProjAlgebraic>& E) {
  int maxdeg = 0;
  for (const auto& x : E)
    if (x) maxdeg = std::max(maxdeg, x->degree());
  for (Integer p = 2;; p = next_prime(p)) {
    if (p <= maxdeg) continue;
    bool ok = true;
    for (const auto& x : E) {
      if (!x) continue;
      for (const auto& c : x->min_poly.coeffs())
        if (c != 0 && valuation(c, p) < 0) ok = false;
    }
    if (ok) return p;
  }
}

RationalMap step_move_infinity(const Integer& p) { return RationalMap::mobius(1, 0, Rational(p), 1); }

RationalMap step_fold(long m, long n, long max_degree) {
  if (m < 1 || n < 1) throw InvalidInput("fold exponents must be positive");
  if (m + n > max_degree)
    throw DegreeCapExceeded("fold degree " + std::to_string(m + n) + " exceeds cap " + std::to_string(max_degree));
  Poly one_minus = Poly::constant(1) - Poly::x();
  return RationalMap::polynomial(pow(Poly::x(), static_cast<unsigned>(m)) * pow(one_minus, static_cast<unsigned>(n)));
}

std::optional<Rational> min_derivative_root_valuation(const Poly& f, const Integer& p) {
  Poly d = f.derivative();
  if (d.degree() < 1) return std::nullopt;
  auto segs = newton_polygon(d, p);
  if (segs.empty()) return std::nullopt;
  return segs.front().slope;
}

BelyiCertificate verify_belyi(const RationalMap& f, const std::vector<ProjAlgebraic>& E,
                              const std::vector<ProjAlgebraic>& R) {
  if (f.degree() < 1) throw InvalidInput("verify_belyi: constant map");
  BelyiCertificate cert;
  const Poly& N = f.num();
  const Poly& D = f.den();
  Poly N1 = N - D;
  Poly crit = N.derivative() * D - N * D.derivative();
  if (crit.degree() > 0) {
    for (const auto& [g, mult] : factor_over_Q(crit)) {
      if (divides(g, N)) {
        insert_orbit(cert.critical_values, AlgebraicNumber::rational(0));
      } else if (divides(g, N1)) {
        insert_orbit(cert.critical_values, AlgebraicNumber::rational(1));
      } else if (divides(g, D)) {
        insert_orbit(cert.critical_values, std::nullopt);
      } else {
        ProjAlgebraic v = image(f, AlgebraicNumber{g.monic(), 0});
        insert_orbit(cert.critical_values, v);
        insert_orbit(cert.offending, v);
        cert.failures.push_back("critical value " + to_string(v) + " at roots of " + g.to_string());
      }
    }
  }
  if (ramification_at_infinity(f) >= 2) {
    ProjAlgebraic v = image(f, std::nullopt);
    insert_orbit(cert.critical_values, v);
    if (!in_tripod(v)) {
      insert_orbit(cert.offending, v);
      cert.failures.push_back("critical value " + to_string(v) + " at infinity");
    }
  }
  auto lands_in_tripod = [&](const ProjAlgebraic& x) {
    if (!x) return in_tripod(image(f, std::nullopt));
    const Poly& g = x->min_poly;
    return divides(g, N) || divides(g, N1) || divides(g, D);
  };
  for (const auto& x : E) {
    cert.image_of_E.push_back(image(f, x));
    if (!lands_in_tripod(x)) cert.failures.push_back("E point " + to_string(x) + " not mapped into the tripod");
  }
  for (const auto& x : R) {
    cert.image_of_R.push_back(image(f, x));
    if (lands_in_tripod(x)) cert.failures.push_back("R point " + to_string(x) + " mapped into the tripod");
  }
  std::sort(cert.critical_values.begin(), cert.critical_values.end(), orbit_less);
  return cert;
}

BelyiResult build_belyi(const std::vector<ProjAlgebraic>& E_in, const std::vector<ProjAlgebraic>& R_in,
                        const BelyiOptions& opts) {
  std::vector<ProjAlgebraic> E = normalized(E_in), R = normalized(R_in);
  for (const auto& r : R)
    for (const auto& e : E)
      if (same_orbit(r, e)) throw InvalidInput("R point " + to_string(r) + " is conjugate to a point of E");

  Builder b{opts, RationalMap::identity(), {}, 0};

  if (E.empty()) {
    RationalMap g = avoiding_mobius(R);
    if (!(g == RationalMap::identity())) b.apply(g, "mobius", "degree one map avoiding R");
  } else {
    std::vector<ProjAlgebraic> cur = E;
    std::optional<Rational> r;  // common image of R once R has been sent to infinity
    Integer p;
    if (!R.empty()) {
      // Simple poles exactly at R.
      Poly G = Poly::constant(1);
      bool inf = false;
      for (const auto& x : R) {
        if (x) G = G * x->min_poly;
        else inf = true;
      }
      RationalMap pole = G.degree() == 0 ? RationalMap::identity()
                                         : RationalMap(inf ? Poly::x() * G + Poly::constant(1) : Poly::constant(1), G);
      if (!(pole == RationalMap::identity())) {
        std::vector<ProjAlgebraic> next = map_set(pole, cur);
        for (const auto& v : branch_values(pole)) insert_orbit(next, v);
        b.apply(pole, "pole", "poles at R: " + (inf ? std::string("z + ") : std::string()) + "1/(" + G.to_string() + ")");
        cur = normalized(next);
      }
      p = choose_prime(cur);
      b.apply(step_move_infinity(p), "move-infinity", "p = " + abckit::to_string(p));
      cur = normalized(map_set(step_move_infinity(p), cur));
      r = Rational(1) / Rational(p);
    } else {
      p = choose_prime(cur);
    }

    // Lower the degree of algebraic points.
    while (true) {
      std::optional<AlgebraicNumber> alpha;
      for (const auto& x : cur)
        if (x && !x->is_rational() &&
            (!alpha || x->degree() > alpha->degree() || (x->degree() == alpha->degree() && x->min_poly < alpha->min_poly)))
          alpha = x;
      if (!alpha) break;
      b.tick();
      const Poly& m = alpha->min_poly;
      auto low = min_derivative_root_valuation(m, p);
      if (low && *low < 0)
        throw InternalError("derivative of " + m.to_string() + " has a root with negative valuation at " +
                            abckit::to_string(p));
      RationalMap step = RationalMap::polynomial(m);
      std::vector<ProjAlgebraic> next = map_set(step, cur);
      insert_orbit(next, std::nullopt);
      for (const auto& v : branch_values(step)) insert_orbit(next, v);
      b.apply(step, "minpoly", m.to_string());
      cur = normalized(next);
      if (r) r = *step.eval(ProjRational(*r));
    }

    insert_orbit(cur, std::nullopt);
    auto rationals = [&] {
      std::vector<Rational> s;
      for (const auto& x : cur)
        if (x) s.push_back(x->rational_value());
      std::sort(s.begin(), s.end());
      return s;
    };

    for (auto S = rationals(); S.size() >= 3; S = rationals()) {
      b.tick();
      std::size_t bi = 0, bj = 1, bl = 2;
      Integer best = -1;
      for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t l = i + 2; l < S.size(); ++l)
          for (std::size_t j = i + 1; j < l; ++j) {
            Rational q = (S[j] - S[i]) / (S[l] - S[i]);
            if (best < 0 || q.get_den() < best) best = q.get_den(), bi = i, bj = j, bl = l;
          }
      Rational e0 = S[bi], e1 = S[bl];
      Rational q = (S[bj] - e0) / (e1 - e0);
      if (q.get_den() > opts.max_degree)
        throw DegreeCapExceeded("fold degree " + abckit::to_string(Integer(q.get_den())) + " exceeds cap");
      long mm = q.get_num().get_si(), nn = Integer(q.get_den() - q.get_num()).get_si();
      RationalMap L = RationalMap::mobius(Rational(1) / (e1 - e0), -e0 / (e1 - e0), 0, 1);
      RationalMap F = step_fold(mm, nn, opts.max_degree);
      b.apply(L, "affine", abckit::to_string(e0) + " -> 0, " + abckit::to_string(e1) + " -> 1");
      b.apply(F, "fold", "m = " + std::to_string(mm) + ", n = " + std::to_string(nn));
      RationalMap LF = F.compose(L);
      std::vector<ProjAlgebraic> next = map_set(LF, cur);
      insert_orbit(next, image(F, AlgebraicNumber::rational(q)));
      cur = normalized(next);
      if (r) {
        r = *LF.eval(ProjRational(*r));
        for (const auto& x : cur)
          if (x && x->rational_value() != 0 && valuation(*r, p) >= valuation(x->rational_value(), p))
            throw InternalError("image of R lost its p-adic separation from E");
      }
    }
    auto S = rationals();
    if (S.size() == 2)
      b.apply(RationalMap::mobius(Rational(1) / (S[1] - S[0]), -S[0] / (S[1] - S[0]), 0, 1), "affine",
              abckit::to_string(S[0]) + " -> 0, " + abckit::to_string(S[1]) + " -> 1");
    else if (S.size() == 1 && S[0] != 0)
      b.apply(RationalMap::mobius(1, -S[0], 0, 1), "affine", abckit::to_string(S[0]) + " -> 0");
  }

  BelyiResult res{b.f, verify_belyi(b.f, E, R)};
  res.certificate.steps = std::move(b.steps);
  if (!res.certificate.ok()) {
    std::string msg = "constructed map failed verification:";
    for (const auto& s : res.certificate.failures) msg += " " + s + ";";
    throw VerificationFailed(msg);
  }
  return res;
}

std::vector<ProjAlgebraic> tripod_preimage(const RationalMap& f) {
  std::vector<ProjAlgebraic> out;
  for (const ProjRational& t : {ProjRational(Rational(0)), ProjRational(Rational(1)), ProjRational()})
    for (const auto& pt : fiber(f, t))
      insert_orbit(out, pt.orbit ? ProjAlgebraic(AlgebraicNumber{pt.orbit->monic(), 0}) : std::nullopt);
  return normalized(out);
}

std::vector<UniformStage> uniform_sequence(const std::vector<ProjAlgebraic>& E_in, int k_max,
                                           const BelyiOptions& opts) {
  std::vector<ProjAlgebraic> E = normalized(E_in);
  std::vector<UniformStage> out;
  out.push_back({build_belyi(E, {}, opts).map, {}});
  for (int k = 0; k < k_max; ++k) {
    std::vector<ProjAlgebraic> R = out.back().R;
    for (const auto& x : tripod_preimage(out.back().map)) {
      bool in_E = std::any_of(E.begin(), E.end(), [&](const ProjAlgebraic& e) { return same_orbit(e, x); });
      if (!in_E) insert_orbit(R, x);
    }
    R = normalized(R);
    out.push_back({build_belyi(E, R, opts).map, R});
  }
  return out;
}

}  // namespace abckit
