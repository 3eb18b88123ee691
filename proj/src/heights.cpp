#include "abckit/heights.hpp"

#include "abckit/errors.hpp"
#include "abckit/factor.hpp"

#include <set>
#include <sstream>

namespace abckit {

// ---------------------------------------------------------------------------
// AbcPoint

AbcPoint AbcPoint::make(FieldElement a, FieldElement b, FieldElement c) {
  if (a + b != c) throw InvalidInput("coordinates do not satisfy a + b = c");
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw InvalidInput("all coordinates are zero");
  return {std::move(a), std::move(b), std::move(c)};
}

AbcPoint AbcPoint::rational(const Integer& a, const Integer& b, const Integer& c) {
  FieldPtr q = NumberField::rationals();
  return make(FieldElement::rational(q, a), FieldElement::rational(q, b), FieldElement::rational(q, c));
}

AbcPoint AbcPoint::from_ratio(const FieldElement& x) {
  FieldElement one = FieldElement::rational(x.field(), 1);
  return make(x, one - x, one);
}

FieldElement AbcPoint::ratio() const {
  if (c.is_zero()) throw DomainError("ratio a/c with c = 0");
  return a / c;
}

AbcPoint AbcPoint::scaled(const FieldElement& x) const { return make(a * x, b * x, c * x); }

AbcPoint AbcPoint::in_field(const FieldPtr& K) const {
  auto move = [&](const FieldElement& z) { return FieldElement::rational(K, z.rational_value()); };
  return make(move(a), move(b), move(c));
}

std::string AbcPoint::to_string() const {
  return "(" + a.to_string() + " : " + b.to_string() + " : " + c.to_string() + ")";
}

// ---------------------------------------------------------------------------
// HeightValue

void HeightValue::add_log(const Integer& p, const Rational& q) {
  if (q == 0) return;
  Rational& slot = finite_[p];
  slot += q;
  if (slot == 0) finite_.erase(p);
}

HeightValue HeightValue::scaled(const Rational& q) const {
  HeightValue r = *this;
  for (auto it = r.finite_.begin(); it != r.finite_.end();) {
    it->second *= q;
    if (it->second == 0) it = r.finite_.erase(it);
    else ++it;
  }
  r.constant_ *= q;
  r.arch_ = arch_ * RealBall::from_rational(q, arch_.precision());
  return r;
}

HeightValue& HeightValue::operator+=(const HeightValue& other) {
  for (const auto& [p, q] : other.finite_) add_log(p, q);
  constant_ += other.constant_;
  arch_ = arch_ + other.arch_;
  return *this;
}

RealBall HeightValue::finite_ball(int precision) const {
  RealBall acc = RealBall::from_rational(constant_, precision);
  for (const auto& [p, q] : finite_)
    acc = acc + RealBall::from_rational(q, precision) * log(RealBall::from_integer(p, precision));
  return acc;
}

RealBall HeightValue::total(int precision) const { return finite_ball(precision) + arch_; }

std::string HeightValue::finite_string() const {
  if (finite_.empty()) return "0";
  std::ostringstream out;
  out << "log(";
  bool first = true;
  for (const auto& [p, q] : finite_) {
    if (!first) out << "·";
    first = false;
    out << abckit::to_string(p);
    if (q == 1) continue;
    if (q.get_den() == 1) out << "^" << abckit::to_string(q);
    else out << "^(" << abckit::to_string(q) << ")";
  }
  out << ")";
  return out.str();
}

std::string HeightValue::to_string(int precision) const {
  std::ostringstream out;
  bool any = false;
  if (constant_ != 0) {
    out << abckit::to_string(constant_);
    any = true;
  }
  if (!finite_.empty()) {
    if (any) out << " + ";
    out << finite_string();
    any = true;
  }
  if (!arch_.is_exact() || mpfr_sgn(arch_.center().get()) != 0) {
    if (any) out << " + ";
    out << "[" << arch_.to_string(12) << "]";
    any = true;
  }
  if (!any) out << "0";
  out << " = " << total(precision).to_string(15);
  return out.str();
}

// ---------------------------------------------------------------------------
// Heights and radicals

namespace {

RealBall arch_height(const std::vector<FieldElement>& coords, const HeightOptions& opts, int prec) {
  const auto& K = *coords.front().field();
  RealBall acc(prec);
  for (int k = 0; k < K.degree(); ++k) {
    auto idx = static_cast<std::size_t>(k);
    if (opts.spherical) {
      RealBall s(prec);
      for (const auto& z : coords) s = s + abs2(z.embed(idx, prec));
      acc = acc + mul_2si(log(s), -1);
    } else {
      std::optional<RealBall> m;
      for (const auto& z : coords) {
        RealBall a = abs(z.embed(idx, prec));
        m = m ? max(*m, a) : a;
      }
      acc = acc + log(*m);
    }
  }
  return acc;
}

bool is_sixth_root_point(const AbcPoint& P) {
  if (P.c.is_zero()) return false;
  FieldElement x = P.ratio();
  FieldElement one = FieldElement::rational(P.field(), 1);
  return (x * x - x + one).is_zero();
}

}  // namespace

HeightValue projective_height(const std::vector<FieldElement>& point, const HeightOptions& opts) {
  std::vector<FieldElement> coords;
  for (const auto& z : point)
    if (!z.is_zero()) coords.push_back(z);
  if (coords.empty()) throw InvalidInput("projective point with all coordinates zero");
  for (const auto& z : coords)
    if (!z.field()->same_as(*coords.front().field())) throw InvalidInput("coordinates from different fields");
  HeightValue h(opts.precision);
  const auto& K = *coords.front().field();
  for (const auto& p : common_support_primes(coords)) {
    for (const auto& ideal : K.split_prime(p)) {
      std::int64_t m = kInfiniteValuation;
      for (const auto& z : coords) m = std::min(m, valuation(ideal, z));
      h.add_log(p, Rational(-ideal.f) * Rational(static_cast<long>(m)));
    }
  }
  for (int prec = opts.precision;; prec *= 2) {
    try {
      h.arch() = arch_height(coords, opts, prec);
      return h;
    } catch (const PrecisionExhausted&) {
      if (prec * 2 > opts.max_precision) throw;
    }
  }
}

HeightValue global_height(const AbcPoint& P, const HeightOptions& opts) {
  return projective_height({P.a, P.b, P.c}, opts);
}

HeightValue global_radical(const AbcPoint& P, const HeightOptions& opts) {
  if (P.on_tripod()) throw DomainError("radical of a point on the tripod " + P.to_string());
  HeightValue r(opts.precision);
  if (opts.radical_exception && is_sixth_root_point(P)) return r;
  const auto& K = *P.field();
  r.constant() = K.degree();
  std::set<Integer> primes;
  for (const auto* z : {&P.a, &P.b, &P.c})
    for (const auto& p : support_primes(*z)) primes.insert(p);
  for (const auto& p : primes) {
    for (const auto& ideal : K.split_prime(p)) {
      std::int64_t va = valuation(ideal, P.a), vb = valuation(ideal, P.b), vc = valuation(ideal, P.c);
      if (va != vb || vb != vc) r.add_log(p, ideal.f);
    }
  }
  return r;
}

MinimalField minimal_field(const AbcPoint& P) {
  FieldPtr Q = NumberField::rationals();
  if (P.c.is_zero()) return {Q, FieldElement()};
  FieldElement x = P.ratio();
  if (x.is_rational()) return {Q, FieldElement::rational(Q, x.rational_value())};
  Poly mp = min_poly_of(x);
  if (mp.degree() == P.field()->degree()) return {P.field(), x};
  FieldPtr F = NumberField::create(mp);
  return {F, FieldElement::generator(F)};
}

namespace {

AbcPoint normalized_in_minimal_field(const AbcPoint& P, MinimalField& mf) {
  mf = minimal_field(P);
  if (P.c.is_zero()) {
    FieldPtr Q = mf.field;
    return AbcPoint::make(FieldElement::rational(Q, 1), FieldElement::rational(Q, -1), FieldElement::rational(Q, 0));
  }
  return AbcPoint::from_ratio(mf.x);
}

}  // namespace

HeightValue absolute_height_value(const AbcPoint& P, const HeightOptions& opts) {
  return global_height(P, opts).scaled(Rational(1, P.field()->degree()));
}

HeightValue absolute_radical_value(const AbcPoint& P, const HeightOptions& opts) {
  MinimalField mf;
  AbcPoint Q = normalized_in_minimal_field(P, mf);
  return global_radical(Q, opts).scaled(Rational(1, mf.field->degree()));
}

HeightValue log_different_value(const AbcPoint& P) {
  MinimalField mf;
  normalized_in_minimal_field(P, mf);
  HeightValue ld;
  Integer disc = mf.field->field_discriminant();
  if (disc == 1 || disc == -1) return ld;
  for (const auto& [p, k] : factor_integer(disc)) ld.add_log(p, Rational(k, mf.field->degree()));
  return ld;
}

RealBall absolute_height(const AbcPoint& P, const HeightOptions& opts) {
  return absolute_height_value(P, opts).total(opts.precision);
}

RealBall absolute_radical(const AbcPoint& P, const HeightOptions& opts) {
  return absolute_radical_value(P, opts).total(opts.precision);
}

RealBall log_different(const AbcPoint& P, const HeightOptions& opts) {
  return log_different_value(P).total(opts.precision);
}

// ---------------------------------------------------------------------------
// Divisors

DivisorSpec DivisorSpec::tripod() {
  return DivisorSpec({{Poly::x(), 1}, {Poly::linear_root(1), 1}, {std::nullopt, 1}});
}

DivisorSpec DivisorSpec::pullback(const RationalMap& f) {
  std::vector<DivisorEquation> eqs;
  for (const ProjRational& t : {ProjRational(Rational(0)), ProjRational(Rational(1)), ProjRational()})
    for (const auto& pt : fiber(f, t)) eqs.push_back({pt.orbit, pt.multiplicity});
  return DivisorSpec(std::move(eqs));
}

DivisorSpec DivisorSpec::reduced() const {
  std::vector<DivisorEquation> eqs;
  for (const auto& e : eqs_) {
    bool dup = false;
    for (const auto& r : eqs) dup |= (r.orbit == e.orbit);
    if (!dup) eqs.push_back({e.orbit, 1});
  }
  return DivisorSpec(std::move(eqs));
}

int DivisorSpec::degree() const {
  int d = 0;
  for (const auto& e : eqs_) d += e.multiplicity * (e.orbit ? e.orbit->degree() : 1);
  return d;
}

HeightValue radical_wrt_divisor(const FieldElement& x, const DivisorSpec& spec) {
  FieldPtr F;
  FieldElement xf;
  if (x.is_rational()) {
    F = NumberField::rationals();
    xf = FieldElement::rational(F, x.rational_value());
  } else {
    Poly mp = min_poly_of(x);
    if (mp.degree() == x.field()->degree()) {
      F = x.field();
      xf = x;
    } else {
      F = NumberField::create(mp);
      xf = FieldElement::generator(F);
    }
  }
  std::vector<FieldElement> values;
  for (const auto& eq : spec.equations()) {
    FieldElement v;
    if (eq.orbit) {
      Poly g = eq.orbit->primitive();
      v = RationalMap::polynomial(g).eval(xf);
      if (v.is_zero()) throw DomainError("point lies on the divisor");
    } else {
      if (xf.is_zero()) throw DomainError("evaluation of 1/x at x = 0");
      v = xf.inverse();
    }
    values.push_back(std::move(v));
  }
  std::set<Integer> primes;
  for (const auto& v : values)
    for (const auto& p : support_primes(v)) primes.insert(p);
  HeightValue r;
  for (const auto& p : primes) {
    for (const auto& ideal : F->split_prime(p)) {
      bool close = false;
      for (const auto& v : values) close |= valuation(ideal, v) > 0;
      if (close) r.add_log(p, ideal.f);
    }
  }
  return r.scaled(Rational(1, F->degree()));
}

}  // namespace abckit
