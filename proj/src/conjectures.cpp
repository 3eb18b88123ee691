#include "abckit/conjectures.hpp"

#include <algorithm>
#include <sstream>

namespace abckit {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Holds: return "holds";
    case Decision::Fails: return "fails";
    case Decision::Undecided: return "undecided";
    case Decision::NotApplicable: return "n/a";
  }
  return "?";
}

ErrorFunction ErrorFunction::affine(const Rational& eps, const Rational& M) {
  if (eps < 0) throw InvalidInput("error function: negative eps");
  ErrorFunction f;
  f.kind_ = Kind::Affine;
  f.table_ = {{eps, M}};
  return f;
}

ErrorFunction ErrorFunction::envelope(std::vector<std::pair<Rational, Rational>> table) {
  if (table.empty()) throw InvalidInput("error function: empty envelope table");
  for (const auto& [eps, M] : table)
    if (eps < 0) throw InvalidInput("error function: negative eps");
  std::sort(table.begin(), table.end());
  ErrorFunction f;
  f.kind_ = Kind::Envelope;
  f.table_ = std::move(table);
  return f;
}

ErrorFunction ErrorFunction::sqrt_form(const Rational& c) {
  if (c < 0) throw InvalidInput("error function: negative coefficient");
  ErrorFunction f;
  f.kind_ = Kind::Sqrt;
  f.coeff_ = c;
  return f;
}

RealBall ErrorFunction::operator()(const RealBall& h) const {
  int prec = h.precision();
  if (kind_ == Kind::Sqrt) return RealBall::from_rational(coeff_, prec) * sqrt_nonneg(h);
  std::optional<RealBall> best;
  for (const auto& [eps, M] : table_) {
    RealBall v = RealBall::from_rational(eps, prec) * h + RealBall::from_rational(M, prec);
    best = best ? min(*best, v) : v;
  }
  return *best;
}

std::string ErrorFunction::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Sqrt:
      os << abckit::to_string(coeff_) << "*sqrt(h)";
      break;
    case Kind::Affine:
      os << abckit::to_string(table_[0].first) << "*h+" << abckit::to_string(table_[0].second);
      break;
    case Kind::Envelope:
      os << "min(";
      for (std::size_t i = 0; i < table_.size(); ++i)
        os << (i ? "," : "") << abckit::to_string(table_[i].first) << "*h+" << abckit::to_string(table_[i].second);
      os << ")";
      break;
  }
  return os.str();
}

namespace {

Decision from_optional(std::optional<bool> b) {
  if (!b) return Decision::Undecided;
  return *b ? Decision::Holds : Decision::Fails;
}

bool is_rational_point(const AbcPoint& P) {
  return P.a.is_rational() && P.b.is_rational() && P.c.is_rational();
}

AbcPoint as_rational_point(const AbcPoint& P) {
  FieldPtr Q = NumberField::rationals();
  return AbcPoint::make(FieldElement::rational(Q, P.a.rational_value()),
                        FieldElement::rational(Q, P.b.rational_value()),
                        FieldElement::rational(Q, P.c.rational_value()));
}

Decision good_abc_at(const AbcPoint& Q, int prec, const HeightOptions& base) {
  HeightOptions opts = base;
  opts.precision = prec;
  RealBall h = global_height(Q, opts).total(prec);
  RealBall r = global_radical(Q, opts).total(prec);
  RealBall one = RealBall::from_integer(1, prec);
  auto small = less_equal(h, one);
  if (!small) return Decision::Undecided;
  if (*small) return Decision::NotApplicable;
  RealBall rhs = r + RealBall::from_integer(6, prec) * sqrt_nonneg(h) / log(h);
  return from_optional(less_equal(rhs, h));
}

ConjectureReport evaluate_at(const AbcPoint& P, int prec, const HeightOptions& base) {
  HeightOptions opts = base;
  opts.precision = prec;
  ConjectureReport rep;
  rep.precision = prec;
  rep.degree = P.field()->degree();
  rep.height_K = global_height(P, opts);
  rep.radical_K = global_radical(P, opts);
  RealBall hK = rep.height_K.total(prec), rK = rep.radical_K.total(prec);
  RealBall d = RealBall::from_integer(rep.degree, prec);
  rep.h = hK / d;
  rep.r = absolute_radical(P, opts);
  rep.ld = log_different(P, opts);
  if (rep.r.is_positive()) rep.quality = rep.h / rep.r;
  if (hK.is_positive()) rep.eps_needed = (hK - rK) / hK;
  rep.psi_residual = rK + d * ErrorFunction::half_preset()(rep.h) - hK;
  rep.uniform_residual = rep.h - rep.ld - rep.r;
  RealBall four = RealBall::from_integer(4, prec);
  rep.falsifiable_margin =
      RealBall::from_integer(2, prec) + sqrt_nonneg(rep.ld + rep.r + four) - sqrt_nonneg(rep.h);
  rep.effective = from_optional(less_equal(RealBall(prec), rep.psi_residual));
  rep.falsifiable = from_optional(less_equal(RealBall(prec), rep.falsifiable_margin));
  if (is_rational_point(P)) rep.good_abc = good_abc_at(as_rational_point(P), prec, base);
  return rep;
}

}  // namespace

ConjectureReport evaluate(const AbcPoint& P, const HeightOptions& opts) {
  if (P.on_tripod()) throw DomainError("evaluate: point lies on the tripod");
  ConjectureReport rep = evaluate_at(P, opts.precision, opts);
  for (int prec = opts.precision * 2; rep.undecided() && prec <= opts.max_precision; prec *= 2)
    rep = evaluate_at(P, prec, opts);
  return rep;
}

Decision check_effective(const AbcPoint& P, const ErrorFunction& psi, const HeightOptions& opts) {
  int d = P.field()->degree();
  auto res = decide_with_escalation(opts, [&](int prec) {
    HeightOptions o = opts;
    o.precision = prec;
    RealBall hK = global_height(P, o).total(prec);
    RealBall rK = global_radical(P, o).total(prec);
    RealBall db = RealBall::from_integer(d, prec);
    return less_equal(hK, rK + db * psi(hK / db));
  });
  return from_optional(res);
}

Decision good_abc(const AbcPoint& P, const HeightOptions& opts) {
  if (!is_rational_point(P)) return Decision::NotApplicable;
  AbcPoint Q = as_rational_point(P);
  Decision d = Decision::Undecided;
  for (int prec = opts.precision; d == Decision::Undecided && prec <= opts.max_precision; prec *= 2) {
    try {
      d = good_abc_at(Q, prec, opts);
    } catch (const PrecisionExhausted&) {
    }
  }
  return d;
}

GoodAbcScan good_abc_scan(const std::vector<AbcPoint>& corpus, const HeightOptions& opts) {
  GoodAbcScan out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    switch (good_abc(corpus[i], opts)) {
      case Decision::Holds: out.good.push_back(i); break;
      case Decision::Undecided: out.undecided.push_back(i); break;
      case Decision::NotApplicable: out.skipped.push_back(i); break;
      case Decision::Fails: break;
    }
  }
  return out;
}

}  // namespace abckit
