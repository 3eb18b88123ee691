#include "abckit/documents.hpp"

#include "abckit/errors.hpp"

#include <cctype>
#include <vector>

namespace abckit {

namespace {

std::string mpfr_text(const char* fmt, int digits, mpfr_srcptr x) {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), fmt, digits, x);
  return buf.data();
}

std::string decision_text(Decision d) { return to_string(d); }

Json list_of(const std::vector<ProjAlgebraic>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(proj_algebraic_to_json(x));
  return out;
}

std::string branch_text(ArchBranch b) { return b == ArchBranch::Contraction ? "contraction" : "divergence"; }

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.find('/') != std::string::npos) return parse_rational(s);
  if (s.empty()) throw InvalidInput("empty number");

  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  Integer digits = 0;
  long scale = 0;
  bool any = false, dot = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (dot) throw InvalidInput("malformed number: " + s);
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = digits * 10 + (s[i] - '0');
      if (dot) --scale;
      any = true;
    } else {
      throw InvalidInput("malformed number: " + s);
    }
  }
  if (!any) throw InvalidInput("malformed number: " + s);
  if (i < s.size()) {
    std::string ex = s.substr(i + 1);
    if (ex.empty()) throw InvalidInput("malformed number: " + s);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(ex, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed number: " + s);
    }
    if (used != ex.size() || e > 100000 || e < -100000) throw InvalidInput("malformed number: " + s);
    scale += e;
  }
  Rational q(digits);
  if (scale > 0) q *= Rational(ipow(10, static_cast<unsigned long>(scale)));
  if (scale < 0) q /= Rational(ipow(10, static_cast<unsigned long>(-scale)));
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_number_float()) return parse_decimal(j.dump());
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  throw InvalidInput("expected a number, got " + j.dump());
}

FieldPtr field_from_json(const Json& j) {
  if (j.is_null()) return NumberField::rationals();
  if (!j.is_object() || !j.contains("min_poly")) throw InvalidInput("field document needs \"min_poly\"");
  const Json& mp = j.at("min_poly");
  if (!mp.is_array() || mp.size() < 2) throw InvalidInput("\"min_poly\" must list at least two coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : mp) coeffs.push_back(rational_from_json(c));
  Poly f(coeffs);
  if (f.degree() < 1) throw InvalidInput("\"min_poly\" must have positive degree");
  std::optional<Integer> disc;
  if (j.contains("disc_override") && !j.at("disc_override").is_null()) {
    Rational d = rational_from_json(j.at("disc_override"));
    if (d.get_den() != 1 || d == 0) throw InvalidInput("\"disc_override\" must be a nonzero integer");
    disc = d.get_num();
  }
  if (f.degree() == 1 && !disc) return NumberField::rationals();
  return NumberField::create(f, disc);
}

Json field_to_json(const NumberField& K) {
  Json j;
  j["min_poly"] = poly_to_json(K.min_poly());
  if (K.disc_override()) j["disc_override"] = to_string(*K.disc_override());
  return j;
}

FieldElement element_from_json(const FieldPtr& K, const Json& j) {
  if (!j.is_array()) return FieldElement::rational(K, rational_from_json(j));
  if (j.empty() || static_cast<int>(j.size()) > K->degree())
    throw InvalidInput("element has " + std::to_string(j.size()) + " coordinates in a field of degree " +
                       std::to_string(K->degree()));
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  coords.resize(static_cast<std::size_t>(K->degree()), Rational(0));
  return FieldElement(K, coords);
}

Json element_to_json(const FieldElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(to_string(c));
  return out;
}

ArithmeticDivisor divisor_from_json(const FieldPtr& K, const Json& j) {
  if (!j.is_object()) throw InvalidInput("divisor document must be an object");
  ArithmeticDivisor D(K);
  if (j.contains("finite")) {
    for (const auto& e : j.at("finite")) {
      if (!e.contains("p") || !e.contains("D")) throw InvalidInput("finite entry needs \"p\" and \"D\"");
      Rational p = rational_from_json(e.at("p"));
      if (p.get_den() != 1) throw InvalidInput("\"p\" must be an integer");
      D.add_finite(p.get_num(), int_field(e, "D", 1), int_field(e, "label", 0));
    }
  }
  if (j.contains("arch") && !j.at("arch").is_null()) {
    const Json& a = j.at("arch");
    if (!a.contains("D")) throw InvalidInput("arch entry needs \"D\"");
    int k = int_field(a, "embedding", 0);
    if (k < 0) throw InvalidInput("embedding index must be nonnegative");
    D.set_arch(static_cast<std::size_t>(k), rational_from_json(a.at("D")));
  }
  return D;
}

TripodNeighborhood neighborhood_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("neighborhood document must be an object");
  std::vector<NonarchEntry> nonarch;
  std::vector<ArchEntry> arch;
  if (j.contains("nonarch")) {
    for (const auto& e : j.at("nonarch")) {
      if (!e.contains("p") || !e.contains("g")) throw InvalidInput("nonarch entry needs \"p\" and \"g\"");
      Rational p = rational_from_json(e.at("p"));
      if (p.get_den() != 1) throw InvalidInput("\"p\" must be an integer");
      nonarch.push_back({p.get_num(), int_field(e, "g", 0)});
    }
  }
  if (j.contains("arch")) {
    for (const auto& e : j.at("arch")) {
      if (!e.contains("g")) throw InvalidInput("arch entry needs \"g\"");
      ArchEntry a;
      if (e.contains("embedding") && !e.at("embedding").is_null()) {
        int k = int_field(e, "embedding", 0);
        if (k < 0) throw InvalidInput("embedding index must be nonnegative");
        a.embedding = static_cast<std::size_t>(k);
      }
      a.g = rational_from_json(e.at("g"));
      arch.push_back(a);
    }
  }
  return TripodNeighborhood(std::move(nonarch), std::move(arch));
}

ProjAlgebraic proj_algebraic_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "oo") return std::nullopt;
  }
  if (j.is_object()) {
    if (!j.contains("min_poly")) throw InvalidInput("algebraic number needs \"min_poly\"");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("min_poly")) coeffs.push_back(rational_from_json(c));
    return AlgebraicNumber::root_of(Poly(coeffs), int_field(j, "root_index", 0));
  }
  return AlgebraicNumber::rational(rational_from_json(j));
}

Json proj_algebraic_to_json(const ProjAlgebraic& x) {
  if (!x) return "inf";
  if (x->is_rational()) return to_string(x->rational_value());
  Json j;
  j["min_poly"] = poly_to_json(x->min_poly);
  j["root_index"] = x->root_index;
  return j;
}

std::vector<ProjAlgebraic> point_list_from_json(const Json& j) {
  std::vector<ProjAlgebraic> out;
  if (!j.is_array()) {
    out.push_back(proj_algebraic_from_json(j));
    return out;
  }
  for (const auto& e : j) out.push_back(proj_algebraic_from_json(e));
  return out;
}

std::string format_mid(const RealBall& x, int digits) { return mpfr_text("%.*RNg", digits, x.center().get()); }

std::string format_rad(const RealBall& x) { return mpfr_text("%.*RUe", 2, x.radius().get()); }

Json ball_to_json(const RealBall& x, int digits) {
  Json j;
  j["mid"] = format_mid(x, digits);
  j["rad"] = format_rad(x);
  return j;
}

Json height_value_to_json(const HeightValue& v, int precision) {
  Json j;
  j["finite"] = v.finite_string();
  if (v.constant() != 0) j["constant"] = to_string(v.constant());
  j["arch"] = ball_to_json(v.arch());
  j["value"] = ball_to_json(v.total(precision));
  return j;
}

Json poly_to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

Json report_to_json(const AbcPoint& P, const ConjectureReport& rep) {
  Json j;
  j["point"] = P.to_string();
  j["field"] = P.field()->degree() == 1 ? Json("Q") : field_to_json(*P.field());
  j["degree"] = rep.degree;
  j["height_K"] = height_value_to_json(rep.height_K, rep.precision);
  j["radical_K"] = height_value_to_json(rep.radical_K, rep.precision);
  j["h"] = ball_to_json(rep.h);
  j["r"] = ball_to_json(rep.r);
  j["ld"] = ball_to_json(rep.ld);
  j["quality"] = ball_to_json(rep.quality);
  j["eps_needed"] = rep.eps_needed ? ball_to_json(*rep.eps_needed) : Json(nullptr);
  j["psi_residual"] = ball_to_json(rep.psi_residual);
  j["uniform_residual"] = ball_to_json(rep.uniform_residual);
  j["falsifiable_margin"] = ball_to_json(rep.falsifiable_margin);
  j["effective"] = decision_text(rep.effective);
  j["falsifiable"] = decision_text(rep.falsifiable);
  j["good_abc"] = decision_text(rep.good_abc);
  j["challenge"] = rep.challenge();
  j["precision"] = rep.precision;
  return j;
}

Json transform_to_json(const TransformResult& t) {
  Json j;
  j["n"] = to_string(t.n);
  j["n0"] = to_string(t.n0);
  j["bound_C"] = ball_to_json(t.bound_C);
  j["n_le_C"] = [&]() -> Json {
    auto le = less_equal(RealBall::from_integer(t.n, t.bound_C.precision()), t.bound_C);
    return le ? Json(*le) : Json("undecided");
  }();
  j["field"] = t.A.field()->degree() == 1 ? Json("Q") : field_to_json(*t.A.field());
  j["A_bits"] = [&] {
    std::size_t bits = 0;
    for (const auto& c : t.A.coords())
      bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2));
    return bits;
  }();
  Json fin = Json::array();
  for (const auto& c : t.finite) {
    Json e;
    e["p"] = to_string(c.prime.p);
    e["label"] = c.prime.label;
    e["e"] = c.prime.e;
    e["f"] = c.prime.f;
    e["D"] = c.D;
    e["condition"] = to_string(c.kind);
    e["valuation"] = c.value == kInfiniteValuation ? Json("inf") : Json(c.value);
    fin.push_back(e);
  }
  j["finite"] = fin;
  if (t.arch) {
    Json e;
    e["embedding"] = t.arch->embedding;
    e["D"] = to_string(t.arch->D);
    e["condition"] = to_string(t.arch->kind);
    e["branch"] = branch_text(t.arch->branch);
    e["m"] = t.arch->m;
    e["value"] = ball_to_json(t.arch->value);
    e["precision"] = t.arch->precision;
    j["arch"] = e;
  } else {
    j["arch"] = nullptr;
  }
  return j;
}

Json belyi_to_json(const BelyiResult& b) {
  Json j;
  j["degree"] = b.map.degree();
  j["map"] = {{"num", poly_to_json(b.map.num())}, {"den", poly_to_json(b.map.den())}};
  const auto& c = b.certificate;
  Json cert;
  cert["ok"] = c.ok();
  cert["critical_values"] = list_of(c.critical_values);
  cert["image_of_E"] = list_of(c.image_of_E);
  cert["image_of_R"] = list_of(c.image_of_R);
  cert["offending"] = list_of(c.offending);
  cert["failures"] = c.failures;
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back({{"kind", s.kind}, {"detail", s.detail}, {"degree", s.map.degree()}});
  cert["steps"] = steps;
  j["certificate"] = cert;
  return j;
}

Json restricted_to_json(const RestrictedReport& rep) {
  Json j;
  j["qualifies"] = decision_text(rep.qualifies);
  Json ev = Json::array();
  for (const auto& e : rep.evidence)
    ev.push_back({{"place", e.place}, {"inside", decision_text(e.inside)}, {"detail", e.detail}});
  j["evidence"] = ev;
  j["intro_form"] = rep.intro_form ? Json(*rep.intro_form) : Json(nullptr);
  return j;
}

}  // namespace abckit
