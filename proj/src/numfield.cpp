#include "abckit/numfield.hpp"

#include "abckit/errors.hpp"
#include "abckit/padic.hpp"
#include "abckit/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace abckit {

std::string PrimeIdeal::to_string() const {
  std::ostringstream out;
  out << "P(" << abckit::to_string(p) << "," << label << ";e=" << e << ",f=" << f << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (!field_) throw InvalidInput("field element without a field");
  auto d = static_cast<std::size_t>(field_->degree());
  if (coords.size() > d) {
    Poly r = Poly(std::move(coords)) % field_->min_poly();
    coords = r.coeffs();
  }
  for (auto& c : coords) c.canonicalize();
  coords.resize(d);
  coords_ = std::move(coords);
}

FieldElement FieldElement::rational(FieldPtr field, const Rational& q) {
  return FieldElement(std::move(field), std::vector<Rational>{q});
}

FieldElement FieldElement::generator(FieldPtr field) {
  if (field->degree() == 1) return rational(field, -field->min_poly().coeff(0));
  return FieldElement(std::move(field), std::vector<Rational>{0, 1});
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw InvalidInput("element is not rational: " + to_string());
  return coords_[0];
}

Poly FieldElement::as_poly() const { return Poly(coords_); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

static void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    throw InvalidInput("elements belong to different fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  FieldElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  FieldElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  if (a.is_rational()) {
    FieldElement r = b;
    for (auto& c : r.coords_) c *= a.coords_[0];
    return r;
  }
  if (b.is_rational()) return b * a;
  Poly prod = (a.as_poly() * b.as_poly()) % a.field_->min_poly();
  return FieldElement(a.field_, prod.coeffs());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (is_rational()) return rational(field_, 1 / coords_[0]);
  auto [g, s, t] = xgcd(as_poly(), field_->min_poly());
  if (g.degree() != 0) throw InternalError("defining polynomial is not irreducible");
  return FieldElement(field_, s.coeffs());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_ && !(a.field_ && b.field_ && a.field_->same_as(*b.field_))) return false;
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::pow(long n) const { return pow(Integer(n)); }

FieldElement FieldElement::pow(const Integer& n) const {
  if (n < 0) return inverse().pow(Integer(-n));
  FieldElement result = rational(field_, 1);
  FieldElement base = *this;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

Rational FieldElement::norm() const {
  if (is_rational()) return rpow(coords_[0], field_->degree());
  return resultant(field_->min_poly(), as_poly());
}

ComplexBall FieldElement::embed(std::size_t k, int precision) const {
  if (is_rational()) return ComplexBall::from_rational(coords_[0], precision);
  auto emb = field_->embeddings(precision);
  if (k >= emb.size()) throw InvalidInput("embedding index out of range");
  return as_poly().eval(emb[k]);
}

std::string FieldElement::to_string(const std::string& var) const {
  if (is_rational()) return abckit::to_string(coords_[0]);
  return as_poly().to_string(var);
}

// ---------------------------------------------------------------------------
// NumberField

FieldPtr NumberField::create(const Poly& min_poly, std::optional<Integer> disc_override) {
  if (min_poly.degree() < 1) throw InvalidInput("defining polynomial must have positive degree");
  if (min_poly.degree() > 1 && !is_irreducible(min_poly))
    throw InvalidInput("defining polynomial " + min_poly.to_string() + " is reducible over Q");
  std::shared_ptr<NumberField> K(new NumberField());
  K->min_poly_ = min_poly.monic();
  K->disc_override_ = std::move(disc_override);
  int d = K->min_poly_.degree();
  Integer s = 1;
  for (const auto& c : K->min_poly_.coeffs()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), c.get_den_mpz_t());
  K->scale_ = s;
  K->model_.resize(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    Rational c = K->min_poly_.coeff(static_cast<std::size_t>(i)) * Rational(ipow(s, static_cast<unsigned long>(d - i)));
    K->model_[static_cast<std::size_t>(i)] = c.get_num();
  }
  K->poly_disc_ = d == 1 ? Integer(1) : Integer(discriminant(zpoly::to_poly(K->model_)).get_num());
  K->r1_ = d == 1 ? 1 : count_real_roots(isolate_complex_roots(K->min_poly_, 64));
  return K;
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create(Poly::x());
  return q;
}

std::vector<ComplexBall> NumberField::embeddings(int precision) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = embedding_cache_.find(precision);
  if (it != embedding_cache_.end()) return it->second;
  auto roots = isolate_complex_roots(min_poly_, precision);
  embedding_cache_.emplace(precision, roots);
  return roots;
}

std::vector<PrimeIdeal> NumberField::split_prime(const Integer& p) const { return split_prime(p, kBasePadicDigits); }

std::vector<PrimeIdeal> NumberField::split_prime(const Integer& p, unsigned long digits) const {
  if (!is_prime(p)) throw InvalidInput(abckit::to_string(p) + " is not prime");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = split_cache_.find(p);
    if (it != split_cache_.end()) {
      bool enough = std::all_of(it->second.begin(), it->second.end(),
                                [&](const PrimeIdeal& P) { return P.precision >= digits; });
      if (enough) return it->second;
    }
  }
  std::vector<PrimeIdeal> ideals;
  if (degree() == 1) {
    PrimeIdeal P;
    P.p = p;
    P.local_factor = model_;
    P.precision = std::numeric_limits<unsigned long>::max() / 2;
    ideals.push_back(P);
  } else {
    unsigned long n = std::max(digits, kBasePadicDigits);
    std::vector<LocalFactor> local;
    for (int attempt = 0;; ++attempt) {
      try {
        local = padic_factor(model_, p, n);
        break;
      } catch (const InsufficientPrecision&) {
        if (attempt >= 4)
          throw UnsupportedSplitting("p-adic precision budget exhausted splitting " + abckit::to_string(p) +
                                     " in " + min_poly_.to_string());
        n *= 2;
      }
    }
    int total = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
      PrimeIdeal P;
      P.p = p;
      P.e = local[i].e;
      P.f = local[i].f;
      P.label = static_cast<int>(i);
      P.local_factor = local[i].poly;
      P.precision = local[i].precision;
      total += P.e * P.f;
      ideals.push_back(std::move(P));
    }
    if (total != degree()) throw InternalError("sum of e*f differs from the degree");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  split_cache_[p] = ideals;
  return ideals;
}

Integer NumberField::field_discriminant() const {
  if (disc_override_) return *disc_override_;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (field_disc_cache_) return *field_disc_cache_;
  }
  Integer disc;
  int d = degree();
  if (d == 1) {
    disc = 1;
  } else if (d == 2) {
    const Rational& b = min_poly_.coeff(1);
    const Rational& c = min_poly_.coeff(0);
    Rational D = b * b - 4 * c;
    Integer n = D.get_num() * D.get_den();
    // Squarefree kernel with sign.
    Integer core = n < 0 ? Integer(-1) : Integer(1);
    for (const auto& [q, k] : factor_integer(n))
      if (k % 2 == 1) core *= q;
    Integer r = core % 4;
    if (r < 0) r += 4;
    disc = r == 1 ? core : 4 * core;
  } else {
    Integer D = poly_disc_;
    disc = D < 0 ? Integer(-1) : Integer(1);
    for (const auto& [q, k] : factor_integer(D)) {
      if (k == 1) {
        disc *= q;
        continue;
      }
      unsigned long v = 0;
      for (const auto& P : split_prime(q)) {
        if (Integer(P.e) % q == 0)
          throw WildRamification("wild ramification at p = " + abckit::to_string(q) + " in " + min_poly_.to_string());
        v += static_cast<unsigned long>(P.f * (P.e - 1));
      }
      disc *= ipow(q, v);
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  field_disc_cache_ = disc;
  return disc;
}

// ---------------------------------------------------------------------------
// Valuations

namespace {

// a = A(s theta) / D with A integral.
std::pair<ZPoly, Integer> integral_repr(const FieldElement& a) {
  const auto& K = *a.field();
  const Integer& s = K.scale();
  std::vector<Rational> c = a.coords();
  Integer D = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] /= Rational(ipow(s, i));
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c[i].get_den_mpz_t());
  }
  ZPoly A(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) A[i] = Rational(c[i] * Rational(D)).get_num();
  zpoly::trim(A);
  return {A, D};
}

}  // namespace

std::int64_t valuation(const PrimeIdeal& P, const FieldElement& a) {
  if (a.is_zero()) return kInfiniteValuation;
  if (a.is_rational()) return P.e * valuation(a.coords()[0], P.p);
  auto [A, D] = integral_repr(a);
  std::int64_t k = kInfiniteValuation;
  for (const auto& c : A)
    if (c != 0) k = std::min(k, valuation(c, P.p));
  Integer pk = ipow(P.p, static_cast<unsigned long>(k));
  for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
  std::int64_t base = P.e * (k - valuation(D, P.p));
  Poly Ap = zpoly::to_poly(A);

  PrimeIdeal cur = P;
  for (int attempt = 0; attempt <= 4; ++attempt) {
    Rational res = resultant(zpoly::to_poly(cur.local_factor), Ap);
    std::int64_t v = res == 0 ? kInfiniteValuation : valuation(res, P.p);
    if (v < static_cast<std::int64_t>(cur.precision)) {
      if (v % P.f != 0) throw InternalError("norm valuation not divisible by the residue degree");
      return base + v / P.f;
    }
    auto ideals = a.field()->split_prime(P.p, cur.precision * 2);
    cur = ideals.at(static_cast<std::size_t>(P.label));
  }
  throw PrecisionExhausted("could not certify the valuation at " + P.to_string());
}

Poly min_poly_of(const FieldElement& a) {
  if (a.is_rational()) return Poly::linear_root(a.coords()[0]);
  int d = a.field()->degree();
  std::vector<std::vector<Rational>> powers;
  FieldElement pw = FieldElement::rational(a.field(), 1);
  powers.push_back(pw.coords());
  for (int k = 1; k <= d; ++k) {
    pw = pw * a;
    // Solve sum_{i<k} x_i powers[i] = pw.
    std::size_t rows = static_cast<std::size_t>(d);
    std::size_t cols = static_cast<std::size_t>(k);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = powers[c][r];
      m[r][cols] = pw.coords()[r];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
      std::size_t piv = row;
      while (piv < rows && m[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(m[piv], m[row]);
      Rational inv = 1 / m[row][c];
      for (auto& x : m[row]) x *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == row || m[r][c] == 0) continue;
        Rational fct = m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] -= fct * m[row][j];
      }
      pivots.push_back(c);
      ++row;
    }
    bool consistent = true;
    for (std::size_t r = row; r < rows; ++r)
      if (m[r][cols] != 0) consistent = false;
    if (consistent) {
      std::vector<Rational> coeffs(cols + 1);
      for (std::size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = -m[i][cols];
      coeffs[cols] = 1;
      return Poly(std::move(coeffs));
    }
    powers.push_back(pw.coords());
  }
  throw InternalError("no linear dependency among powers");
}

std::vector<Integer> support_primes(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("support of zero");
  auto [A, D] = integral_repr(a);
  const auto& K = *a.field();
  Rational n = resultant(zpoly::to_poly(K.integral_model()), zpoly::to_poly(A));
  std::set<Integer> primes;
  for (const auto& [p, k] : factor_integer(D)) primes.insert(p);
  for (const auto& [p, k] : factor_integer(n.get_num())) primes.insert(p);
  return {primes.begin(), primes.end()};
}

std::vector<Integer> common_support_primes(const std::vector<FieldElement>& elems) {
  std::set<Integer> primes;
  Integer g = 0;
  for (const auto& a : elems) {
    if (a.is_zero()) continue;
    auto [A, D] = integral_repr(a);
    for (const auto& [p, k] : factor_integer(D)) primes.insert(p);
    Rational n = resultant(zpoly::to_poly(a.field()->integral_model()), zpoly::to_poly(A));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_num_mpz_t());
  }
  if (g != 0 && g != 1)
    for (const auto& [p, k] : factor_integer(g)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

}  // namespace abckit
