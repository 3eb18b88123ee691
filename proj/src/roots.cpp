#include "abckit/roots.hpp"

#include "abckit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abckit {

namespace {

constexpr int kDoublings = 4;
constexpr int kGuardBits = 32;

ComplexBall point(const ComplexBall& z) {
  RealBall re = z.real(), im = z.imag();
  RealBall a = RealBall::from_endpoints(re.center(), re.center(), re.precision());
  RealBall b = RealBall::from_endpoints(im.center(), im.center(), im.precision());
  return {a, b};
}

ComplexBall from_doubles(double re, double im, int prec) {
  return {RealBall::from_double(re, prec), RealBall::from_double(im, prec)};
}

// Rough upper bound on the root moduli (Fujiwara), in log2.
double log2_root_bound(const Poly& f) {
  int n = f.degree();
  auto log2abs = [](const Rational& q) {
    long e1 = 0, e2 = 0;
    double m1 = mpz_get_d_2exp(&e1, q.get_num_mpz_t());
    double m2 = mpz_get_d_2exp(&e2, q.get_den_mpz_t());
    return std::log2(std::fabs(m1)) + static_cast<double>(e1) - std::log2(m2) - static_cast<double>(e2);
  };
  double lead = log2abs(f.leading());
  double best = -1e300;
  for (int k = 0; k < n; ++k) {
    const Rational& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    double v = (log2abs(c) - lead) / (n - k);
    if (k == 0) v -= 1.0 / n;
    best = std::max(best, v);
  }
  return best + 1.0;
}

struct Attempt {
  bool ok = false;
  std::vector<ComplexBall> roots;
};

Attempt try_isolate(const Poly& f, int wp) {
  int n = f.degree();
  Poly df = f.derivative();
  double lr = log2_root_bound(f);
  double radius = std::exp2(std::clamp(lr, -1000.0, 1000.0));
  std::vector<ComplexBall> z;
  for (int k = 0; k < n; ++k) {
    double ang = 2 * std::numbers::pi * k / n + 0.4;
    z.push_back(from_doubles(radius * std::cos(ang) * 0.9, radius * std::sin(ang) * 0.9, wp));
  }

  // Aberth iteration on exact centers.
  RealBall tol = mul_2si(RealBall::from_rational(1, wp), -(wp - 8));
  int max_iter = 60 + 8 * n + wp / 4;
  for (int it = 0; it < max_iter; ++it) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      ComplexBall fi = f.eval(z[i]);
      ComplexBall di = df.eval(z[i]);
      if (point(di).contains_zero()) {
        z[i] = point(z[i] + from_doubles(1e-3, 1e-3, wp));
        converged = false;
        continue;
      }
      ComplexBall w = point(point(fi) / point(di));
      ComplexBall sum(wp);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        ComplexBall diff = point(z[i] - z[j]);
        if (diff.contains_zero()) continue;
        sum = point(sum + point(ComplexBall::from_rational(1, wp) / diff));
      }
      ComplexBall denom = point(ComplexBall::from_rational(1, wp) - point(w * sum));
      if (denom.contains_zero()) continue;
      ComplexBall step = point(w / denom);
      z[i] = point(z[i] - step);
      RealBall scale = abs(z[i]) + RealBall::from_rational(1, wp);
      if (!less(abs(step), tol * scale).value_or(false)) converged = false;
    }
    if (converged) break;
  }

  // Snap near-real approximations onto the axis and force conjugate symmetry.
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<ComplexBall> reals, pairs;
  RealBall snap = mul_2si(RealBall::from_rational(1, wp), -(wp / 2));
  for (int i = 0; i < n; ++i) {
    RealBall scale = abs(z[i]) + RealBall::from_rational(1, wp);
    if (less(abs(z[i].imag()), snap * scale).value_or(false)) {
      used[static_cast<std::size_t>(i)] = true;
      reals.emplace_back(point(ComplexBall(z[i].real(), RealBall(wp))));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    int best = -1;
    double bestd = 0;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      double dr = z[i].real().mid() - z[j].real().mid();
      double di = z[i].imag().mid() + z[j].imag().mid();
      double d = std::hypot(dr, di);
      if (best < 0 || d < bestd) {
        best = j;
        bestd = d;
      }
    }
    if (best < 0) return {};
    used[static_cast<std::size_t>(best)] = true;
    ComplexBall up = z[i].imag().mid() > 0 ? z[i] : conj(z[i]);
    pairs.push_back(point(up));
    pairs.push_back(point(conj(up)));
  }
  if (static_cast<int>(reals.size() + pairs.size()) != n) return {};
  std::sort(reals.begin(), reals.end(),
            [](const ComplexBall& a, const ComplexBall& b) { return mpfr_less_p(a.real().center().get(), b.real().center().get()); });
  std::vector<std::size_t> order(pairs.size() / 2);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = pairs[2 * a];
    const auto& y = pairs[2 * b];
    int c = mpfr_cmp(x.real().center().get(), y.real().center().get());
    if (c != 0) return c < 0;
    return mpfr_less_p(x.imag().center().get(), y.imag().center().get()) != 0;
  });
  std::vector<ComplexBall> centers = reals;
  for (auto i : order) {
    centers.push_back(pairs[2 * i]);
    centers.push_back(pairs[2 * i + 1]);
  }

  // Inclusion disks: D(z_i, n |f(z_i) / (lc prod_{j != i} (z_i - z_j))|).
  RealBall nball = RealBall::from_integer(n, wp);
  ComplexBall lc = ComplexBall::from_rational(f.leading(), wp);
  std::vector<RealBall> rad;
  for (int i = 0; i < n; ++i) {
    ComplexBall prod = lc;
    for (int j = 0; j < n; ++j)
      if (j != i) prod = prod * (centers[static_cast<std::size_t>(i)] - centers[static_cast<std::size_t>(j)]);
    if (prod.contains_zero()) return {};
    ComplexBall w = f.eval(centers[static_cast<std::size_t>(i)]) / prod;
    RealBall r = nball * abs(w);
    rad.push_back(RealBall::from_endpoints(r.upper(), r.upper(), wp));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RealBall dist = abs(centers[static_cast<std::size_t>(i)] - centers[static_cast<std::size_t>(j)]);
      if (!less(rad[static_cast<std::size_t>(i)] + rad[static_cast<std::size_t>(j)], dist).value_or(false)) return {};
    }

  Attempt a;
  a.ok = true;
  for (int i = 0; i < n; ++i) {
    const auto& c = centers[static_cast<std::size_t>(i)];
    BigFloat r = rad[static_cast<std::size_t>(i)].upper();
    BigFloat lo(wp + 16), hi(wp + 16);
    mpfr_sub(lo.get(), c.real().center().get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), c.real().center().get(), r.get(), MPFR_RNDU);
    RealBall re = RealBall::from_endpoints(lo, hi, wp);
    RealBall im(wp);
    if (i >= static_cast<int>(reals.size())) {
      mpfr_sub(lo.get(), c.imag().center().get(), r.get(), MPFR_RNDD);
      mpfr_add(hi.get(), c.imag().center().get(), r.get(), MPFR_RNDU);
      im = RealBall::from_endpoints(lo, hi, wp);
    }
    a.roots.emplace_back(re, im);
  }
  return a;
}

}  // namespace

std::vector<ComplexBall> isolate_complex_roots(const Poly& f, int precision) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  if (precision < 32) throw InvalidInput("root isolation needs at least 32 bits");
  Poly g = squarefree_part(f);
  int n = g.degree();
  if (n <= 0) return {};
  if (n == 1) {
    Rational r = -g.coeff(0);
    return {ComplexBall(RealBall::from_rational(r, precision), RealBall(precision))};
  }
  int wp = precision + kGuardBits;
  for (int attempt = 0; attempt <= kDoublings; ++attempt, wp *= 2) {
    Attempt a = try_isolate(g, wp);
    if (a.ok) return a.roots;
  }
  throw RefinementFailed("root isolation failed for " + g.to_string());
}

int count_real_roots(const std::vector<ComplexBall>& roots) {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [](const ComplexBall& z) { return z.is_real(); }));
}

}  // namespace abckit
