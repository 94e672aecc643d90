#include "zal/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace zal::specfun {

namespace {

using ld = long double;

constexpr ld kPi = std::numbers::pi_v<ld>;
constexpr ld kEulerGamma = std::numbers::egamma_v<ld>;
constexpr ld kEps = std::numeric_limits<ld>::epsilon();

// B_2, B_4, ..., B_40 as num/den.
constexpr std::array<std::array<ld, 2>, 20> kBernoulliEven = {{
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
    {-7709321041217.0L, 510.0L},
    {2577687858367.0L, 6.0L},
    {-26315271553053477373.0L, 1919190.0L},
    {2929993913841559.0L, 6.0L},
    {-261082718496449122051.0L, 13530.0L},
}};

ld bernoulli_even(int j) {  // B_{2j}, 1 <= j <= 20
  return kBernoulliEven[static_cast<std::size_t>(j - 1)][0] / kBernoulliEven[static_cast<std::size_t>(j - 1)][1];
}

// Euler-Maclaurin order: terms j = 1..kOrder of the Bernoulli correction.
constexpr int kOrder = 16;

struct HurwitzSum {
  ld value = 0;
  ld deriv = 0;
  ld value_err = 0;
  ld deriv_err = 0;
  ld value_trunc = 0;  // remainder bound only, excluding rounding
  ld deriv_trunc = 0;
};

// Rising factorial (s)_m and its s-derivative.
void rising(ld s, int m, ld& prod, ld& dprod) {
  prod = 1;
  dprod = 0;
  for (int i = 0; i < m; ++i) {
    dprod = dprod * (s + i) + prod;
    prod *= (s + i);
  }
}

// Upper bound on |d/ds (s)_m|, robust when a factor vanishes.
ld rising_deriv_bound(ld s, int m) {
  ld total = 0;
  for (int i = 0; i < m; ++i) {
    ld p = 1;
    for (int k = 0; k < m; ++k)
      if (k != i) p *= std::fabs(s + k);
    total += p;
  }
  return total;
}

HurwitzSum hurwitz_em(ld s, ld a, long n_direct) {
  HurwitzSum out;
  ld abs_sum = 0;
  for (long k = 0; k < n_direct; ++k) {
    ld x = static_cast<ld>(k) + a;
    ld lx = std::log(x);
    ld t = std::exp(-s * lx);
    out.value += t;
    out.deriv -= lx * t;
    abs_sum += std::fabs(t) * (1 + std::fabs(lx));
  }
  ld x = static_cast<ld>(n_direct) + a;
  ld lx = std::log(x);
  ld xs = std::exp(-s * lx);  // x^{-s}
  out.value += x * xs / (s - 1) + xs / 2;
  out.deriv += -x * xs * (lx / (s - 1) + 1 / ((s - 1) * (s - 1))) - lx * xs / 2;
  ld xpow = xs / x;  // x^{-s-1}
  for (int j = 1; j <= kOrder; ++j) {
    ld prod, dprod;
    rising(s, 2 * j - 1, prod, dprod);
    ld fact = 1;
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    ld c = bernoulli_even(j) / fact;
    out.value += c * prod * xpow;
    out.deriv += c * (dprod - prod * lx) * xpow;
    abs_sum += std::fabs(c * prod * xpow);
    xpow /= x * x;
  }
  // Remainder: 5 |(s)_{2M}| / (2 pi)^{2M} * x^{1-p} / (p - 1), p = s + 2M.
  const int m2 = 2 * kOrder + 2;
  ld p = s + m2;
  ld prod, dprod;
  rising(s, m2, prod, dprod);
  ld scale = 5 / std::pow(2 * kPi, static_cast<ld>(m2));
  ld x1p = std::exp((1 - p) * lx);
  ld i0 = x1p / (p - 1);
  ld i1 = x1p * (lx / (p - 1) + 1 / ((p - 1) * (p - 1)));
  out.value_trunc = scale * std::fabs(prod) * i0;
  out.deriv_trunc = scale * (rising_deriv_bound(s, m2) * i0 + std::fabs(prod) * i1);
  out.value_err = out.value_trunc + 8 * kEps * abs_sum;
  out.deriv_err = out.deriv_trunc + 8 * kEps * abs_sum * (1 + lx);
  return out;
}

HurwitzSum hurwitz_adaptive(double s, double a, const PrecisionBudget& budget, bool need_deriv) {
  budget.validate();
  if (s == 1.0) throw PoleError("zeta(s, a): pole at s = 1");
  if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta: a must be positive");
  if (!(s + 2 * kOrder + 1 > 1.0)) throw std::domain_error("hurwitz_zeta: s below the supported range");
  long n = std::min(8L, budget.max_terms);
  while (true) {
    HurwitzSum r = hurwitz_em(s, a, n);
    ld err = need_deriv ? r.deriv_trunc : r.value_trunc;
    if (err <= static_cast<ld>(budget.abs_tol) / 2) return r;
    if (n >= budget.max_terms) {
      throw BudgetExhausted("hurwitz_zeta: tolerance " + std::to_string(budget.abs_tol) +
                            " not reached within " + std::to_string(budget.max_terms) + " terms");
    }
    n = std::min(n * 2, budget.max_terms);
  }
}

void require(const Estimate& e, const PrecisionBudget& budget, const char* what) {
  if (!(e.error <= budget.abs_tol)) {
    throw BudgetExhausted(std::string(what) + ": achievable error " + std::to_string(e.error) +
                          " exceeds requested tolerance " + std::to_string(budget.abs_tol));
  }
}

Estimate to_estimate(ld value, ld err) {
  double v = static_cast<double>(value);
  // rounding to double costs half an ulp
  double e = static_cast<double>(err) + std::abs(v) * std::numeric_limits<double>::epsilon();
  return {v, e};
}

}  // namespace

void PrecisionBudget::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("PrecisionBudget: abs_tol must be positive");
  if (max_terms < 1) throw std::invalid_argument("PrecisionBudget: max_terms must be >= 1");
}

double gamma(double x) { return std::tgamma(x); }
double log_gamma(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant: std::lgamma writes the global signgam
}

Estimate hurwitz_zeta(double s, double a, const PrecisionBudget& budget) {
  HurwitzSum r = hurwitz_adaptive(s, a, budget, false);
  Estimate e = to_estimate(r.value, r.value_err);
  require(e, budget, "hurwitz_zeta");
  return e;
}

Estimate hurwitz_zeta_derivative(double s, double a, const PrecisionBudget& budget) {
  HurwitzSum r = hurwitz_adaptive(s, a, budget, true);
  Estimate e = to_estimate(r.deriv, r.deriv_err);
  require(e, budget, "hurwitz_zeta_derivative");
  return e;
}

Estimate riemann_zeta(double s, const PrecisionBudget& budget) {
  budget.validate();
  if (s == 1.0) throw PoleError("riemann_zeta: pole at s = 1");
  if (s > 0.0) return hurwitz_zeta(s, 1.0, budget);
  if (s == 0.0) return {-0.5, 0.0};
  if (std::floor(s / 2) == s / 2) return {0.0, 0.0};  // trivial zeros
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
  ld factor = std::pow(2.0L, static_cast<ld>(s)) * std::pow(kPi, static_cast<ld>(s) - 1) *
              std::sin(kPi * static_cast<ld>(s) / 2) * std::tgamma(1.0L - static_cast<ld>(s));
  if (!std::isfinite(static_cast<double>(factor))) throw std::domain_error("riemann_zeta: s too negative");
  PrecisionBudget inner = budget;
  inner.abs_tol = budget.abs_tol / std::max<double>(1.0, static_cast<double>(std::fabs(factor)));
  HurwitzSum r = hurwitz_adaptive(1.0 - s, 1.0, inner, false);
  ld value = factor * r.value;
  ld err = std::fabs(factor) * r.value_err + 16 * kEps * std::fabs(value);
  Estimate e = to_estimate(value, err);
  require(e, budget, "riemann_zeta");
  return e;
}

double ZetaPrimeRoutes::disagreement() const { return std::abs(glaisher.value - functional_equation.value); }

ZetaPrimeRoutes zeta_prime_minus1_routes(const PrecisionBudget& budget) {
  budget.validate();
  ZetaPrimeRoutes routes;

  // Route 1: log A from sum_{k<=n} k log k minus its Euler-Maclaurin
  // asymptotic, then zeta'(-1) = 1/12 - log A.
  {
    const long n = 10;
    const int terms = 14;
    ld sum = 0;
    for (long k = 2; k <= n; ++k) sum += static_cast<ld>(k) * std::log(static_cast<ld>(k));
    ld nn = static_cast<ld>(n);
    ld log_a = sum - (nn * nn / 2 + nn / 2 + 1.0L / 12) * std::log(nn) + nn * nn / 4;
    for (int j = 2; j <= terms; ++j) {
      ld b = bernoulli_even(j);
      ld denom = static_cast<ld>(2 * j) * (2 * j - 1) * (2 * j - 2);
      log_a += b / denom * std::pow(nn, static_cast<ld>(2 - 2 * j));
    }
    // |R| <= 5 (2M-2)! / (2 pi)^{2M} * n^{2-2M} / (2M-2) with M = terms + 1
    const int m = terms + 1;
    ld fact = 1;
    for (int i = 2; i <= 2 * m - 2; ++i) fact *= i;
    ld bound = 5 * fact / std::pow(2 * kPi, static_cast<ld>(2 * m)) * std::pow(nn, static_cast<ld>(2 - 2 * m)) /
               static_cast<ld>(2 * m - 2);
    ld err = bound + 64 * kEps * sum;
    routes.glaisher = to_estimate(1.0L / 12 - log_a, err);
  }

  // Route 2: differentiate the functional equation at s = 2:
  // zeta'(-1) = 1/12 - (gamma + log 2 pi)/12 + zeta'(2) / (2 pi^2).
  {
    PrecisionBudget inner = budget;
    inner.abs_tol = std::max(budget.abs_tol * 1e-3, 1e-18);
    HurwitzSum z2 = hurwitz_adaptive(2.0, 1.0, inner, true);
    ld value = 1.0L / 12 - (kEulerGamma + std::log(2 * kPi)) / 12 + z2.deriv / (2 * kPi * kPi);
    ld err = z2.deriv_err / (2 * kPi * kPi) + 16 * kEps;
    routes.functional_equation = to_estimate(value, err);
  }
  return routes;
}

Estimate zeta_prime_minus1(const PrecisionBudget& budget) {
  ZetaPrimeRoutes routes = zeta_prime_minus1_routes(budget);
  require(routes.glaisher, budget, "zeta_prime_minus1 (Glaisher route)");
  require(routes.functional_equation, budget, "zeta_prime_minus1 (functional-equation route)");
  if (routes.disagreement() > 2 * budget.abs_tol) {
    throw BudgetExhausted("zeta_prime_minus1: routes disagree by " + std::to_string(routes.disagreement()));
  }
  Estimate out = routes.glaisher;
  out.error = std::max(out.error, routes.disagreement());
  return out;
}

Estimate log_barnes_g_1p(double z, const PrecisionBudget& budget) {
  budget.validate();
  if (!(std::abs(z) < 1.0)) throw std::domain_error("log_barnes_g_1p: requires |z| < 1");
  const long k_direct = 16;
  ld zz = z;
  ld value = zz / 2 * std::log(2 * kPi) - (zz + zz * zz * (1 + kEulerGamma)) / 2;
  ld abs_sum = std::fabs(value);
  for (long k = 1; k <= k_direct; ++k) {
    ld kk = static_cast<ld>(k);
    ld term = kk * std::log1p(zz / kk) + zz * zz / (2 * kk) - zz;
    value += term;
    abs_sum += std::fabs(term) + std::fabs(zz);
  }
  // sum_{k > K} [k log(1 + z/k) + z^2/(2k) - z] = sum_{j>=3} (-1)^{j+1} z^j zeta(j-1, K+1) / j
  PrecisionBudget inner = budget;
  inner.abs_tol = 1e-20;
  ld err = 0;
  ld zpow = zz * zz;
  const ld ratio = std::fabs(zz) / static_cast<ld>(k_direct + 1);
  for (int j = 3; j < 60; ++j) {
    zpow *= zz;
    HurwitzSum h = hurwitz_adaptive(j - 1.0, static_cast<double>(k_direct + 1), inner, false);
    ld sign = (j % 2 == 1) ? 1.0L : -1.0L;
    ld term = sign * zpow * h.value / j;
    value += term;
    err += std::fabs(zpow) * h.value_err / j;
    // remaining terms are dominated by a geometric series of ratio |z|/(K+1)
    ld tail = std::fabs(term) * ratio / (1 - ratio) * 2;
    if (tail < 1e-22L) {
      err += tail;
      break;
    }
  }
  err += 16 * kEps * abs_sum;
  return to_estimate(value, err);
}

Estimate log_barnes_gamma2_half(const PrecisionBudget& budget) {
  Estimate g = log_barnes_g_1p(-0.5, budget);
  require(g, budget, "log_barnes_gamma2_half");
  return {-g.value, g.error};
}

Estimate barnes_gamma2_half(const PrecisionBudget& budget) {
  Estimate lg = log_barnes_gamma2_half(budget);
  double v = std::exp(lg.value);
  return {v, v * std::expm1(lg.error)};
}

SpecialConstants SpecialConstants::build(const PrecisionBudget& budget) {
  SpecialConstants c;
  c.zeta_prime_minus1 = specfun::zeta_prime_minus1(budget).value;
  c.log_gamma2_half = log_barnes_gamma2_half(budget).value;
  c.log_pi = std::log(std::numbers::pi);
  c.abs_tol = budget.abs_tol;
  double residual = c.voros_residual();
  if (!(residual < 10 * budget.abs_tol)) {
    throw std::runtime_error("SpecialConstants: Voros residual " + std::to_string(residual) +
                             " exceeds 10 * abs_tol; Gamma_2 normalization or zeta'(-1) is wrong");
  }
  return c;
}

double SpecialConstants::voros_residual() const {
  double lhs = std::exp(zeta_prime_minus1);
  double rhs = std::exp(-std::log(2.0) / 36 + log_pi / 6 - 2.0 / 3 * log_gamma2_half);
  return std::abs(lhs - rhs);
}

double SpecialConstants::voros_relative_residual() const {
  double log_ratio = zeta_prime_minus1 + std::log(2.0) / 36 - log_pi / 6 + 2.0 / 3 * log_gamma2_half;
  return std::abs(std::expm1(log_ratio));
}

const SpecialConstants& default_constants() {
  static const SpecialConstants constants = SpecialConstants::build({1e-13, 1'000'000});
  return constants;
}

}  // namespace zal::specfun
