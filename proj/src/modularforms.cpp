#include "zal/modularforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "zal/parallel.hpp"

namespace zal::modularforms {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = powmod(a, (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// Trapezoid rule on [lo, hi]; exponentially accurate for the doubly
// exponentially decaying integrands below.
template <typename Fn>
double trapezoid(Fn&& fn, double lo, double hi, double h) {
  int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / h)));
  double step = (hi - lo) / steps;
  double sum = 0.5 * (fn(lo) + fn(hi));
  for (int i = 1; i < steps; ++i) sum += fn(lo + i * step);
  return sum * step;
}

constexpr double kStep = 0.04;

// G(a, y) = int_1^inf phi(y t) t^{a-1} dt
//         = 2 int exp(-u^2) (u / y)^a Gamma(a, y / u) du/u.
double upper_weight(double a, double y) {
  double lo = std::log(y / 90.0);
  double hi = std::max(3.0, lo + 1.0);
  auto fn = [&](double v) {
    double b = y * std::exp(-v);
    if (b > 700) return 0.0;
    return std::exp(-std::exp(2 * v)) * std::pow(b, -a) * boost::math::tgamma(a, b);
  };
  return 2 * trapezoid(fn, lo, hi, kStep);
}

double conductor_scale(int conductor) { return 2 * std::pow(kPi, 1.5) / std::sqrt(static_cast<double>(conductor)); }

constexpr double kWeightCutoff = 150.0;

double theta(const std::vector<std::int64_t>& b, double scale, double t) {
  double sum = 0;
  for (std::size_t n = 1; n <= b.size(); ++n) {
    double x = scale * static_cast<double>(n) * t;
    if (x > kWeightCutoff) break;
    if (b[n - 1] != 0) sum += static_cast<double>(b[n - 1]) * gamma_weight(x);
  }
  return sum;
}

std::string poly_str(const std::vector<std::int64_t>& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    std::int64_t c = p[k];
    if (out.empty()) {
      out = std::to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      std::int64_t m = std::abs(c);
      if (m != 1) out += std::to_string(m) + " ";
    }
    if (k == 1) out += "X";
    if (k > 1) out += "X^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::complex<double> QExpansion::eval(std::complex<double> z, double* tail_bound) const {
  const std::complex<double> q = std::exp(std::complex<double>(0, 2 * kPi) * z);
  const double r = std::abs(q);
  std::complex<double> sum = 0, qn = 1;
  double rn = 1;
  if (tail_bound) *tail_bound = 0;
  for (std::size_t n = 1; n <= coeffs.size(); ++n) {
    qn *= q;
    rn *= r;
    sum += static_cast<double>(coeffs[n - 1]) * qn;
    if (rn * static_cast<double>(n) < 1e-25 * (1 - r) * (1 - r)) return sum;
  }
  if (tail_bound) {
    double np1 = static_cast<double>(coeffs.size() + 1);
    *tail_bound = np1 * rn * r / ((1 - r) * (1 - r));
  }
  return sum;
}

QExpansion eta_product_qexp(std::size_t N) {
  if (N < 1) throw std::invalid_argument("eta_product_qexp: need N >= 1");
  // c holds prod (1 - q^k)^2 (1 - q^{11k})^2 up to q^{N-1}
  std::vector<std::int64_t> c(N, 0);
  c[0] = 1;
  auto times_one_minus = [&](std::size_t k) {
    for (std::size_t i = N - 1; i >= k; --i) c[i] -= c[i - k];
  };
  for (std::size_t k = 1; k < N; ++k) {
    times_one_minus(k);
    times_one_minus(k);
    if (11 * k < N) {
      times_one_minus(11 * k);
      times_one_minus(11 * k);
    }
  }
  return QExpansion{11, 2, std::move(c)};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t point_count_ap(std::int64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("point_count_ap: not a prime");
  if (ell == 11) throw std::invalid_argument("point_count_ap: 11 is a bad prime");
  std::int64_t points = 1;  // point at infinity
  if (ell == 2) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        if (((y * y + y) - (x * x * x - x * x - 10 * x - 20)) % 2 == 0) ++points;
  } else {
    // (2y + 1)^2 = 4x^3 - 4x^2 - 40x - 79
    for (std::int64_t x = 0; x < ell; ++x) {
      __int128 d = 4 * static_cast<__int128>(x) * x * x - 4 * static_cast<__int128>(x) * x - 40 * x - 79;
      std::int64_t dm = static_cast<std::int64_t>(((d % ell) + ell) % ell);
      points += 1 + legendre(dm, ell);
    }
  }
  std::int64_t a = ell + 1 - points;
  if (a * a > 4 * ell) throw std::logic_error("point_count_ap: Hasse bound violated");
  return a;
}

std::vector<std::pair<std::int64_t, std::int64_t>> point_count_table(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (p != 11 && is_prime(p)) primes.push_back(p);
  return parallel_map<std::pair<std::int64_t, std::int64_t>>(primes.size(), [&](std::size_t i) {
    return std::make_pair(primes[i], point_count_ap(primes[i]));
  });
}

std::string coefficients_csv(const QExpansion& f) {
  std::string out = "n,a_n\n";
  for (std::size_t n = 1; n <= f.N(); ++n) out += std::to_string(n) + "," + std::to_string(f.a(n)) + "\n";
  return out;
}

double Sym2LocalFactor::eval(double x) const {
  double sum = 0, xp = 1;
  for (std::int64_t c : poly_coeffs) {
    sum += static_cast<double>(c) * xp;
    xp *= x;
  }
  return sum;
}

Sym2LocalFactor sym2_local_factor(std::int64_t ell, std::int64_t a_ell) {
  std::int64_t u = a_ell * a_ell - ell;
  return {ell, {1, -u, ell * u, -ell * ell * ell}};
}

std::string Sym2Hypothesis::conductor_str() const { return std::to_string(conductor); }
std::string Sym2Hypothesis::local_factor_str() const { return poly_str(bad_factor); }
std::string Sym2Hypothesis::str() const {
  return "N=" + conductor_str() + ", L_11=(" + local_factor_str() + ")^-1, sign=" + (sign > 0 ? "+1" : "-1");
}

std::vector<Sym2Hypothesis> sym2_candidates() {
  std::vector<std::vector<std::int64_t>> factors{{1}, {1, -1}, {1, 1}, {1, -11}, {1, 11}, {1, -121}, {1, 121}};
  std::vector<Sym2Hypothesis> out;
  for (int conductor : {11, 121})
    for (const auto& p : factors)
      for (int sign : {1, -1}) out.push_back({conductor, p, sign});
  return out;
}

std::vector<std::int64_t> sym2_coefficients(const QExpansion& f, const Sym2Hypothesis& hyp, std::size_t n_max,
                                            std::int64_t max_prime) {
  if (f.N() < n_max) throw std::invalid_argument("sym2_coefficients: q-expansion too short");
  std::vector<std::int64_t> b(n_max, 0);
  if (n_max == 0) return b;
  b[0] = 1;
  // spf sieve
  std::vector<std::size_t> spf(n_max + 1, 0);
  for (std::size_t i = 2; i <= n_max; ++i)
    if (spf[i] == 0)
      for (std::size_t j = i; j <= n_max; j += i)
        if (spf[j] == 0) spf[j] = i;
  std::vector<std::vector<std::int64_t>> powers(n_max + 1);  // powers[p][k] = b_{p^k}
  for (std::size_t p = 2; p <= n_max; ++p) {
    if (spf[p] != p) continue;
    std::vector<std::int64_t> poly;
    auto ip = static_cast<std::int64_t>(p);
    if (ip > max_prime) {
      poly = {1};
    } else if (ip == 11) {
      poly = hyp.bad_factor;
    } else {
      poly = sym2_local_factor(ip, f.a(p)).poly_coeffs;
    }
    std::vector<std::int64_t> ser{1};
    for (std::size_t pk = p; pk <= n_max; pk *= p) {
      std::size_t k = ser.size();
      std::int64_t v = 0;
      for (std::size_t j = 1; j < poly.size() && j <= k; ++j) v -= poly[j] * ser[k - j];
      ser.push_back(v);
      if (pk > n_max / p) break;
    }
    powers[p] = std::move(ser);
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::size_t m = n, p = spf[n];
    std::size_t k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    b[n - 1] = powers[p][k] * b[m - 1];
  }
  return b;
}

double gamma_weight(double x) {
  if (!(x > 0)) throw std::domain_error("gamma_weight: need x > 0");
  double lo = std::log(x / 90.0);
  double saddle = std::log(x / 2) / 3;
  double hi = std::max(3.0, saddle + 3.0);
  auto fn = [&](double v) { return std::exp(-x * std::exp(-v) - std::exp(2 * v)); };
  return 2 * trapezoid(fn, lo, hi, kStep);
}

double fe_residual(const QExpansion& f, const Sym2Hypothesis& hyp) {
  const double scale = conductor_scale(hyp.conductor);
  double worst = 0;
  for (double t : {1.2, 1.5}) {
    auto n_max = static_cast<std::size_t>(std::ceil(kWeightCutoff * t / scale));
    std::vector<std::int64_t> b = sym2_coefficients(f, hyp, n_max);
    double lhs = theta(b, scale, 1 / t);
    double rhs = hyp.sign * t * t * t * theta(b, scale, t);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return worst;
}

HypothesisSearch search_sym2_hypotheses(const QExpansion& f, double threshold) {
  HypothesisSearch out;
  out.candidates = sym2_candidates();
  out.residuals = parallel_map<double>(out.candidates.size(), [&](std::size_t i) { return fe_residual(f, out.candidates[i]); });
  for (std::size_t i = 0; i < out.candidates.size(); ++i)
    if (out.residuals[i] < threshold) out.accepted.push_back(i);
  return out;
}

double sym2_L_smoothed(const QExpansion& f, const Sym2Hypothesis& hyp, double s, double split, std::int64_t max_prime) {
  if (!(split > 0)) throw std::invalid_argument("sym2_L_smoothed: split must be positive");
  if (!(s > 0 && s < 3)) throw std::invalid_argument("sym2_L_smoothed: need 0 < s < 3");
  const double scale = conductor_scale(hyp.conductor);
  const double shortest = std::min(split, 1 / split);
  auto n_max = static_cast<std::size_t>(std::ceil(kWeightCutoff / (scale * shortest)));
  std::vector<std::int64_t> b = sym2_coefficients(f, hyp, n_max, max_prime);
  std::vector<double> terms = parallel_map<double>(n_max, [&](std::size_t i) {
    if (b[i] == 0) return 0.0;
    double y = scale * static_cast<double>(i + 1);
    double a = std::pow(split, s) * upper_weight(s, y * split);
    double c = hyp.sign * std::pow(split, s - 3) * upper_weight(3 - s, y / split);
    return static_cast<double>(b[i]) * (a + c);
  });
  double half_lambda = 0;
  for (double t : terms) half_lambda += t;
  return half_lambda / (std::pow(scale, -s) * std::tgamma(s) * std::tgamma(s / 2));
}

LValueResult sym2_L_value(const QExpansion& f, double s, double tol) {
  if (!(s > 1.5 && s < 3)) throw std::invalid_argument("sym2_L_value: need 1.5 < s < 3");
  HypothesisSearch search = search_sym2_hypotheses(f);
  if (search.accepted.size() != 1) {
    throw std::runtime_error("sym2_L_value: functional-equation check accepted " +
                             std::to_string(search.accepted.size()) + " hypotheses");
  }
  LValueResult out;
  out.s = s;
  out.hypothesis = search.candidates[search.accepted.front()];
  out.fe_residual = search.residuals[search.accepted.front()];
  out.value = sym2_L_smoothed(f, out.hypothesis, s, 1.0);
  out.cutoff_change = std::abs(sym2_L_smoothed(f, out.hypothesis, s, 2.0) - out.value);
  out.truncation_change = std::abs(sym2_L_smoothed(f, out.hypothesis, s, 1.0, 10000) - out.value);
  out.error = out.cutoff_change + out.truncation_change + 1e-13 * std::abs(out.value);
  if (out.error > tol) throw ToleranceUnreachable("sym2_L_value: error estimate exceeds tolerance");
  return out;
}

int atkin_lehner_sign(const QExpansion& f) {
  std::vector<double> ratios;
  for (std::complex<double> z : {std::complex<double>(0.05, 0.3), std::complex<double>(-0.13, 0.27)}) {
    std::complex<double> fz = f.eval(z);
    std::complex<double> fw = f.eval(-1.0 / (11.0 * z));
    if (std::abs(fz) < 1e-6) throw std::runtime_error("atkin_lehner_sign: f vanishes at the test point");
    std::complex<double> r = fw / (11.0 * z * z * fz);
    ratios.push_back(r.real());
    if (std::abs(r.imag()) > 1e-8) throw std::runtime_error("atkin_lehner_sign: indeterminate");
  }
  for (int sign : {1, -1})
    if (std::abs(ratios[0] - sign) < 1e-8 && std::abs(ratios[1] - sign) < 1e-8) return sign;
  throw std::runtime_error("atkin_lehner_sign: indeterminate");
}

namespace {

constexpr std::size_t kGaussOrder = 20;
constexpr double kHeight = 55;
using Gauss = boost::math::quadrature::gauss<double, kGaussOrder>;

// nodes and weights on [lo, hi]
void gauss_panel(double lo, double hi, std::vector<double>& nodes, std::vector<double>& weights) {
  const auto& abs = Gauss::abscissa();
  const auto& wts = Gauss::weights();
  double mid = (lo + hi) / 2, half = (hi - lo) / 2;
  for (std::size_t i = 0; i < abs.size(); ++i) {
    nodes.push_back(mid + half * abs[i]);
    weights.push_back(half * wts[i]);
    nodes.push_back(mid - half * abs[i]);
    weights.push_back(half * wts[i]);
  }
}

double petersson_with_tail(const QExpansion& f, int mesh, double* tail) {
  if (mesh < 1) throw std::invalid_argument("petersson_integral: mesh must be >= 1");
  std::vector<double> xs, wx, ss, ws;
  for (int i = 0; i < 2 * mesh; ++i) gauss_panel(-0.5 + i / (2.0 * mesh), -0.5 + (i + 1) / (2.0 * mesh), xs, wx);
  // height above the arc |z| = 1; the folded pieces decay like e^{-4 pi y / 11}
  const std::array<double, 7> breaks{0, 1, 3, 8, 20, 35, kHeight};
  for (std::size_t b = 0; b + 1 < breaks.size(); ++b)
    for (int i = 0; i < mesh; ++i) {
      double w = (breaks[b + 1] - breaks[b]) / mesh;
      gauss_panel(breaks[b] + i * w, breaks[b] + (i + 1) * w, ss, ws);
    }
  std::vector<std::pair<double, double>> cols = parallel_map<std::pair<double, double>>(xs.size(), [&](std::size_t i) {
    double y0 = std::sqrt(1 - xs[i] * xs[i]);
    double col = 0, worst = 0;
    for (std::size_t k = 0; k < ss.size(); ++k) {
      std::complex<double> z(xs[i], y0 + ss[k]);
      double tb = 0;
      double v = std::norm(f.eval(z, &tb));
      worst = std::max(worst, tb);
      for (int j = 0; j < 11; ++j) {
        v += std::norm(f.eval((z + static_cast<double>(j)) / 11.0, &tb)) / 121.0;
        worst = std::max(worst, tb);
      }
      col += ws[k] * v;
    }
    return std::make_pair(wx[i] * col, worst);
  });
  double sum = 0, worst = 0;
  for (const auto& [v, t] : cols) {
    sum += v;
    worst = std::max(worst, t);
  }
  if (tail) *tail = worst;
  return sum;
}

}  // namespace

double petersson_integral(const QExpansion& f, int mesh) { return petersson_with_tail(f, mesh, nullptr); }

PeterssonResult petersson_norm(const QExpansion& f, double tol) {
  if (f.level != 11 || f.weight != 2) throw std::invalid_argument("petersson_norm: level 11, weight 2 only");
  if (!(tol > 0)) throw std::invalid_argument("petersson_norm: tol must be positive");
  if (std::all_of(f.coeffs.begin(), f.coeffs.end(), [](std::int64_t c) { return c == 0; })) return {0.0, 0.0, 0, 1};
  PeterssonResult out;
  out.al_eigenvalue = atkin_lehner_sign(f);
  double tail = 0;
  int mesh = 1;
  double prev = petersson_with_tail(f, mesh, &tail);
  while (true) {
    double next = petersson_with_tail(f, 2 * mesh, &tail);
    double change = std::abs(next - prev);
    mesh *= 2;
    if (change < tol / 4 || mesh >= 64) {
      out.value = next;
      out.mesh = mesh;
      // q-expansion truncation over a region of area below 13, the cut at
      // height kHeight (|f(w)|^2 <= 1.1 e^{-4 pi Im w} there), and rounding
      double trunc = 2 * 13 * tail * std::sqrt(next);
      double cut = 1.1 / (4 * kPi) * std::exp(-4 * kPi * kHeight / 11);
      out.est_error = change + trunc + cut + 1e-13 * next;
      break;
    }
    prev = next;
  }
  if (out.est_error >= tol) throw ToleranceUnreachable("petersson_norm: error estimate exceeds tolerance");
  return out;
}

HidaResult hida_ratio(double tol) {
  QExpansion f = eta_product_qexp(600);
  LValueResult L = sym2_L_value(f, 2.0, tol);
  PeterssonResult P = petersson_norm(f, tol * 1e-3);
  HidaResult out;
  out.L = L.value;
  out.petersson = P.value;
  out.ratio = L.value / (kPi * kPi * kPi * P.value);
  out.error = out.ratio * (L.error / L.value + P.est_error / P.value);
  if (out.error > tol) throw ToleranceUnreachable("hida_ratio: combined error exceeds tolerance");
  const double window = 10 * out.error;
  out.guess = reconstruct_rational(out.ratio, 10000, window);
  out.control_ratio = L.value / (kPi * kPi * kPi * P.value * (1 + 1e-3));
  out.control_guess = reconstruct_rational(out.control_ratio, 10000, window);
  return out;
}

}  // namespace zal::modularforms
