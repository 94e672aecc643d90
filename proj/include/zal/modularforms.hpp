#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zal/rational.hpp"

namespace zal::modularforms {

/// Raised when a requested accuracy cannot be met.
class ToleranceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// q-expansion sum_{n=1}^{N} a_n q^n of a weight-2 form.
struct QExpansion {
  int level = 11;
  int weight = 2;
  std::vector<std::int64_t> coeffs;  // coeffs[n - 1] = a_n

  std::size_t N() const { return coeffs.size(); }
  std::int64_t a(std::size_t n) const { return coeffs.at(n - 1); }
  /// f(z), with an absolute bound on the dropped tail when the expansion is
  /// too short (assumes |a_n| <= n).
  std::complex<double> eval(std::complex<double> z, double* tail_bound = nullptr) const;
};

/// q prod_{k>=1} (1 - q^k)^2 (1 - q^{11k})^2 up to q^N, exact.
QExpansion eta_product_qexp(std::size_t N);

bool is_prime(std::int64_t n);

/// a_l = l + 1 - #E(F_l) on y^2 + y = x^3 - x^2 - 10x - 20, by exhaustive
/// point counting. Throws std::invalid_argument for l = 11 or l not prime.
std::int64_t point_count_ap(std::int64_t ell);

/// point_count_ap for every prime up to bound, as (l, a_l) pairs.
std::vector<std::pair<std::int64_t, std::int64_t>> point_count_table(std::int64_t bound);

/// "n,a_n" rows.
std::string coefficients_csv(const QExpansion& f);

/// Local Euler polynomial in X = l^{-s}, constant term first.
struct Sym2LocalFactor {
  std::int64_t ell = 0;
  std::vector<std::int64_t> poly_coeffs;
  double eval(double x) const;
};

/// 1 - (a^2 - l) X + l (a^2 - l) X^2 - l^3 X^3 at a good prime.
Sym2LocalFactor sym2_local_factor(std::int64_t ell, std::int64_t a_ell);

/// Conductor, local polynomial at 11 and root number of the completed
/// Lambda(s) = 2 (sqrt(N) / (2 pi^{3/2}))^s Gamma(s) Gamma(s/2) L(s), with
/// Lambda(s) = sign * Lambda(3 - s).
struct Sym2Hypothesis {
  int conductor = 121;
  std::vector<std::int64_t> bad_factor{1, -1};
  int sign = 1;
  std::string conductor_str() const;
  std::string local_factor_str() const;
  std::string str() const;
};

/// Conductor in {11, 121} x factor at 11 in {1, 1 -+ X, 1 -+ 11 X, 1 -+ 121 X}
/// x sign in {+1, -1}.
std::vector<Sym2Hypothesis> sym2_candidates();

/// Dirichlet coefficients b_1..b_nmax of L(s, Sym^2 f) under the hypothesis.
/// Euler data at primes above max_prime is dropped.
std::vector<std::int64_t> sym2_coefficients(const QExpansion& f, const Sym2Hypothesis& hyp, std::size_t n_max,
                                            std::int64_t max_prime = std::numeric_limits<std::int64_t>::max());

/// phi(x) = 2 int_0^inf exp(-x/u - u^2) du/u, the inverse Mellin transform of
/// Gamma(s) Gamma(s/2).
double gamma_weight(double x);

/// Relative residual |theta(1/t) - sign t^3 theta(t)| / |theta(1/t)|, maximised
/// over t in {1.2, 1.5}.
double fe_residual(const QExpansion& f, const Sym2Hypothesis& hyp);

struct HypothesisSearch {
  std::vector<Sym2Hypothesis> candidates;
  std::vector<double> residuals;
  std::vector<std::size_t> accepted;  // indices with residual < threshold
};

HypothesisSearch search_sym2_hypotheses(const QExpansion& f, double threshold = 1e-6);

struct LValueResult {
  double s = 2.0;
  double value = 0.0;
  double error = 0.0;
  double cutoff_change = 0.0;      // |L at split X = 1| - |L at split X = 2|
  double truncation_change = 0.0;  // effect of dropping Euler data above 10^4
  double fe_residual = 0.0;
  Sym2Hypothesis hypothesis;
};

/// L(s, Sym^2 f) by the smoothed functional-equation sum split at X,
/// under a fixed hypothesis.
double sym2_L_smoothed(const QExpansion& f, const Sym2Hypothesis& hyp, double s, double split,
                       std::int64_t max_prime = std::numeric_limits<std::int64_t>::max());

/// Selects the unique hypothesis passing the functional-equation check, then
/// evaluates at s. Throws std::runtime_error unless exactly one candidate
/// passes, ToleranceUnreachable if the error exceeds tol.
LValueResult sym2_L_value(const QExpansion& f, double s = 2.0, double tol = 1e-10);

struct PeterssonResult {
  double value = 0.0;
  double est_error = 0.0;
  int al_eigenvalue = 0;
  int mesh = 0;
};

/// Atkin-Lehner sign from f(-1/(11z)) = sign 11 z^2 f(z) at two points.
/// Throws std::runtime_error if the sign is not +-1 within 1e-8.
int atkin_lehner_sign(const QExpansion& f);

/// int |f|^2 dx dy over F and the eleven w_11-folded translates (F + j)/11,
/// with every panel split mesh times. Never evaluates f near the cusp 0.
double petersson_integral(const QExpansion& f, int mesh);

/// Doubles the mesh until successive values agree within tol / 4.
PeterssonResult petersson_norm(const QExpansion& f, double tol = 1e-10);

struct HidaResult {
  double L = 0.0;
  double petersson = 0.0;
  double ratio = 0.0;
  double error = 0.0;  // combined absolute error of ratio
  std::optional<Rational> guess;
  double control_ratio = 0.0;  // with <f,f> scaled by 1 + 1e-3
  std::optional<Rational> control_guess;
};

/// L(2, Sym^2 f) / (pi^3 <f,f>) with rational reconstruction (denominator at
/// most 10^4) inside 10 times the combined error. Throws ToleranceUnreachable
/// if the combined error exceeds tol.
HidaResult hida_ratio(double tol = 1e-6);

}  // namespace zal::modularforms
