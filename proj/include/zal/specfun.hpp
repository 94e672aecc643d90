#pragma once

#include <stdexcept>

namespace zal::specfun {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a series or product cannot reach the requested tolerance
/// inside the term cap of its PrecisionBudget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionBudget {
  double abs_tol = 1e-13;
  long max_terms = 1'000'000;

  /// Throws std::invalid_argument unless abs_tol > 0 and max_terms >= 1.
  void validate() const;
};

/// A value together with an absolute error bound.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Riemann zeta for real s != 1. Euler-Maclaurin with a rigorous remainder
/// bound for s > 0, functional equation for s <= 0.
Estimate riemann_zeta(double s, const PrecisionBudget& budget);

/// Hurwitz zeta(s, a) for real s != 1 and a > 0 (Euler-Maclaurin; the
/// remainder bound needs s > -2M+1 for the internal order M = 16).
Estimate hurwitz_zeta(double s, double a, const PrecisionBudget& budget);

/// d/ds zeta(s, a), same method and domain as hurwitz_zeta.
Estimate hurwitz_zeta_derivative(double s, double a, const PrecisionBudget& budget);

/// zeta'(-1) evaluated by two independent routes.
struct ZetaPrimeRoutes {
  Estimate glaisher;             // hyperfactorial asymptotics for log A
  Estimate functional_equation;  // differentiated functional equation at s = 2
  double disagreement() const;
};

ZetaPrimeRoutes zeta_prime_minus1_routes(const PrecisionBudget& budget);

/// zeta'(-1). Throws BudgetExhausted if the two routes disagree by more than
/// 2 * abs_tol.
Estimate zeta_prime_minus1(const PrecisionBudget& budget);

/// log G(1 + z) for the Barnes G function, |z| < 1, from the Weierstrass
/// canonical product. The product tail is summed exactly as a series of
/// Hurwitz zeta values, so the result does not depend on zeta'(-1).
Estimate log_barnes_g_1p(double z, const PrecisionBudget& budget);

/// log Gamma_2(1/2) in the normalization Gamma_2 = 1/G.
Estimate log_barnes_gamma2_half(const PrecisionBudget& budget);

/// Gamma_2(1/2) = 1 / G(1/2) > 0.
Estimate barnes_gamma2_half(const PrecisionBudget& budget);

/// Euler's Gamma for real x (not a non-positive integer).
double gamma(double x);
double log_gamma(double x);

struct SpecialConstants {
  double zeta_prime_minus1 = 0.0;
  double log_gamma2_half = 0.0;
  double log_pi = 0.0;
  double abs_tol = 0.0;

  /// Builds all constants from independent routes and enforces the Voros
  /// relation exp(zeta'(-1)) = 2^{-1/36} pi^{1/6} Gamma_2(1/2)^{-2/3} to
  /// within 10 * abs_tol. Throws std::runtime_error otherwise.
  static SpecialConstants build(const PrecisionBudget& budget);

  /// |exp(zeta'(-1)) - 2^{-1/36} pi^{1/6} Gamma_2(1/2)^{-2/3}|
  double voros_residual() const;
  /// |exp(zeta'(-1)) 2^{1/36} pi^{-1/6} Gamma_2(1/2)^{2/3} - 1|
  double voros_relative_residual() const;
};

/// Process-wide constants at abs_tol = 1e-13, built once on first use.
const SpecialConstants& default_constants();

}  // namespace zal::specfun
