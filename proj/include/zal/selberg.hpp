#pragma once

#include <vector>

#include "zal/lengthspec.hpp"

namespace zal::selberg {

/// Which product defines the local factor Z_l(s) = prod_k (1 - e^{-(s+k) l})^2.
/// FromOne is the product over k >= 1 used for Z(U, s); FromZero is the
/// product over k >= 0 in which the small-length asymptotic is stated.
/// They differ by the single factor (1 - e^{-s l})^2.
enum class Convention { FromOne, FromZero };

struct LocalFactorEval {
  double l = 0.0;
  double s = 0.0;
  double value = 0.0;
  double log_value = 0.0;
  double tail_bound = 0.0;  // bound on |log value - true log|
  long terms = 0;
};

/// Truncated local factor with tail bound
/// 2 x / ((1 - x)(1 - e^{-l})), x = e^{-(s+K+1) l}, which must be <= tol.
LocalFactorEval local_factor(double l, double s, double tol, Convention conv = Convention::FromOne,
                             long max_terms = 10'000'000);

/// Gamma(s)^2 Z_l(s) exp(pi^2 / 3l) l^{2s-1} for each l; tends to 2 pi as l -> 0
/// for the FromZero product.
std::vector<double> small_length_asymptotic(double s, const std::vector<double>& l_list,
                                            Convention conv = Convention::FromZero, double tol = 1e-15);

struct ZetaEval {
  double s = 0.0;
  double log_value = 0.0;
  std::int64_t truncation_trace = 0;
  double tail_estimate = 0.0;  // heuristic: prime geodesic growth past the cutoff
  double local_error = 0.0;    // summed certified local-factor tails
};

/// Minimum distance of s above 1 for Euler-product evaluation.
inline constexpr double kDelta = 0.01;

/// log Z(s) over the spectrum's non-oriented geodesics. The spectrum counts
/// oriented classes, so each entry contributes multiplicity / 2 local factors.
ZetaEval selberg_zeta(const lengthspec::LengthSpectrum& spectrum, double s, double tol = 1e-14);

/// Heuristic tail constant used by selberg_zeta.
inline constexpr double kTailConstant = 2.0;

/// Z(s) / Z(s + 1)
double ruelle_ratio(const lengthspec::LengthSpectrum& spectrum, double s, double tol = 1e-14);

}  // namespace zal::selberg
