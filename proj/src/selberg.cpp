#include "zal/selberg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zal/parallel.hpp"
#include "zal/specfun.hpp"

namespace zal::selberg {

LocalFactorEval local_factor(double l, double s, double tol, Convention conv, long max_terms) {
  if (!(l > 0.0)) throw std::invalid_argument("local_factor: length must be positive");
  if (!(s > 0.0)) throw std::invalid_argument("local_factor: s must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("local_factor: tol must be positive");
  LocalFactorEval out{l, s, 0.0, 0.0, 0.0, 0};
  const long k0 = conv == Convention::FromZero ? 0 : 1;
  const double denom = -std::expm1(-l);  // 1 - e^{-l}
  long double sum = 0;
  for (long k = k0;; ++k) {
    if (k - k0 >= max_terms) {
      throw std::runtime_error("local_factor: tolerance " + std::to_string(tol) + " not reached in " +
                               std::to_string(max_terms) + " terms");
    }
    double x = std::exp(-(s + static_cast<double>(k)) * l);
    sum += 2.0L * std::log1p(-static_cast<long double>(x));
    ++out.terms;
    double next = std::exp(-(s + static_cast<double>(k + 1)) * l);
    double tail = 2.0 * next / ((1.0 - next) * denom);
    if (tail <= tol) {
      out.tail_bound = tail;
      break;
    }
  }
  out.log_value = static_cast<double>(sum);
  out.value = std::exp(out.log_value);
  return out;
}

std::vector<double> small_length_asymptotic(double s, const std::vector<double>& l_list, Convention conv,
                                            double tol) {
  if (!(s > 0.0)) throw std::invalid_argument("small_length_asymptotic: s must be positive");
  std::vector<double> out;
  out.reserve(l_list.size());
  const double log_gamma_s = specfun::log_gamma(s);
  for (double l : l_list) {
    LocalFactorEval z = local_factor(l, s, tol, conv);
    double log_v = 2 * log_gamma_s + z.log_value + std::numbers::pi * std::numbers::pi / (3 * l) +
                   (2 * s - 1) * std::log(l);
    out.push_back(std::exp(log_v));
  }
  return out;
}

ZetaEval selberg_zeta(const lengthspec::LengthSpectrum& spectrum, double s, double tol) {
  if (!(s > 1.0 + kDelta)) {
    throw std::domain_error("selberg_zeta: s must exceed 1 + " + std::to_string(kDelta) +
                            " for a certified Euler product");
  }
  ZetaEval out;
  out.s = s;
  out.truncation_trace = spectrum.max_trace;
  const auto& entries = spectrum.entries;
  if (entries.empty()) return out;
  // spread the tolerance over the entries
  double per_tol = tol / static_cast<double>(entries.size());
  auto logs = parallel_map<LocalFactorEval>(entries.size(), [&](std::size_t i) {
    return local_factor(entries[i].length, s, per_tol, Convention::FromOne);
  });
  long double total = 0, err = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    long double weight = static_cast<long double>(entries[i].multiplicity) / 2;
    total += weight * logs[i].log_value;
    err += weight * logs[i].tail_bound;
  }
  out.log_value = static_cast<double>(total);
  out.local_error = static_cast<double>(err);
  // oriented primitive classes of length <= x grow like e^x / x, and each
  // contributes about e^{-(s+1) l} / (1 - e^{-l}) to |log Z|
  const double L = spectrum.max_length();
  out.tail_estimate = kTailConstant * std::exp(-s * L) / (s * L * (-std::expm1(-L)));
  return out;
}

double ruelle_ratio(const lengthspec::LengthSpectrum& spectrum, double s, double tol) {
  ZetaEval a = selberg_zeta(spectrum, s, tol);
  ZetaEval b = selberg_zeta(spectrum, s + 1, tol);
  return std::exp(a.log_value - b.log_value);
}

}  // namespace zal::selberg
