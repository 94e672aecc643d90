#include "zal/tautconst.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace zal::tautconst {

namespace {

void add_slots(SlotMap& into, const SlotMap& from, const Rational& scale) {
  for (const auto& [label, e] : from) {
    Rational v = into[label] + scale * e;
    if (v.is_zero())
      into.erase(label);
    else
      into[label] = v;
  }
}

void scale_slots(SlotMap& slots, const Rational& k) {
  if (k.is_zero()) {
    slots.clear();
    return;
  }
  for (auto& [label, e] : slots) e *= k;
}

double slot_sum(const SlotMap& slots, const std::map<std::string, double>& values) {
  double total = 0.0;
  for (const auto& [label, e] : slots) {
    auto it = values.find(label);
    if (it == values.end()) throw std::invalid_argument("no numeric value supplied for slot " + label);
    total += e.to_double() * it->second;
  }
  return total;
}

void print_slots(std::ostringstream& os, const SlotMap& slots) {
  for (const auto& [label, e] : slots) os << " + (" << e << ") log " << label;
}

double zeta_minus1_numeric() {
  return specfun::riemann_zeta(-1.0, specfun::PrecisionBudget{1e-14, 1'000'000}).value;
}

}  // namespace

void SurfaceType::validate() const {
  if (g < 0 || n < 0) throw std::invalid_argument("SurfaceType: g and n must be non-negative");
  if (kappa() <= 0) throw std::invalid_argument("SurfaceType: unstable type, need 2g - 2 + n > 0");
}

TranscendenceVector& TranscendenceVector::operator+=(const TranscendenceVector& o) {
  c_one += o.c_one;
  c_logpi += o.c_logpi;
  c_logGamma2half += o.c_logGamma2half;
  log2_residue += o.log2_residue;
  add_slots(l_slots, o.l_slots, 1);
  return *this;
}

TranscendenceVector& TranscendenceVector::operator*=(const Rational& k) {
  c_one *= k;
  c_logpi *= k;
  c_logGamma2half *= k;
  log2_residue *= k;
  scale_slots(l_slots, k);
  return *this;
}

bool TranscendenceVector::same_class(const TranscendenceVector& o) const {
  return c_one == o.c_one && c_logpi == o.c_logpi && c_logGamma2half == o.c_logGamma2half && l_slots == o.l_slots;
}

double TranscendenceVector::evaluate(const specfun::SpecialConstants& k,
                                     const std::map<std::string, double>& log_slot_values,
                                     bool include_residue) const {
  double v = c_one.to_double() + c_logpi.to_double() * k.log_pi + c_logGamma2half.to_double() * k.log_gamma2_half;
  v += slot_sum(l_slots, log_slot_values);
  if (include_residue) v += log2_residue.to_double() * std::numbers::ln2;
  return v;
}

std::string TranscendenceVector::str() const {
  std::ostringstream os;
  os << "(" << c_one << ") + (" << c_logpi << ") log pi + (" << c_logGamma2half << ") log Gamma2(1/2)";
  print_slots(os, l_slots);
  return os.str();
}

LogLinearForm& LogLinearForm::operator+=(const LogLinearForm& o) {
  c_one += o.c_one;
  c_log2 += o.c_log2;
  c_logpi += o.c_logpi;
  c_zeta_prime += o.c_zeta_prime;
  add_slots(l_slots, o.l_slots, 1);
  return *this;
}

LogLinearForm& LogLinearForm::operator*=(const Rational& k) {
  c_one *= k;
  c_log2 *= k;
  c_logpi *= k;
  c_zeta_prime *= k;
  scale_slots(l_slots, k);
  return *this;
}

double LogLinearForm::evaluate(const specfun::SpecialConstants& k,
                               const std::map<std::string, double>& log_slot_values) const {
  return c_one.to_double() + c_log2.to_double() * std::numbers::ln2 + c_logpi.to_double() * k.log_pi +
         c_zeta_prime.to_double() * k.zeta_prime_minus1 + slot_sum(l_slots, log_slot_values);
}

std::string LogLinearForm::str() const {
  std::ostringstream os;
  os << "(" << c_one << ") + (" << c_log2 << ") log 2 + (" << c_logpi << ") log pi + (" << c_zeta_prime
     << ") zeta'(-1)";
  print_slots(os, l_slots);
  return os.str();
}

TranscendenceVector reduce(const LogLinearForm& form) {
  TranscendenceVector v;
  v.c_one = form.c_one;
  v.c_logpi = form.c_logpi + form.c_zeta_prime * Rational(1, 6);
  v.c_logGamma2half = form.c_zeta_prime * Rational(-2, 3);
  v.log2_residue = form.c_log2 - form.c_zeta_prime * Rational(1, 36);
  v.l_slots = form.l_slots;
  return v;
}

ConstValue const_C(const SurfaceType& t, const specfun::SpecialConstants& k) {
  t.validate();
  ConstValue out;
  double kappa = t.kappa();
  out.value = std::exp(kappa * (k.zeta_prime_minus1 / zeta_minus1_numeric() + 0.5));
  Rational r_kappa(t.kappa());
  out.log_form = r_kappa * (LogLinearForm::zeta_prime(Rational(1) / kZetaMinus1) + LogLinearForm::one(Rational(1, 2)));
  return out;
}

ConstValue const_E(const SurfaceType& t, const specfun::SpecialConstants& k) {
  t.validate();
  ConstValue out;
  double kappa = t.kappa();
  out.value = std::pow(2.0, (t.g + 2 - t.n) / 3.0) * std::pow(std::numbers::pi, -t.n / 2.0) *
              std::exp(kappa * (2 * k.zeta_prime_minus1 - 0.25 + 0.5 * std::log(2 * std::numbers::pi)));
  Rational r_kappa(t.kappa());
  out.log_form = LogLinearForm::log2(Rational(t.g + 2 - t.n, 3)) + LogLinearForm::logpi(Rational(-t.n, 2)) +
                 r_kappa * (LogLinearForm::zeta_prime(2) + LogLinearForm::one(Rational(-1, 4)) +
                            LogLinearForm::log2(Rational(1, 2)) + LogLinearForm::logpi(Rational(1, 2)));
  return out;
}

double quillen_scale(const SurfaceType& t, double z_prime_1, const specfun::SpecialConstants& k) {
  if (!(z_prime_1 > 0.0)) throw std::invalid_argument("quillen_scale: Z'(1) must be positive");
  return 1.0 / std::sqrt(const_E(t, k).value * z_prime_1);
}

double detprime_laplacian(int g, double z_prime_1, Laplacian which, const specfun::SpecialConstants& k) {
  if (g < 2) throw std::invalid_argument("detprime_laplacian: genus must be at least 2");
  if (!(z_prime_1 > 0.0)) throw std::invalid_argument("detprime_laplacian: Z'(1) must be positive");
  double scalar =
      z_prime_1 * std::exp((2.0 * g - 2) * (2 * k.zeta_prime_minus1 - 0.25 + 0.5 * std::log(2 * std::numbers::pi)));
  if (which == Laplacian::Scalar) return scalar;
  return std::pow(2.0, (g + 2) / 3.0) * scalar;
}

double relative_residual(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace zal::tautconst
