#include "zal/arakelov.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "zal/modularforms.hpp"

namespace zal::arakelov {

using lengthspec::GroupKind;
using lengthspec::GroupSpec;
using tautconst::LogLinearForm;

namespace {

std::map<std::string, double> slot_values(const GroupSpec& spec) {
  std::map<std::string, double> out;
  if (auto l = known_log_L(spec)) out[kLSlot] = *l;
  return out;
}

bool slots_known(const LogLinearForm& form, const std::map<std::string, double>& values) {
  for (const auto& [label, e] : form.l_slots)
    if (!e.is_zero() && !values.contains(label)) return false;
  return true;
}

ArithDegree make_degree(const LogLinearForm& form, const GroupSpec& spec, std::vector<std::string> provenance) {
  ArithDegree d;
  d.form = form;
  d.vector = tautconst::reduce(form);
  auto values = slot_values(spec);
  if (slots_known(form, values)) d.numeric = form.evaluate(specfun::default_constants(), values);
  d.provenance = std::move(provenance);
  return d;
}

tautconst::SurfaceType surface(const GroupSpec& spec) {
  lengthspec::GroupInvariants inv = lengthspec::group_invariants(spec);
  return {inv.g, inv.n};
}

// Torsion-free hypotheses; Gamma(2) is accepted as an extension.
std::vector<std::string> check_hypotheses(const GroupSpec& spec, const char* who) {
  spec.validate();
  switch (spec.kind) {
    case GroupKind::Full:
      throw std::domain_error(std::string(who) + ": the full modular group has torsion");
    case GroupKind::Principal2:
      return {"extension"};
    case GroupKind::Gamma0:
      if (spec.p % 12 != 11) throw std::domain_error(std::string(who) + ": Gamma0(p) needs p = 11 mod 12");
      return {};
    case GroupKind::Gamma1:
      return {};
  }
  return {};
}

}  // namespace

double ArithDegree::coherence_residual() const {
  if (!numeric) return 0.0;
  std::map<std::string, double> values;
  for (const auto& [label, e] : form.l_slots) {
    if (label == kLSlot) values[label] = level11_log_L();
  }
  return std::abs(*numeric - vector.evaluate(specfun::default_constants(), values));
}

double level11_log_L() {
  static const double value = [] {
    modularforms::QExpansion f = modularforms::eta_product_qexp(600);
    return std::log(modularforms::sym2_L_value(f, 2.0, 1e-10).value);
  }();
  return value;
}

std::optional<double> known_log_L(const GroupSpec& spec) {
  if ((spec.kind == GroupKind::Gamma0 || spec.kind == GroupKind::Gamma1) && spec.p == 11) return level11_log_L();
  return std::nullopt;
}

ArithDegree adeg_trivial_bundle(double C, const LogLinearForm& log_C) {
  if (!(C > 0)) throw std::invalid_argument("adeg_trivial_bundle: C must be positive");
  ArithDegree d;
  d.form = Rational(-2) * log_C;
  d.vector = tautconst::reduce(d.form);
  d.numeric = -2 * std::log(C);
  d.provenance = {"trivial bundle O(C)"};
  return d;
}

ArithDegree adeg_lambda_L2(const GroupSpec& spec) {
  spec.validate();
  int g = lengthspec::group_invariants(spec).g;
  if (g == 0) return make_degree(LogLinearForm{}, spec, {"lambda L2 (genus 0, empty)"});
  LogLinearForm form = LogLinearForm::logpi(Rational(2 * g)) + LogLinearForm::slot(kLSlot, Rational(-1));
  return make_degree(form, spec, {"lambda L2"});
}

ArithDegree adeg_psi_W(const GroupSpec& spec) {
  auto flags = check_hypotheses(spec, "adeg_psi_W");
  ArithDegree d = make_degree(LogLinearForm{}, spec, {"psi_W"});
  d.flags = flags;
  return d;
}

ArithDegree self_intersection(const GroupSpec& spec) {
  auto flags = check_hypotheses(spec, "self_intersection");
  int m = lengthspec::group_invariants(spec).m;
  // 4m (2 zeta'(-1) + zeta(-1))
  LogLinearForm form = LogLinearForm::zeta_prime(Rational(8 * m)) + LogLinearForm::one(Rational(4 * m) * tautconst::kZetaMinus1);
  ArithDegree d = make_degree(form, spec, {"self-intersection"});
  d.flags = flags;
  return d;
}

ArithDegree theoremA_assemble(const GroupSpec& spec) {
  ArithDegree si = self_intersection(spec);
  ArithDegree psi = adeg_psi_W(spec);
  ArithDegree lam = adeg_lambda_L2(spec);
  tautconst::SurfaceType t = surface(spec);
  tautconst::ConstValue C = tautconst::const_C(t);
  tautconst::ConstValue E = tautconst::const_E(t);
  ArithDegree triv = adeg_trivial_bundle(C.value, C.log_form);

  LogLinearForm twelve = si.form + triv.form - Rational(12) * E.log_form - Rational(12) * lam.form - psi.form;
  ArithDegree d = make_degree(Rational(1, 12) * twelve, spec,
                              {"self-intersection", "trivial bundle O(C)", "E(g,n)", "lambda L2", "psi_W"});
  d.flags = si.flags;
  return d;
}

TheoremBExponents theoremB_exponents(const GroupSpec& spec) {
  ArithDegree d = theoremA_assemble(spec);
  TheoremBExponents e;
  e.a = d.vector.c_one;
  e.b = d.vector.c_logpi;
  e.c = d.vector.c_logGamma2half;
  for (const auto& [label, exp] : d.vector.l_slots) {
    if (label != kLSlot) throw std::logic_error("theoremB_exponents: unexpected slot " + label);
    if (exp.is_zero()) continue;
    e.l_exponent = exp;
    e.has_l_slot = true;
  }
  return e;
}

double predict_Zprime(const GroupSpec& spec, std::optional<double> log_L) {
  TheoremBExponents e = theoremB_exponents(spec);
  const auto& k = specfun::default_constants();
  double log_value = e.a.to_double() + e.b.to_double() * k.log_pi + e.c.to_double() * k.log_gamma2_half;
  if (e.has_l_slot) {
    if (!log_L) log_L = known_log_L(spec);
    if (!log_L) throw std::runtime_error("predict_Zprime: no L-value for " + spec.name());
    log_value += e.l_exponent.to_double() * *log_L;
  }
  return std::exp(log_value);
}

TheoremBReport theoremB_report(const GroupSpec& spec) {
  TheoremBReport r;
  r.group = spec.name();
  r.invariants = lengthspec::group_invariants(spec);
  r.exponents = theoremB_exponents(spec);
  r.caveats.push_back("defined up to an algebraic factor");
  if (spec.kind == GroupKind::Principal2)
    r.caveats.push_back("extension: self-intersection 4m(2 zeta'(-1) + zeta(-1)) reused for Gamma(2), certified by the anchor");
  if (r.exponents.has_l_slot) {
    if (auto l = known_log_L(spec)) {
      r.numeric_prediction = predict_Zprime(spec, l);
      r.caveats.push_back("L(0,M_Gamma) = L(2, Sym^2 f) for the level-11 newform");
    } else {
      r.caveats.push_back("numeric prediction unavailable: no L-value at this level");
    }
  } else {
    r.numeric_prediction = predict_Zprime(spec);
  }
  return r;
}

}  // namespace zal::arakelov
