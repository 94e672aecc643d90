#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zal/lengthspec.hpp"
#include "zal/rational.hpp"
#include "zal/tautconst.hpp"

namespace zal::arakelov {

/// Label of the symbolic slot for L(0, M_Gamma) = prod L(2, Sym^2 f).
inline const std::string kLSlot = "L(0,M_Gamma)";

/// Arithmetic degree as an exact form, its class, and a numeric value when
/// every slot it uses has a known value.
struct ArithDegree {
  tautconst::LogLinearForm form;
  tautconst::TranscendenceVector vector;
  std::optional<double> numeric;
  std::vector<std::string> provenance;
  std::vector<std::string> flags;

  /// |numeric - vector evaluation|, or 0 without a numeric value.
  double coherence_residual() const;
};

/// log L(2, Sym^2 f) for the level-11 newform, computed once.
double level11_log_L();

/// log L(0, M_Gamma) when known: level 11 only (Gamma0(11) and Gamma1(11)
/// share the single newform).
std::optional<double> known_log_L(const lengthspec::GroupSpec& spec);

/// -2 log C for the trivial bundle with norm C |.|.
ArithDegree adeg_trivial_bundle(double C, const tautconst::LogLinearForm& log_C);

/// 2g log pi - log L(0, M_Gamma); zero for genus 0.
ArithDegree adeg_lambda_L2(const lengthspec::GroupSpec& spec);

/// Zero. Throws std::domain_error for groups with torsion, i.e. Gamma0(p)
/// with p != 11 mod 12 and the full group. Gamma(2) is flagged "extension".
ArithDegree adeg_psi_W(const lengthspec::GroupSpec& spec);

/// 4m (2 zeta'(-1) + zeta(-1)); same hypotheses and flags as adeg_psi_W.
ArithDegree self_intersection(const lengthspec::GroupSpec& spec);

/// log Z'(Y(Gamma), 1) from
/// 12 log Z' = SI - 2 log C - 12 log E - 12 adeg lambda_L2 - adeg psi_W.
ArithDegree theoremA_assemble(const lengthspec::GroupSpec& spec);

struct TheoremBExponents {
  Rational a;
  Rational b;
  Rational c;
  Rational l_exponent;  // 1 for genus >= 1
  bool has_l_slot = false;
};

TheoremBExponents theoremB_exponents(const lengthspec::GroupSpec& spec);

/// e^a pi^b Gamma_2(1/2)^c L(0, M_Gamma), defined up to an algebraic factor.
/// Throws std::runtime_error when the L-value is needed but unknown, unless
/// log_L is supplied.
double predict_Zprime(const lengthspec::GroupSpec& spec, std::optional<double> log_L = std::nullopt);

struct TheoremBReport {
  std::string group;
  lengthspec::GroupInvariants invariants;
  TheoremBExponents exponents;
  std::optional<double> numeric_prediction;
  std::vector<std::string> caveats;
};

TheoremBReport theoremB_report(const lengthspec::GroupSpec& spec);

}  // namespace zal::arakelov
