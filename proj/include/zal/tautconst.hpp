#pragma once

#include <map>
#include <string>

#include "zal/rational.hpp"
#include "zal/specfun.hpp"

namespace zal::tautconst {

/// Exact zeta(-1).
inline const Rational kZetaMinus1{-1, 12};

struct SurfaceType {
  int g = 0;
  int n = 0;

  /// 2g - 2 + n
  int kappa() const { return 2 * g - 2 + n; }
  /// Throws std::invalid_argument unless g, n >= 0 and 2g - 2 + n > 0.
  void validate() const;
};

/// Symbolic L-value slots: label -> rational exponent of log L.
using SlotMap = std::map<std::string, Rational>;

/// Class of a real number modulo logs of nonzero algebraic numbers, in the
/// formal basis {1, log pi, log Gamma_2(1/2)} plus symbolic log L slots.
struct TranscendenceVector {
  Rational c_one;
  Rational c_logpi;
  Rational c_logGamma2half;
  SlotMap l_slots;
  /// Coefficient of log 2 discarded on reduction. Not part of the class; kept
  /// so that numeric evaluation reproduces the representative exactly.
  Rational log2_residue;

  TranscendenceVector& operator+=(const TranscendenceVector& o);
  TranscendenceVector& operator*=(const Rational& k);
  friend TranscendenceVector operator+(TranscendenceVector a, const TranscendenceVector& b) { return a += b; }
  friend TranscendenceVector operator*(const Rational& k, TranscendenceVector a) { return a *= k; }
  friend TranscendenceVector operator-(TranscendenceVector a, const TranscendenceVector& b) {
    return a += Rational(-1) * b;
  }

  /// Equality of classes: log2_residue is ignored.
  bool same_class(const TranscendenceVector& o) const;

  /// c_one + c_logpi log pi + c_logGamma2half log Gamma_2(1/2)
  ///   + sum e log L + (include_residue ? log2_residue log 2 : 0)
  double evaluate(const specfun::SpecialConstants& k, const std::map<std::string, double>& log_slot_values,
                  bool include_residue = true) const;

  std::string str() const;
};

/// Exact linear form over {1, log 2, log pi, zeta'(-1)} plus L slots.
struct LogLinearForm {
  Rational c_one;
  Rational c_log2;
  Rational c_logpi;
  Rational c_zeta_prime;
  SlotMap l_slots;

  LogLinearForm& operator+=(const LogLinearForm& o);
  LogLinearForm& operator*=(const Rational& k);
  friend LogLinearForm operator+(LogLinearForm a, const LogLinearForm& b) { return a += b; }
  friend LogLinearForm operator-(LogLinearForm a, const LogLinearForm& b) { return a += b * Rational(-1); }
  friend LogLinearForm operator*(LogLinearForm a, const Rational& k) { return a *= k; }
  friend LogLinearForm operator*(const Rational& k, LogLinearForm a) { return a *= k; }
  friend bool operator==(const LogLinearForm&, const LogLinearForm&) = default;

  double evaluate(const specfun::SpecialConstants& k, const std::map<std::string, double>& log_slot_values = {}) const;
  std::string str() const;

  static LogLinearForm one(const Rational& c) { return {c, 0, 0, 0, {}}; }
  static LogLinearForm log2(const Rational& c) { return {0, c, 0, 0, {}}; }
  static LogLinearForm logpi(const Rational& c) { return {0, 0, c, 0, {}}; }
  static LogLinearForm zeta_prime(const Rational& c) { return {0, 0, 0, c, {}}; }
  static LogLinearForm slot(const std::string& label, const Rational& c) { return {0, 0, 0, 0, {{label, c}}}; }
};

/// Drops log 2 and substitutes zeta'(-1) = (1/6) log pi - (2/3) log Gamma_2(1/2)
/// - (1/36) log 2.
TranscendenceVector reduce(const LogLinearForm& form);

struct ConstValue {
  double value = 0.0;
  LogLinearForm log_form;
};

/// C(g,n) = exp(kappa (zeta'(-1)/zeta(-1) + 1/2)).
ConstValue const_C(const SurfaceType& t, const specfun::SpecialConstants& k = specfun::default_constants());

/// E(g,n) = 2^{(g+2-n)/3} pi^{-n/2} exp(kappa (2 zeta'(-1) - 1/4 + log(2 pi)/2)).
ConstValue const_E(const SurfaceType& t, const specfun::SpecialConstants& k = specfun::default_constants());

/// (E(g,n) z'(1))^{-1/2}
double quillen_scale(const SurfaceType& t, double z_prime_1,
                     const specfun::SpecialConstants& k = specfun::default_constants());

enum class Laplacian { Scalar, Dbar };

/// det' of the scalar Laplacian Z'(X,1) exp((2g-2)(2 zeta'(-1) - 1/4 + log(2 pi)/2)),
/// or of the dbar Laplacian, which carries an extra 2^{(g+2)/3}.
double detprime_laplacian(int g, double z_prime_1, Laplacian which,
                          const specfun::SpecialConstants& k = specfun::default_constants());

/// |a / b - 1|
double relative_residual(double a, double b);

}  // namespace zal::tautconst
