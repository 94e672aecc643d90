#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zal::lengthspec {

enum class GroupKind { Full, Principal2, Gamma0, Gamma1 };

struct GroupSpec {
  GroupKind kind = GroupKind::Full;
  int p = 0;  // level for Gamma0 / Gamma1

  static GroupSpec full() { return {GroupKind::Full, 0}; }
  static GroupSpec principal2() { return {GroupKind::Principal2, 0}; }
  static GroupSpec gamma0(int p) { return {GroupKind::Gamma0, p}; }
  static GroupSpec gamma1(int p) { return {GroupKind::Gamma1, p}; }

  /// Throws std::invalid_argument unless p is a prime >= 11 for Gamma0/Gamma1.
  void validate() const;
  /// "full", "gamma2", "gamma0(11)", ...
  std::string name() const;
};

struct GroupInvariants {
  int g = 0;   // genus
  int n = 0;   // cusps
  int m = 0;   // index of the image in PSL2(Z)
  int e2 = 0;  // elliptic points of order 2
  int e3 = 0;  // elliptic points of order 3
  bool torsion_free() const { return e2 == 0 && e3 == 0; }
};

GroupInvariants group_invariants(const GroupSpec& spec);

bool is_prime(std::int64_t n);

/// 2 x 2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  std::int64_t trace() const { return a + d; }
  std::int64_t det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // for det = 1
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Membership of +-X in the group.
bool in_group(const GroupSpec& spec, const Mat2& x);

/// Binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t disc() const { return b * b - 4 * a * c; }
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// Gauss-reduced forms of discriminant D: 0 < b < sqrt(D),
/// sqrt(D) - b < 2|a| < sqrt(D) + b. All forms, primitive or not.
std::vector<QuadForm> reduced_forms(std::int64_t D);

/// Reduction step: (a, b, c) -> (c, b', a') with b' = -b mod 2c in
/// (sqrt(D) - 2|c|, sqrt(D)).
QuadForm rho(const QuadForm& f);

/// Cycles of reduced forms under rho, in a deterministic order.
std::vector<std::vector<QuadForm>> reduced_cycles(std::int64_t D);

/// Number of reduction cycles of discriminant D. Throws std::invalid_argument
/// unless D > 0, D non-square and D = 0, 1 mod 4.
std::int64_t class_number_indefinite(std::int64_t D);

/// Matrix of trace t attached to a form of discriminant t^2 - 4:
/// [[(t - b)/2, -c], [a, (t + b)/2]].
Mat2 form_matrix(const QuadForm& f, std::int64_t t);

/// True if X = +-Y^k for some k >= 2 and Y with +-Y in the group.
bool is_proper_power(const Mat2& x, const std::function<bool(const Mat2&)>& member);

/// tr(Y^k) for tr(Y) = t.
std::int64_t power_trace(std::int64_t t, int k);

double geodesic_length(std::int64_t trace);

struct GeodesicClass {
  std::int64_t trace = 0;
  double length = 0.0;
  std::int64_t multiplicity = 0;
};

struct LengthSpectrum {
  GroupSpec group;
  std::int64_t max_trace = 0;
  std::vector<GeodesicClass> entries;  // ascending length, one entry per trace
  bool has_torsion = false;            // group has elliptic elements

  /// Entries with trace <= t.
  LengthSpectrum filtered(std::int64_t t) const;
  /// #{primitive classes with length <= L}, counted with multiplicity.
  std::int64_t counting(double L) const;
  /// Length cutoff up to which the spectrum is complete.
  double max_length() const;
};

/// Primitive hyperbolic classes of PSL2(Z) with trace in [3, max_trace].
LengthSpectrum modular_spectrum(std::int64_t max_trace);

/// Primitive hyperbolic classes of the subgroup with trace <= max_trace, by
/// lifting ambient primitive classes through the coset permutation.
LengthSpectrum subgroup_spectrum(const GroupSpec& spec, std::int64_t max_trace);

/// CSV "trace,length,multiplicity" with 17 significant digits.
std::string to_csv(const LengthSpectrum& s);
void write_csv(const LengthSpectrum& s, const std::string& path);

}  // namespace zal::lengthspec
