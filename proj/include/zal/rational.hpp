#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace zal {

class RationalOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact rational number over 64-bit integers, always kept in lowest terms
/// with a positive denominator. Arithmetic goes through 128-bit intermediates
/// and throws RationalOverflow rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when q == 1.
  std::string str() const;
  /// Parses "p/q" or "p".
  static Rational parse(const std::string& text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Smallest-denominator rational in [x - abs_tol, x + abs_tol], found by
/// continued-fraction descent on the interval endpoints. Returns nullopt when
/// that denominator exceeds max_den.
std::optional<Rational> reconstruct_rational(double x, std::int64_t max_den, double abs_tol);

}  // namespace zal
