#include "zal/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

namespace zal {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw RationalOverflow("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  if (r.num_ == 0) r.den_ = 1;
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  }
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // cross-reduce first so that products of reduced fractions stay small
  __int128 g1 = gcd128(num_, o.den_);
  __int128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = (static_cast<__int128>(num_) / g1) * (o.num_ / g2);
  __int128 d = (static_cast<__int128>(den_) / g2) * (o.den_ / g1);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// Simplest rational in [lo, hi] by continued-fraction descent: if the interval
// holds an integer take the one nearest zero from below, otherwise peel off
// the common partial quotient and recurse on the reciprocal interval.
bool simplest_in(long double lo, long double hi, int depth, std::int64_t max_den, __int128& p, __int128& q) {
  if (depth > 80) return false;
  long double c = std::ceil(lo);
  if (c <= hi) {
    long double f = std::floor(hi);
    long double pick = (c > 0) ? c : (f < 0 ? f : 0.0L);
    p = static_cast<__int128>(pick);
    q = 1;
    return true;
  }
  long double f = std::floor(lo);
  __int128 p2, q2;
  if (!simplest_in(1.0L / (hi - f), 1.0L / (lo - f), depth + 1, max_den, p2, q2)) return false;
  // x = f + 1 / (p2 / q2)
  p = static_cast<__int128>(f) * p2 + q2;
  q = p2;
  return q <= max_den;
}

}  // namespace

std::optional<Rational> reconstruct_rational(double x, std::int64_t max_den, double abs_tol) {
  if (!std::isfinite(x) || max_den < 1 || !(abs_tol >= 0.0)) return std::nullopt;
  if (std::abs(x) + abs_tol > 9.0e15) return std::nullopt;
  __int128 p, q;
  long double lo = static_cast<long double>(x) - abs_tol;
  long double hi = static_cast<long double>(x) + abs_tol;
  if (!simplest_in(lo, hi, 0, max_den, p, q) || q > max_den) return std::nullopt;
  return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
}

}  // namespace zal
