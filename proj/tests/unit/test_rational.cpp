#include "doctest.h"

#include <cmath>
#include <random>

#include "zal/rational.hpp"

using zal::Rational;
using zal::reconstruct_rational;

namespace {

// Oracle: linear scan over denominators.
std::optional<Rational> scan_reconstruct(double x, std::int64_t max_den, double tol) {
  for (std::int64_t q = 1; q <= max_den; ++q) {
    long double p = std::nearbyint(static_cast<long double>(x) * q);
    for (long double cand : {p - 1, p, p + 1}) {
      if (std::fabs(static_cast<long double>(x) - cand / q) <= tol) {
        return Rational(static_cast<std::int64_t>(cand), q);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(5, 3) - Rational(5, 3) == Rational(0));
  CHECK((Rational(0) - Rational(7, 9)).str() == "-7/9");
  CHECK(Rational(-8, 3) < Rational(5, 3));
  CHECK(Rational::parse("-16/3") == Rational(-16, 3));
  CHECK(Rational::parse("4").is_integer());
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x/3"), std::invalid_argument);
  Rational big(INT64_MAX / 2);
  CHECK_THROWS_AS(big * Rational(4), zal::RationalOverflow);
}

TEST_CASE("reconstruction finds exact fractions") {
  auto r = reconstruct_rational(8.0 / 11.0, 10000, 1e-9);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(8, 11));
  auto n = reconstruct_rational(-16.0 / 3.0, 10000, 1e-12);
  REQUIRE(n.has_value());
  CHECK(*n == Rational(-16, 3));
  CHECK(!reconstruct_rational(M_PI, 100, 1e-9).has_value());
}

TEST_CASE("reconstruction agrees with linear-scan oracle") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> xs(-5.0, 5.0);
  std::uniform_int_distribution<int> exps(3, 9);
  for (int trial = 0; trial < 400; ++trial) {
    double x = xs(rng);
    double tol = std::pow(10.0, -exps(rng));
    auto fast = reconstruct_rational(x, 2000, tol);
    auto slow = scan_reconstruct(x, 2000, tol);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(fast->den() == slow->den());
  }
}
