#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zal/selberg.hpp"

using namespace zal;
using namespace zal::selberg;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

}  // namespace

TEST_CASE("local factor limits") {
  LocalFactorEval far = local_factor(50, 1, 1e-15);
  CHECK(std::abs(far.value - 1) < 1e-20);
  LocalFactorEval mid = local_factor(0.1, 1, 1e-14);
  CHECK(mid.value > 0);
  CHECK(mid.value < 1);
  CHECK(mid.tail_bound <= 1e-14);
  CHECK_THROWS_AS(local_factor(0, 1, 1e-12), std::invalid_argument);
  CHECK_THROWS_AS(local_factor(1, 0, 1e-12), std::invalid_argument);
  CHECK_THROWS_AS(local_factor(1e-6, 1, 1e-15, Convention::FromOne, 1000), std::runtime_error);
}

TEST_CASE("local factor self-refinement") {
  // oracle: a 2K-term product with K the automatically chosen truncation
  LocalFactorEval e = local_factor(1.0, 1.0, 1e-12);
  long double direct = 0;
  for (long k = 1; k <= 2 * e.terms; ++k) direct += 2 * std::log1p(-std::exp(-(1.0L + k) * 1.0L));
  CHECK(std::abs(e.log_value - static_cast<double>(direct)) <= e.tail_bound);
}

TEST_CASE("conventions differ by one factor") {
  for (double l : {0.05, 0.3, 2.0}) {
    double a = local_factor(l, 1.5, 1e-15, Convention::FromZero).log_value;
    double b = local_factor(l, 1.5, 1e-15, Convention::FromOne).log_value;
    CHECK(std::abs(a - b - 2 * std::log1p(-std::exp(-1.5 * l))) < 1e-12);
  }
}

TEST_CASE("local factor increases in s") {
  for (double l : {0.1, 1.0, 3.0}) {
    double prev = 0;
    for (double s = 0.1; s < 6; s += 0.3) {
      double v = local_factor(l, s, 1e-15).value;
      CHECK(v > prev);
      prev = v;
    }
    CHECK(prev < 1);
  }
}

TEST_CASE("small-length asymptotic") {
  std::vector<double> ls{0.2, 0.1, 0.05, 0.025};
  for (double s : {0.5, 1.0, 2.0}) {
    auto v = small_length_asymptotic(s, ls);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(std::abs(v[i] - kTwoPi) < std::abs(v[i - 1] - kTwoPi));
  }
  auto v1 = small_length_asymptotic(1.0, {0.1, 0.05});
  CHECK(std::abs(v1[0] / kTwoPi - 1) < 0.01);
  CHECK(std::abs(v1[1] / kTwoPi - 1) < 0.005);
  // the k >= 1 product needs l^{2s+1} Gamma(s+1)^2 instead and blows up here
  auto lit = small_length_asymptotic(1.0, ls, Convention::FromOne);
  CHECK(lit.back() > 100 * kTwoPi);
}

TEST_CASE("Selberg zeta basics") {
  lengthspec::LengthSpectrum empty = lengthspec::modular_spectrum(2);
  CHECK(selberg_zeta(empty, 2).log_value == 0.0);
  CHECK(ruelle_ratio(empty, 2) == 1.0);
  auto spec = lengthspec::modular_spectrum(30);
  CHECK_THROWS_AS(selberg_zeta(spec, 1.005), std::domain_error);
  auto doubled = spec;
  for (auto& e : doubled.entries) e.multiplicity *= 2;
  CHECK(selberg_zeta(doubled, 2).log_value == 2 * selberg_zeta(spec, 2).log_value);
}

TEST_CASE("additivity over disjoint unions") {
  auto a = lengthspec::subgroup_spectrum(lengthspec::GroupSpec::gamma0(11), 40);
  auto b = lengthspec::subgroup_spectrum(lengthspec::GroupSpec::principal2(), 40);
  lengthspec::LengthSpectrum u = a;
  u.entries.insert(u.entries.end(), b.entries.begin(), b.entries.end());
  double lhs = selberg_zeta(u, 2.5).log_value;
  double rhs = selberg_zeta(a, 2.5).log_value + selberg_zeta(b, 2.5).log_value;
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("Selberg zeta self-convergence") {
  auto s40 = lengthspec::modular_spectrum(40), s80 = lengthspec::modular_spectrum(80);
  ZetaEval z40 = selberg_zeta(s40, 2), z80 = selberg_zeta(s80, 2);
  double change = std::abs(z80.log_value - z40.log_value);
  CHECK(change < 1e-6);
  CHECK(z40.tail_estimate > change);
  // tighter local tolerance moves the value by less than the reported tail
  ZetaEval fine = selberg_zeta(s40, 2, 1e-15);
  CHECK(std::abs(fine.log_value - z40.log_value) < z40.tail_estimate);
  double r = ruelle_ratio(s80, 2);
  CHECK(std::abs(r * std::exp(selberg_zeta(s80, 3).log_value) - std::exp(z80.log_value)) < 1e-15);
  CHECK(std::abs(r - ruelle_ratio(s40, 2)) < 1e-6);
}
