#include "doctest.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zal/modularforms.hpp"

using namespace zal;
using namespace zal::modularforms;

namespace {

const QExpansion& form() {
  static const QExpansion f = eta_product_qexp(600);
  return f;
}

}  // namespace

TEST_CASE("eta product leading terms") {
  const QExpansion& f = form();
  CHECK(f.a(1) == 1);
  // q - 2q^2 - q^3 + 2q^4 + q^5 + 2q^6 - 2q^7
  std::vector<std::int64_t> head{1, -2, -1, 2, 1, 2, -2};
  for (std::size_t n = 1; n <= head.size(); ++n) CHECK(f.a(n) == head[n - 1]);
  CHECK(eta_product_qexp(1).coeffs == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(eta_product_qexp(0), std::invalid_argument);
}

TEST_CASE("eta product against point counting") {
  const QExpansion& f = form();
  for (const auto& [ell, a] : point_count_table(200)) CHECK_MESSAGE(f.a(static_cast<std::size_t>(ell)) == a, ell);
  CHECK(point_count_table(200).size() == 45);
  CHECK_THROWS_AS(point_count_ap(11), std::invalid_argument);
  CHECK_THROWS_AS(point_count_ap(9), std::invalid_argument);
}

TEST_CASE("hecke relations") {
  const QExpansion& f = form();
  for (std::size_t m = 1; m < 500; ++m)
    for (std::size_t n = m; m * n < 500; ++n)
      if (std::gcd(m, n) == 1) CHECK(f.a(m * n) == f.a(m) * f.a(n));
  for (std::int64_t p : {2, 3, 5, 7, 13, 17, 19, 23}) {
    auto up = static_cast<std::size_t>(p);
    CHECK(f.a(up * up) == f.a(up) * f.a(up) - p);
    if (up * up * up <= f.N()) CHECK(f.a(up * up * up) == f.a(up) * f.a(up * up) - p * f.a(up));
  }
  // U_11 eigenvalue
  CHECK(f.a(11) == 1);
  CHECK(f.a(121) == 1);
}

TEST_CASE("hasse bound and local factor band") {
  for (const auto& [ell, a] : point_count_table(400)) {
    CHECK(a * a <= 4 * ell);
    Sym2LocalFactor lf = sym2_local_factor(ell, a);
    double x = 1.0 / (static_cast<double>(ell) * ell);
    double band = 4 / std::sqrt(static_cast<double>(ell));
    double v = lf.eval(x);
    CHECK(v >= std::pow(1 - band, 3) - 1e-12);
    CHECK(v <= std::pow(1 + band, 3));
    // roots l alpha^2, l alpha beta, l beta^2 all of size l
    CHECK(lf.poly_coeffs.back() == -ell * ell * ell);
  }
}

TEST_CASE("sym2 coefficients against squares") {
  // away from 11: L(s, Sym^2 f) = zeta(2s - 2) sum a_{n^2} n^{-s}
  const QExpansion& f = form();
  Sym2Hypothesis hyp;
  std::vector<std::int64_t> b = sym2_coefficients(f, hyp, 24);
  for (std::size_t n = 1; n <= 24; ++n) {
    if (n % 11 == 0) continue;
    std::int64_t expect = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
      if (n % (d * d) == 0) {
        std::size_t m = n / (d * d);
        expect += static_cast<std::int64_t>(d * d) * f.a(m * m);
      }
    CHECK_MESSAGE(b[n - 1] == expect, n);
  }
  // bad prime powers follow the hypothesis
  Sym2Hypothesis alt{121, {1, 11}, 1};
  std::vector<std::int64_t> c = sym2_coefficients(f, alt, 121);
  CHECK(c[10] == -11);
  CHECK(c[120] == 121);
  CHECK(b[10] == 1);
  // dropping Euler data above 7
  std::vector<std::int64_t> d = sym2_coefficients(f, hyp, 24, 7);
  CHECK(d[12] == 0);
  CHECK(d[6] == b[6]);
  CHECK_THROWS_AS(sym2_coefficients(eta_product_qexp(10), hyp, 20), std::invalid_argument);
}

TEST_CASE("gamma weight mellin transform") {
  // int_0^inf phi(x) x^{s-1} dx = Gamma(s) Gamma(s/2), by the trapezoid rule in log x
  for (double s : {1.0, 2.0, 3.5}) {
    double h = 0.01, sum = 0;
    for (double u = -40; u <= 6; u += h) {
      double x = std::exp(u);
      sum += gamma_weight(x) * std::pow(x, s);
    }
    CHECK(std::abs(sum * h / (std::tgamma(s) * std::tgamma(s / 2)) - 1) < 1e-10);
  }
  CHECK_THROWS_AS(gamma_weight(0), std::domain_error);
}

TEST_CASE("functional equation picks one hypothesis") {
  HypothesisSearch search = search_sym2_hypotheses(form());
  CHECK(search.candidates.size() == 28);
  REQUIRE(search.accepted.size() == 1);
  const Sym2Hypothesis& h = search.candidates[search.accepted.front()];
  CHECK(h.conductor == 121);
  CHECK(h.bad_factor == std::vector<std::int64_t>{1, -1});
  CHECK(h.sign == 1);
  CHECK(search.residuals[search.accepted.front()] < 1e-12);
  for (std::size_t i = 0; i < search.candidates.size(); ++i)
    if (i != search.accepted.front()) CHECK(search.residuals[i] > 1e-4);
}

TEST_CASE("symmetric square L value") {
  LValueResult r = sym2_L_value(form(), 2.0, 1e-10);
  CHECK(r.value > 0);
  CHECK(r.error < 1e-10);
  CHECK(r.cutoff_change < 1e-10);
  CHECK(r.truncation_change < 1e-6);
  CHECK(r.fe_residual < 1e-12);
  // the smoothed sum is independent of the split point
  double a = sym2_L_smoothed(form(), r.hypothesis, 2.0, 1.0);
  double b = sym2_L_smoothed(form(), r.hypothesis, 2.0, 1.5);
  CHECK(std::abs(a - b) < 1e-12);
  double c = sym2_L_smoothed(form(), r.hypothesis, 2.5, 1.0);
  double d = sym2_L_smoothed(form(), r.hypothesis, 2.5, 2.0);
  CHECK(std::abs(c - d) < 1e-12);
  CHECK_THROWS_AS(sym2_L_value(form(), 1.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(sym2_L_value(form(), 3.0, 1e-6), std::invalid_argument);
}

TEST_CASE("petersson norm") {
  const QExpansion& f = form();
  CHECK(atkin_lehner_sign(f) == -1);
  PeterssonResult p = petersson_norm(f, 1e-8);
  CHECK(p.value > 0);
  CHECK(p.est_error < 1e-8);
  CHECK(p.al_eigenvalue == -1);
  CHECK(std::abs(petersson_integral(f, 2 * p.mesh) - p.value) < p.est_error);

  QExpansion zero{11, 2, std::vector<std::int64_t>(50, 0)};
  CHECK(petersson_norm(zero, 1e-8).value == 0);

  QExpansion q{11, 2, {1}};
  CHECK_THROWS_AS(atkin_lehner_sign(q), std::runtime_error);
  QExpansion other = f;
  other.level = 37;
  CHECK_THROWS_AS(petersson_norm(other, 1e-8), std::invalid_argument);
}

TEST_CASE("hida ratio") {
  HidaResult h = hida_ratio(1e-6);
  CHECK(h.ratio > 0);
  CHECK(h.error < 1e-6);
  REQUIRE(h.guess.has_value());
  CHECK(h.guess->den() <= 10000);
  CHECK(*h.guess == Rational(8, 11));
  CHECK(std::abs(h.ratio - 8.0 / 11) < 10 * h.error);
  CHECK_FALSE(h.control_guess.has_value());
}

TEST_CASE("coefficient csv") {
  std::string csv = coefficients_csv(eta_product_qexp(3));
  CHECK(csv == "n,a_n\n1,1\n2,-2\n3,-1\n");
}
