#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "zal/tautconst.hpp"

using namespace zal;
using namespace zal::tautconst;

namespace {

LogLinearForm random_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  LogLinearForm f{r(), r(), r(), r(), {}};
  if (num(rng) > 0) f.l_slots["L(0,M)"] = r();
  return f;
}

}  // namespace

TEST_CASE("surface type stability") {
  CHECK_NOTHROW((SurfaceType{0, 3}.validate()));
  CHECK_THROWS_AS((SurfaceType{1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SurfaceType{0, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(const_C(SurfaceType{0, 1}), std::invalid_argument);
}

TEST_CASE("C(1,1) form and reduction") {
  ConstValue c = const_C({1, 1});
  CHECK(c.log_form == LogLinearForm::zeta_prime(-12) + LogLinearForm::one(Rational(1, 2)));
  TranscendenceVector v = reduce(c.log_form);
  CHECK(v.c_one == Rational(1, 2));
  CHECK(v.c_logpi == Rational(-2));
  CHECK(v.c_logGamma2half == Rational(8));
}

TEST_CASE("reduce basics") {
  TranscendenceVector z = reduce(LogLinearForm::zeta_prime(1));
  CHECK(z.c_one == Rational(0));
  CHECK(z.c_logpi == Rational(1, 6));
  CHECK(z.c_logGamma2half == Rational(-2, 3));
  TranscendenceVector l2 = reduce(LogLinearForm::log2(1));
  CHECK(l2.same_class(TranscendenceVector{}));
}

TEST_CASE("reduce is linear and evaluation is faithful") {
  std::mt19937_64 rng(7);
  const auto& k = specfun::default_constants();
  std::map<std::string, double> slots{{"L(0,M)", 0.3}};
  for (int i = 0; i < 200; ++i) {
    LogLinearForm x = random_form(rng), y = random_form(rng);
    Rational a(static_cast<std::int64_t>(rng() % 7) - 3, 1 + static_cast<std::int64_t>(rng() % 5));
    TranscendenceVector lhs = reduce(x + a * y);
    TranscendenceVector rhs = reduce(x) + a * reduce(y);
    CHECK(lhs.same_class(rhs));
    CHECK(lhs.log2_residue == rhs.log2_residue);
    // the dropped log 2 residue makes the class representative exact
    CHECK(std::abs(lhs.evaluate(k, slots) - (x + a * y).evaluate(k, slots)) < 1e-11);
  }
}

TEST_CASE("numeric constants match their forms") {
  const auto& k = specfun::default_constants();
  for (int g = 0; g <= 4; ++g) {
    for (int n = 0; n <= 5; ++n) {
      SurfaceType t{g, n};
      if (t.kappa() <= 0) continue;
      ConstValue c = const_C(t), e = const_E(t);
      CHECK(std::abs(std::log(c.value) - c.log_form.evaluate(k)) < 1e-11);
      CHECK(std::abs(std::log(e.value) - e.log_form.evaluate(k)) < 1e-11);
    }
  }
}

TEST_CASE("clutching relations for C and E") {
  for (int g = 0; g <= 4; ++g) {
    for (int n = 0; n <= 5; ++n) {
      SurfaceType t{g, n};
      if (t.kappa() <= 0 || g + n < 2) continue;
      SurfaceType closed{g + n, 0};
      ConstValue c11 = const_C({1, 1}), e11 = const_E({1, 1});
      ConstValue c = const_C(t), e = const_E(t);
      ConstValue cc = const_C(closed), ec = const_E(closed);
      CHECK(relative_residual(cc.value, c.value * std::pow(c11.value, n)) < 1e-12);
      CHECK(relative_residual(ec.value, std::pow(std::numbers::pi, n) * e.value * std::pow(e11.value, n)) < 1e-12);
      CHECK(cc.log_form == c.log_form + Rational(n) * c11.log_form);
      CHECK(ec.log_form == LogLinearForm::logpi(n) + e.log_form + Rational(n) * e11.log_form);
    }
  }
}

TEST_CASE("quillen scale") {
  SurfaceType t{1, 1};
  double e = const_E(t).value;
  CHECK(std::abs(quillen_scale(t, 1.0 / e) - 1.0) < 1e-14);
  CHECK(std::abs(quillen_scale(t, 1.0) - 1.0 / std::sqrt(e)) < 1e-14);
  CHECK(std::abs(quillen_scale(t, 4 * 0.37) - quillen_scale(t, 0.37) / 2) < 1e-14);
  CHECK_THROWS_AS(quillen_scale(t, 0.0), std::invalid_argument);
}

TEST_CASE("determinants of Laplacians") {
  CHECK(relative_residual(detprime_laplacian(2, 1.0, Laplacian::Dbar), const_E({2, 0}).value) < 1e-12);
  for (int g = 2; g <= 6; ++g) {
    double z = 0.1 * g;
    CHECK(relative_residual(detprime_laplacian(g, z, Laplacian::Dbar), const_E({g, 0}).value * z) < 1e-12);
  }
  double ratio = detprime_laplacian(3, 2.5, Laplacian::Dbar) / detprime_laplacian(3, 2.5, Laplacian::Scalar);
  CHECK(std::abs(ratio - std::pow(2.0, 5.0 / 3)) < 1e-13);
  CHECK_THROWS_AS(detprime_laplacian(2, 0.0, Laplacian::Scalar), std::invalid_argument);
  CHECK_THROWS_AS(detprime_laplacian(1, 1.0, Laplacian::Scalar), std::invalid_argument);
}
