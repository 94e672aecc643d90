#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "zal/arakelov.hpp"

using namespace zal;
using namespace zal::arakelov;
using lengthspec::GroupSpec;
using tautconst::LogLinearForm;

namespace {

struct Closed {
  Rational a, b, c;
};

// hand derivation in terms of (g, n, m)
Closed closed_form(const GroupSpec& spec) {
  auto inv = lengthspec::group_invariants(spec);
  int kappa = 2 * inv.g - 2 + inv.n;
  return {Rational(kappa, 6) - Rational(inv.m, 36), Rational(1 - 3 * inv.g) + Rational(inv.m, 9), Rational(-4 * inv.m, 9)};
}

}  // namespace

TEST_CASE("gamma2 anchor") {
  TheoremBExponents e = theoremB_exponents(GroupSpec::principal2());
  CHECK(e.a == Rational(0));
  CHECK(e.b == Rational(5, 3));
  CHECK(e.c == Rational(-8, 3));
  CHECK_FALSE(e.has_l_slot);
  // 4 pi^{5/3} Gamma_2(1/2)^{-8/3}
  const auto& k = specfun::default_constants();
  double exact = 4 * std::exp(5.0 / 3 * k.log_pi - 8.0 / 3 * k.log_gamma2_half);
  CHECK(std::abs(4 * predict_Zprime(GroupSpec::principal2()) / exact - 1) < 1e-13);
}

TEST_CASE("level 11 exponents") {
  TheoremBExponents g0 = theoremB_exponents(GroupSpec::gamma0(11));
  CHECK(g0.a == Rational(0));
  CHECK(g0.b == Rational(-2, 3));
  CHECK(g0.c == Rational(-16, 3));
  CHECK(g0.has_l_slot);
  CHECK(g0.l_exponent == Rational(1));
  TheoremBExponents g1 = theoremB_exponents(GroupSpec::gamma1(11));
  CHECK(g1.a == Rational(0));
  CHECK(g1.b == Rational(14, 3));
  CHECK(g1.c == Rational(-80, 3));
  CHECK(g1.l_exponent == Rational(1));
}

TEST_CASE("closed forms over many levels") {
  for (int p : {11, 13, 17, 23, 29, 47, 59, 71, 83, 107}) {
    std::vector<GroupSpec> specs{GroupSpec::gamma1(p)};
    if (p % 12 == 11) specs.push_back(GroupSpec::gamma0(p));
    for (const GroupSpec& s : specs) {
      TheoremBExponents e = theoremB_exponents(s);
      Closed c = closed_form(s);
      CHECK_MESSAGE(e.a == c.a, s.name());
      CHECK_MESSAGE(e.b == c.b, s.name());
      CHECK_MESSAGE(e.c == c.c, s.name());
      CHECK(e.c < Rational(0));
      auto inv = lengthspec::group_invariants(s);
      // torsion-free: 2g - 2 + n = m / 6, so a vanishes
      CHECK(6 * (2 * inv.g - 2 + inv.n) == inv.m);
      CHECK(e.a == Rational(0));
      CHECK(e.has_l_slot == (inv.g >= 1));
      if (inv.g >= 1) CHECK(e.l_exponent == Rational(1));
    }
  }
}

TEST_CASE("hypotheses") {
  CHECK_THROWS_AS(adeg_psi_W(GroupSpec::gamma0(13)), std::domain_error);
  CHECK_THROWS_AS(self_intersection(GroupSpec::gamma0(13)), std::domain_error);
  CHECK_THROWS_AS(theoremB_exponents(GroupSpec::full()), std::domain_error);
  CHECK_THROWS_AS(theoremB_exponents(GroupSpec::gamma0(7)), std::invalid_argument);
  CHECK(adeg_psi_W(GroupSpec::gamma0(11)).vector.same_class(tautconst::TranscendenceVector{}));
  CHECK(adeg_psi_W(GroupSpec::gamma1(11)).numeric.value() == 0);
  CHECK(adeg_psi_W(GroupSpec::principal2()).flags == std::vector<std::string>{"extension"});
}

TEST_CASE("self intersection forms") {
  ArithDegree g0 = self_intersection(GroupSpec::gamma0(11));
  CHECK(g0.form == LogLinearForm::zeta_prime(Rational(96)) + LogLinearForm::one(Rational(-4)));
  CHECK(g0.flags.empty());
  ArithDegree p2 = self_intersection(GroupSpec::principal2());
  CHECK(p2.form == LogLinearForm::zeta_prime(Rational(48)) + LogLinearForm::one(Rational(-2)));
  CHECK(p2.flags == std::vector<std::string>{"extension"});
  for (const GroupSpec& s : {GroupSpec::principal2(), GroupSpec::gamma0(11), GroupSpec::gamma1(13)})
    CHECK(self_intersection(s).numeric.value() < 0);
}

TEST_CASE("trivial bundle and lambda") {
  CHECK(adeg_trivial_bundle(1.0, LogLinearForm{}).numeric.value() == 0);
  CHECK_THROWS_AS(adeg_trivial_bundle(0.0, LogLinearForm{}), std::invalid_argument);
  auto C = tautconst::const_C({1, 1});
  ArithDegree t = adeg_trivial_bundle(C.value, C.log_form);
  CHECK(t.vector.same_class(Rational(-2) * tautconst::reduce(C.log_form)));
  CHECK(t.coherence_residual() < 1e-9);

  ArithDegree lam = adeg_lambda_L2(GroupSpec::gamma0(11));
  CHECK(lam.form == LogLinearForm::logpi(Rational(2)) + LogLinearForm::slot(kLSlot, Rational(-1)));
  const auto& k = specfun::default_constants();
  CHECK(std::abs(lam.numeric.value() - (2 * k.log_pi - level11_log_L())) < 1e-14);
  CHECK(std::abs(std::exp(level11_log_L()) - 1.0575992445909577) < 1e-12);
  ArithDegree zero = adeg_lambda_L2(GroupSpec::principal2());
  CHECK(zero.form == LogLinearForm{});
  CHECK_FALSE(adeg_lambda_L2(GroupSpec::gamma0(23)).numeric.has_value());
}

TEST_CASE("assembly is linear") {
  for (const GroupSpec& s : {GroupSpec::principal2(), GroupSpec::gamma0(11), GroupSpec::gamma1(11)}) {
    ArithDegree whole = theoremA_assemble(s);
    auto inv = lengthspec::group_invariants(s);
    tautconst::SurfaceType t{inv.g, inv.n};
    auto C = tautconst::const_C(t);
    auto E = tautconst::const_E(t);
    // reduce each piece first, then combine
    tautconst::TranscendenceVector parts = tautconst::reduce(self_intersection(s).form) +
                                           Rational(-2) * tautconst::reduce(C.log_form) -
                                           Rational(12) * tautconst::reduce(E.log_form) -
                                           Rational(12) * tautconst::reduce(adeg_lambda_L2(s).form);
    CHECK(whole.vector.same_class(Rational(1, 12) * parts));
    CHECK(whole.vector.log2_residue == (Rational(1, 12) * parts).log2_residue);
    REQUIRE(whole.numeric.has_value());
    CHECK(whole.coherence_residual() < 1e-9);
  }
}

TEST_CASE("predictions") {
  double z = predict_Zprime(GroupSpec::gamma0(11));
  CHECK(z > 0);
  CHECK(std::isfinite(z));
  CHECK_THROWS_AS(predict_Zprime(GroupSpec::gamma0(23)), std::runtime_error);
  CHECK(predict_Zprime(GroupSpec::gamma0(23), 0.5) > 0);

  TheoremBReport r = theoremB_report(GroupSpec::gamma0(11));
  CHECK(r.group == "gamma0(11)");
  CHECK(r.invariants.m == 12);
  REQUIRE(r.numeric_prediction.has_value());
  CHECK(*r.numeric_prediction == z);
  CHECK_FALSE(theoremB_report(GroupSpec::gamma0(23)).numeric_prediction.has_value());
  CHECK(theoremB_report(GroupSpec::principal2()).caveats.size() == 2);
}
