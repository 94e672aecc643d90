#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "bruteforce.hpp"
#include "zal/arakelov.hpp"
#include "zal/degeneration.hpp"
#include "zal/lengthspec.hpp"
#include "zal/modularforms.hpp"
#include "zal/selberg.hpp"
#include "zal/specfun.hpp"
#include "zal/tautconst.hpp"

namespace zal::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

bool voros(std::string& detail) {
  specfun::PrecisionBudget budget{1e-13, 1'000'000};
  double zp = specfun::zeta_prime_minus1(budget).value;
  double g2 = specfun::barnes_gamma2_half(budget).value;
  double r = std::abs(std::exp(zp) * std::pow(2.0, 1.0 / 36) * std::pow(kPi, -1.0 / 6) * std::pow(g2, 2.0 / 3) - 1);
  detail = "residual " + sci(r);
  return r < 1e-9;
}

bool relations(std::string& detail) {
  using namespace tautconst;
  double worst = 0;
  bool exact = true;
  int count = 0;
  ConstValue c11 = const_C({1, 1}), e11 = const_E({1, 1});
  for (int g = 0; g <= 4; ++g) {
    for (int n = 0; n <= 5; ++n) {
      SurfaceType t{g, n};
      if (t.kappa() <= 0 || g + n < 2) continue;
      SurfaceType closed{g + n, 0};
      ConstValue c = const_C(t), e = const_E(t), cc = const_C(closed), ec = const_E(closed);
      worst = std::max(worst, relative_residual(cc.value, c.value * std::pow(c11.value, n)));
      worst = std::max(worst, relative_residual(ec.value, std::pow(kPi, n) * e.value * std::pow(e11.value, n)));
      exact = exact && cc.log_form == c.log_form + Rational(n) * c11.log_form;
      exact = exact && ec.log_form == LogLinearForm::logpi(n) + e.log_form + Rational(n) * e11.log_form;
      ++count;
    }
  }
  detail = std::to_string(count) + " types, max residual " + sci(worst) + (exact ? ", forms exact" : ", forms differ");
  return exact && worst < 1e-12;
}

bool lemma_asymptotic(std::string& detail) {
  std::vector<double> ls{0.2, 0.1, 0.05, 0.025};
  std::vector<double> v = selberg::small_length_asymptotic(1.0, ls);
  std::vector<double> err;
  for (double x : v) err.push_back(std::abs(x / (2 * kPi) - 1));
  bool decreasing = true;
  for (std::size_t i = 1; i < err.size(); ++i) decreasing = decreasing && err[i] < err[i - 1];
  detail = "errors";
  for (double e : err) detail += " " + sci(e);
  return decreasing && err[2] < 0.02;
}

bool b_spectrum(std::string& detail) {
  using namespace degeneration;
  double worst = 0, worst_burger = 0;
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 8; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      for (double t : {1e-2, 1e-4, 1e-8}) {
        StarGraphModel model = StarGraphModel::uniform(g, n, t);
        double l = model.edge_lengths.front();
        SpectrumResult s = graph_spectrum(matrix_B(model), model.alpha);
        std::vector<double> expect(static_cast<std::size_t>(n) + 1, l);
        expect.front() = 0;
        expect.back() = (static_cast<double>(n) / model.alpha + 1) * l;
        for (std::size_t i = 0; i < expect.size(); ++i) worst = std::max(worst, std::abs(s.eigenvalues[i] - expect[i]) / l);
      }
      StarGraphModel pert = StarGraphModel::perturbed(g, n, 1e-8, 20240101);
      double target = static_cast<double>(n) / pert.alpha + 1;
      worst_burger = std::max(worst_burger, std::abs(burger_product(pert) / target - 1));
    }
  }
  detail = "closed-form error " + sci(worst) + ", Burger deviation at 1e-8 " + sci(worst_burger);
  return worst < 1e-12 && worst_burger < 0.01;
}

bool consistency(std::string& detail) {
  using namespace degeneration;
  double worst = 0, identity = 0;
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 8; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      std::vector<double> zt;
      for (int j = 0; j < n; ++j) zt.push_back(0.5 + 0.25 * j);
      for (double t : {1e-2, 1e-4, 1e-8}) {
        worst = std::max(worst, std::abs(degeneration_consistency(g, n, t, 1.3, zt).ratio() - 1));
        double l = wolpert_length(t);
        identity = std::max(identity, std::abs(std::exp(-n * kPi * kPi / (3 * l)) / std::pow(t, n / 6.0) - 1));
      }
    }
  }
  detail = "route mismatch " + sci(worst) + ", |t|^{n/6} identity " + sci(identity);
  return worst < 1e-12 && identity < 1e-12;
}

bool length_spectrum(std::string& detail) {
  using namespace lengthspec;
  auto words = bruteforce::lyndon_counts(12);
  std::map<std::int64_t, std::int64_t> full;
  for (const auto& e : modular_spectrum(12).entries) full[e.trace] = e.multiplicity;
  bool ok = full == words;
  int compared = 0;
  for (auto spec : {GroupSpec::principal2(), GroupSpec::gamma0(11)}) {
    std::map<std::int64_t, std::int64_t> got;
    for (const auto& e : subgroup_spectrum(spec, 14).entries) got[e.trace] = e.multiplicity;
    for (std::int64_t t = 3; t <= 14; ++t) {
      ok = ok && got[t] == bruteforce::union_find_count(spec, t, 150, 12);
      ++compared;
    }
  }
  detail = "full group " + std::to_string(words.size()) + " traces, " + std::to_string(compared) + " subgroup traces";
  return ok;
}

bool selberg_product(std::string& detail) {
  auto s40 = lengthspec::modular_spectrum(40), s80 = lengthspec::modular_spectrum(80);
  selberg::ZetaEval a = selberg::selberg_zeta(s40, 2.0), b = selberg::selberg_zeta(s80, 2.0);
  double change = std::abs(std::exp(b.log_value) - std::exp(a.log_value));
  double log_change = std::abs(b.log_value - a.log_value);
  detail = "change " + sci(change) + ", tail estimate " + sci(a.tail_estimate) + " vs log change " + sci(log_change);
  return change < 1e-6 && a.tail_estimate >= log_change;
}

bool coefficients(std::string& detail) {
  modularforms::QExpansion f = modularforms::eta_product_qexp(200);
  int agree = 0, total = 0;
  for (const auto& [ell, a] : modularforms::point_count_table(200)) {
    ++total;
    if (f.a(static_cast<std::size_t>(ell)) == a) ++agree;
  }
  detail = std::to_string(agree) + "/" + std::to_string(total) + " primes below 200 (11 is the bad prime)";
  return agree == total && total == 45;
}

bool hida(std::string& detail) {
  modularforms::HidaResult h = modularforms::hida_ratio(1e-6);
  detail = "ratio " + sci(h.ratio) + " error " + sci(h.error) + ", guess " + (h.guess ? h.guess->str() : "none") +
           ", control " + (h.control_guess ? h.control_guess->str() : "none");
  return h.error <= 1e-6 && h.guess && h.guess->den() <= 10000 && !h.control_guess;
}

bool theorem_b(std::string& detail) {
  using lengthspec::GroupSpec;
  auto anchor = arakelov::theoremB_exponents(GroupSpec::principal2());
  bool ok = anchor.b == Rational(5, 3) && anchor.c == Rational(-8, 3);
  detail = "gamma2 (" + anchor.a.str() + ", " + anchor.b.str() + ", " + anchor.c.str() + ")";
  for (auto spec : {GroupSpec::gamma0(11), GroupSpec::gamma1(11)}) {
    auto e = arakelov::theoremB_exponents(spec);
    auto inv = lengthspec::group_invariants(spec);
    int kappa = 2 * inv.g - 2 + inv.n;
    ok = ok && e.a == Rational(kappa, 6) - Rational(inv.m, 36);
    ok = ok && e.b == Rational(1 - 3 * inv.g) + Rational(inv.m, 9);
    ok = ok && e.c == Rational(-4 * inv.m, 9);
    ok = ok && e.l_exponent == Rational(1);
    detail += ", " + spec.name() + " (" + e.a.str() + ", " + e.b.str() + ", " + e.c.str() + ")";
  }
  return ok;
}

bool functional_equation(std::string& detail) {
  modularforms::QExpansion f = modularforms::eta_product_qexp(600);
  modularforms::HypothesisSearch s = modularforms::search_sym2_hypotheses(f, 1e-6);
  double best_rejected = INFINITY;
  for (std::size_t i = 0; i < s.residuals.size(); ++i)
    if (s.accepted.size() != 1 || i != s.accepted.front()) best_rejected = std::min(best_rejected, s.residuals[i]);
  if (s.accepted.size() != 1) {
    detail = std::to_string(s.accepted.size()) + " hypotheses accepted";
    return false;
  }
  std::size_t k = s.accepted.front();
  detail = s.candidates[k].str() + " residual " + sci(s.residuals[k]) + "; " + std::to_string(s.candidates.size() - 1) +
           " rejected, smallest rejected residual " + sci(best_rejected);
  return s.residuals[k] < 1e-6;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "Voros identity", 1, voros},
      {2, "C and E clutching relations", 1, relations},
      {3, "small-length asymptotic of the local factor", 1, lemma_asymptotic},
      {4, "B(t) spectrum and Burger product", 5, b_spectrum},
      {5, "degeneration consistency", 1, consistency},
      {6, "length spectrum against brute force", 60, length_spectrum},
      {7, "Selberg product at s = 2", 30, selberg_product},
      {8, "eta product against point counting", 10, coefficients},
      {9, "Hida rationality", 300, hida},
      {10, "Theorem B exponents", 60, theorem_b},
      {11, "symmetric-square functional equation", 300, functional_equation},
  };
  return list;
}

CriterionResult run(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.check = c.body(r.detail);
  } catch (const std::exception& e) {
    r.check = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.in_budget = r.seconds < r.budget_seconds;
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run(c));
  return out;
}

}  // namespace zal::verify
