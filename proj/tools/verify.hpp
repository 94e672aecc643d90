#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zal::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool check = false;     // the numeric condition
  bool in_budget = false;  // runtime below the budget
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;

  bool pass() const { return check && in_budget; }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  // Fills detail and returns the numeric condition.
  std::function<bool(std::string& detail)> body;
};

const std::vector<Criterion>& criteria();

/// Runs one criterion under a timer; exceptions count as failure.
CriterionResult run(const Criterion& c);

std::vector<CriterionResult> run_all();

}  // namespace zal::verify
