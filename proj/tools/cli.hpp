#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace zal::cli {

using Json = nlohmann::json;

/// Every numeric entry of results has an entry in error_bounds: a number, or
/// the string "exact-rational" for exact values.
struct ReportEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json error_bounds = Json::object();
  std::vector<std::string> caveats;
  std::map<std::string, bool> pass_fail;

  bool all_pass() const;
  Json to_json() const;
  /// Aligned "key  value" lines.
  std::string to_table() const;
};

/// Parses and runs one invocation. Returns the process exit code: 0 iff every
/// pass_fail entry is true, 1 on failed checks or errors, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zal::cli
