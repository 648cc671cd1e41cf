#pragma once

#include <string>
#include <vector>

namespace gamma2 {

struct Check {
  std::string label;
  bool pass = false;
  std::string detail;  // populated on failure
};

/// Machine-readable outcome of a verification suite.
struct Report {
  std::string suite;
  std::vector<Check> checks;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  void check(const std::string& label, bool ok, const std::string& detail = "");

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace gamma2
