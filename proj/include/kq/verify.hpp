#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kq {

struct VerifyConfig {
  int degree = 10;
  int vars = 4;
  int zorder = 12;
  // Set when the user passed the flags explicitly; the cauchy suite then
  // runs the requested instance instead of the pinned ones.
  bool explicit_vars = false;
  bool explicit_degree = false;
};

/// A named verification check.  `run` returns an empty string on success and
/// a short failure description otherwise; exceptions count as failures.
struct Check {
  std::string name;
  std::string suite;      // recurrences | cancellation | integrality |
                          // pairing | cauchy | gpz
  int criterion;          // acceptance criterion the check belongs to (1..10)
  std::function<std::string(const VerifyConfig&)> run;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double millis = 0.0;
  std::string detail;
};

const std::vector<Check>& all_checks();
std::vector<std::string> suite_names();

CheckResult run_check(const Check& c, const VerifyConfig& cfg);
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg);

}  // namespace kq
