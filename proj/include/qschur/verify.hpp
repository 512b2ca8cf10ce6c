#pragma once

#include <string>
#include <vector>

#include "qschur/qarith.hpp"

namespace qschur {

struct CheckResult {
  std::string suite;
  std::string check;
  std::string q;  // QParam::tag()
  double residual = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool pass() const;
  /// JSON object with the parameters and every check.
  std::string to_json(const std::string& suite, int n, int d, double tolerance) const;
};

/// Suites: qarith, gtj, hecke, pieri, schurweyl, all. Representation checks
/// cover every shape with at most n boxes and d rows. Throws
/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& suite, int n, int d, const std::vector<QParam>& qs,
                      double tolerance);

}  // namespace qschur
