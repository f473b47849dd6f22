#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opuc/rational.hpp"
#include "opuc/report.hpp"

namespace opuc::tools {

inline const std::vector<std::string> kSuiteNames{"bispectral", "cmv", "algebra", "szego", "moments"};

struct SuiteOptions {
  int quad_order = 64;
  double tol = 1e-10;
  /// Index of a_n to shift by +1/100 (negative control).
  std::optional<int> corrupt_index;
};

/// Runs one named suite at a single parameter point with families through N.
/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& suite, const Rational& alpha, const Rational& beta, int N,
                             const SuiteOptions& opts = {});

/// "all" expands to every suite in kSuiteNames order; duplicates are dropped.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

}  // namespace opuc::tools
