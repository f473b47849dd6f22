#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "opuc/laurent.hpp"

namespace opuc {

struct Failure {
  std::string index;
  /// Residual polynomial (canonical text) or numeric witness.
  std::string residual;
};

/// Outcome of checking one identity over a range of indices.
struct IdentityCheck {
  std::string identity;
  /// Human-readable form of the identity being checked.
  std::string formula;
  bool exact = true;
  std::vector<std::string> indices_checked;
  /// Boundary rows or indices outside the checkable window.
  std::vector<std::string> skipped;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  /// Records index as checked; a nonzero residual becomes a failure.
  void expect_zero(const std::string& index, const LaurentPoly& residual);
  void expect_equal(const std::string& index, const Rational& got, const Rational& want);
  void expect_true(const std::string& index, bool ok, const std::string& witness);
  /// |value| <= tol.
  void expect_small(const std::string& index, double value, double tol);
};

class VerificationReport {
 public:
  IdentityCheck& add(std::string identity, std::string formula, bool exact = true);
  void merge(const VerificationReport& other);

  const std::deque<IdentityCheck>& checks() const { return checks_; }
  std::deque<IdentityCheck>& checks() { return checks_; }
  const IdentityCheck* find(const std::string& identity) const;

  bool passed() const;
  std::size_t failure_count() const;

 private:
  // deque keeps references returned by add() valid.
  std::deque<IdentityCheck> checks_;
};

}  // namespace opuc
