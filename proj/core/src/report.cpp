#include "opuc/report.hpp"

#include <cmath>
#include <sstream>

namespace opuc {

void IdentityCheck::expect_zero(const std::string& index, const LaurentPoly& residual) {
  indices_checked.push_back(index);
  if (!residual.is_zero()) failures.push_back({index, residual.to_string()});
}

void IdentityCheck::expect_equal(const std::string& index, const Rational& got, const Rational& want) {
  indices_checked.push_back(index);
  if (got != want) failures.push_back({index, "got " + got.to_string() + ", want " + want.to_string()});
}

void IdentityCheck::expect_true(const std::string& index, bool ok, const std::string& witness) {
  indices_checked.push_back(index);
  if (!ok) failures.push_back({index, witness});
}

void IdentityCheck::expect_small(const std::string& index, double value, double tol) {
  indices_checked.push_back(index);
  if (!(std::abs(value) <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << value << " exceeds " << tol;
    failures.push_back({index, os.str()});
  }
}

IdentityCheck& VerificationReport::add(std::string identity, std::string formula, bool exact) {
  IdentityCheck check;
  check.identity = std::move(identity);
  check.formula = std::move(formula);
  check.exact = exact;
  checks_.push_back(std::move(check));
  return checks_.back();
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const IdentityCheck* VerificationReport::find(const std::string& identity) const {
  for (const auto& c : checks_) {
    if (c.identity == identity) return &c;
  }
  return nullptr;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return false;
  }
  return true;
}

std::size_t VerificationReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.failures.size();
  return n;
}

}  // namespace opuc
