#include "opuc/banded.hpp"

#include <algorithm>
#include <stdexcept>

namespace opuc {

namespace {

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

void require_same_size(const BandedOperator& a, const BandedOperator& b) {
  if (a.size() != b.size()) throw std::invalid_argument("banded operator size mismatch");
}

}  // namespace

BandedOperator::BandedOperator(std::size_t size, std::size_t bandwidth)
    : bandwidth_(bandwidth), rows_(size), complete_(size, true) {}

BandedOperator BandedOperator::identity(std::size_t size) {
  BandedOperator op(size, 0);
  for (std::size_t i = 0; i < size; ++i) op.set(i, i, Rational{1});
  return op;
}

BandedOperator BandedOperator::diagonal(const std::vector<Rational>& diag) {
  BandedOperator op(diag.size(), 0);
  for (std::size_t i = 0; i < diag.size(); ++i) op.set(i, i, diag[i]);
  return op;
}

std::size_t BandedOperator::bandwidth() const {
  std::size_t bw = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) bw = std::max(bw, distance(r, c));
  }
  return bw;
}

Rational BandedOperator::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  auto it = r.find(col);
  return it == r.end() ? Rational{} : it->second;
}

void BandedOperator::set(std::size_t row, std::size_t col, const Rational& v) {
  if (row >= size() || col >= size()) throw std::out_of_range("banded operator index out of range");
  if (distance(row, col) > bandwidth_) {
    if (v.is_zero()) return;
    throw std::out_of_range("entry outside the declared band");
  }
  if (v.is_zero()) {
    rows_[row].erase(col);
  } else {
    rows_[row][col] = v;
  }
}

std::vector<std::size_t> BandedOperator::complete_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < size(); ++r) {
    if (complete_[r]) out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> BandedOperator::incomplete_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < size(); ++r) {
    if (!complete_[r]) out.push_back(r);
  }
  return out;
}

BandedOperator BandedOperator::operator-() const { return Rational{-1} * *this; }

BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
  require_same_size(a, b);
  BandedOperator out(a.size(), std::max(a.bandwidth_, b.bandwidth_));
  for (std::size_t r = 0; r < a.size(); ++r) {
    auto row = a.rows_[r];
    for (const auto& [c, v] : b.rows_[r]) {
      auto [it, inserted] = row.try_emplace(c, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
      }
    }
    out.rows_[r] = std::move(row);
    out.complete_[r] = a.complete_[r] && b.complete_[r];
  }
  return out;
}

BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) { return a + (-b); }

BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
  require_same_size(a, b);
  BandedOperator out(a.size(), a.bandwidth_ + b.bandwidth_);
  for (std::size_t r = 0; r < a.size(); ++r) {
    // The truncated row equals the true row when row r of a is complete and
    // every row of b it reaches is complete as well.
    bool complete = a.complete_[r];
    BandedOperator::Row row;
    for (const auto& [k, av] : a.rows_[r]) {
      complete = complete && b.complete_[k];
      for (const auto& [c, bv] : b.rows_[k]) {
        auto [it, inserted] = row.try_emplace(c, av * bv);
        if (!inserted) {
          it->second += av * bv;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
    out.rows_[r] = std::move(row);
    out.complete_[r] = complete;
  }
  return out;
}

BandedOperator operator*(const Rational& c, const BandedOperator& a) {
  BandedOperator out = a;
  for (auto& row : out.rows_) {
    if (c.is_zero()) {
      row.clear();
      continue;
    }
    for (auto& [col, v] : row) v *= c;
  }
  return out;
}

bool operator==(const BandedOperator& a, const BandedOperator& b) {
  return a.size() == b.size() && a.rows_ == b.rows_;
}

std::string BandedOperator::row_text(std::size_t r) const {
  std::string out;
  for (const auto& [c, v] : rows_.at(r)) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(r) + "," + std::to_string(c) + ")=" + v.to_string();
  }
  return out.empty() ? "0" : out;
}

BandedOperator anticommutator(const BandedOperator& a, const BandedOperator& b) { return a * b + b * a; }
BandedOperator commutator(const BandedOperator& a, const BandedOperator& b) { return a * b - b * a; }

}  // namespace opuc
