#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "opuc/rational.hpp"

namespace opuc {

/// Diagonal block of a block-diagonal operator. A cut block is one whose
/// full size would extend past the truncation.
struct Block {
  std::size_t start = 0;
  std::size_t size = 0;
  bool cut = false;
};

/// Finite N x N truncation of a semi-infinite matrix.
///
/// Each row carries a completeness flag: a complete row agrees with the
/// corresponding row of the untruncated operator. Products and sums
/// propagate the flag, so identities can be checked on exactly those rows
/// that the truncation does not disturb.
class BandedOperator {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit BandedOperator(std::size_t size, std::size_t bandwidth = 0);

  static BandedOperator identity(std::size_t size);
  static BandedOperator diagonal(const std::vector<Rational>& diag);

  std::size_t size() const { return rows_.size(); }
  /// Declared upper bound on |row - col| for stored entries.
  std::size_t declared_bandwidth() const { return bandwidth_; }
  /// Actual max |row - col| over stored entries.
  std::size_t bandwidth() const;

  Rational at(std::size_t row, std::size_t col) const;
  /// Stores v at (row, col); zero erases. Throws std::out_of_range outside the band.
  void set(std::size_t row, std::size_t col, const Rational& v);
  const Row& row(std::size_t r) const { return rows_.at(r); }

  bool row_complete(std::size_t r) const { return complete_.at(r); }
  void set_row_complete(std::size_t r, bool complete) { complete_.at(r) = complete; }
  std::vector<std::size_t> complete_rows() const;
  std::vector<std::size_t> incomplete_rows() const;

  const std::vector<Block>& blocks() const { return blocks_; }
  void set_blocks(std::vector<Block> blocks) { blocks_ = std::move(blocks); }

  BandedOperator operator-() const;
  friend BandedOperator operator+(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator-(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator*(const Rational& c, const BandedOperator& a);

  /// Entrywise equality (completeness flags ignored).
  friend bool operator==(const BandedOperator& a, const BandedOperator& b);

  /// Every entry of row r, rendered "(r,c)=v", for residual reports.
  std::string row_text(std::size_t r) const;

 private:
  std::size_t bandwidth_;
  std::vector<Row> rows_;
  std::vector<bool> complete_;
  std::vector<Block> blocks_;
};

/// Anticommutator AB + BA and commutator AB - BA.
BandedOperator anticommutator(const BandedOperator& a, const BandedOperator& b);
BandedOperator commutator(const BandedOperator& a, const BandedOperator& b);

}  // namespace opuc
