// Copyright 2026 The hpdual Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HPDUAL_EXACT_LINALG_HPP
#define HPDUAL_EXACT_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "hpdual/rational.hpp"

namespace hpdual {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  /// Copy with column `c` removed.
  RatMatrix without_column(std::size_t c) const;
  /// Copy with `values` inserted as a new column at position `c`.
  RatMatrix with_column(std::size_t c, std::span<const Rational> values) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatVector operator*(const RatMatrix& a, std::span<const Rational> x);

enum class PivotRule {
  /// Nonzero candidate with the fewest numerator+denominator bits.
  kSmallestBitSize,
  /// First nonzero candidate in row order.
  kFirstNonzero,
};

/// A singular square system: the rank of A and one nonzero kernel vector.
struct Singular {
  std::size_t rank = 0;
  RatVector kernel_witness;
};

using SquareSolution = std::variant<RatVector, Singular>;

/// Exact solve of A x = b for square A.
SquareSolution solve_square(const RatMatrix& a, std::span<const Rational> b,
                            PivotRule rule = PivotRule::kSmallestBitSize);

/// Basis of ker(A) read off the reduced row echelon form: one vector per
/// free column with a 1 in that column. Empty iff A has full column rank.
std::vector<RatVector> nullspace(const RatMatrix& a,
                                 PivotRule rule = PivotRule::kSmallestBitSize);

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators.
std::size_t rank(const RatMatrix& a);

/// Rank by rational Gauss-Jordan elimination.
std::size_t rank_by_elimination(const RatMatrix& a,
                                PivotRule rule = PivotRule::kSmallestBitSize);

/// Determinant of a square matrix (Bareiss).
Rational determinant(const RatMatrix& a);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination; pivots are only sought in columns below
/// `pivot_col_limit` (defaults to all columns).
Echelon reduced_row_echelon(RatMatrix a, PivotRule rule = PivotRule::kSmallestBitSize,
                            std::size_t pivot_col_limit = static_cast<std::size_t>(-1));

}  // namespace hpdual

#endif  // HPDUAL_EXACT_LINALG_HPP
