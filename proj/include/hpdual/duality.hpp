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

#ifndef HPDUAL_DUALITY_HPP
#define HPDUAL_DUALITY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hpdual/polynomial.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"

namespace hpdual {

/// Square matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

  static PolyMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  /// Every diagonal entry is the constant 1 and every other entry is 0.
  bool is_identity() const;
  /// Largest entry degree; nullopt if every entry is zero.
  Degree max_degree() const;
  /// Entry-wise evaluation at a point.
  RatMatrix evaluate(const Rational& z) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Polynomial> entries_;
};

/// Row k is (z Q_0, ..., z Q_{k-1}, Q_k, z Q_{k+1}, ..., z Q_m) of the k-th
/// type I solution. Needs the m+1 solutions for k = 0..m of one tuple and n;
/// throws MixedInputs otherwise.
PolyMatrix assemble_m1(std::span<const Type1Solution> sols);

/// Column s is (z P_0, ..., z P_{s-1}, P_s, z P_{s+1}, ..., z P_m)^T of the
/// s-th type II solution, so that entry (k, s) of M1*M2 pairs row k of M1
/// with the s-th type II vector.
PolyMatrix assemble_m2(std::span<const Type2Solution> sols);

/// Throws DimensionMismatch.
PolyMatrix polymatrix_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Exact determinant, by evaluation at sum-of-row-degrees + 1 integer
/// points and interpolation.
Polynomial polymatrix_det(const PolyMatrix& a);

/// u_k . v_s for every (k, s), built straight from the solutions rather
/// than from the assembled matrices.
PolyMatrix scalar_products(std::span<const Type1Solution> type1,
                           std::span<const Type2Solution> type2);

struct DualityReport {
  struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    Polynomial value;
    /// 1 on the diagonal, 0 elsewhere.
    Rational expected;
    bool is_constant = false;
    bool ok = false;
    std::string detail;
  };

  PolyMatrix product;
  bool identity = false;
  std::vector<Entry> entries;

  std::vector<Entry> offending() const;
};

/// Multiplies and classifies every entry of M1*M2: a diagonal entry must be
/// the constant Q_k(0) P_k(0) = 1, an off-diagonal one a multiple of z that
/// is also constant, i.e. zero.
DualityReport check_duality(const PolyMatrix& m1, const PolyMatrix& m2);

}  // namespace hpdual

#endif  // HPDUAL_DUALITY_HPP
