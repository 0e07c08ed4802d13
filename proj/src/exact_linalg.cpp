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

#include "hpdual/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hpdual/error.hpp"

namespace hpdual {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RatMatrix RatMatrix::without_column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("RatMatrix::without_column");
  RatMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0, k = 0; j < cols_; ++j) {
      if (j != c) out(r, k++) = (*this)(r, j);
    }
  }
  return out;
}

RatMatrix RatMatrix::with_column(std::size_t c, std::span<const Rational> values) const {
  if (c > cols_ || values.size() != rows_) throw std::out_of_range("RatMatrix::with_column");
  RatMatrix out(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0, k = 0; j < cols_ + 1; ++j) {
      out(r, j) = (j == c) ? values[r] : (*this)(r, k++);
    }
  }
  return out;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product: size mismatch");
  }
  RatVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational acc;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero() && !x[c].is_zero()) acc += a(r, c) * x[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Echelon reduced_row_echelon(RatMatrix a, PivotRule rule, std::size_t pivot_col_limit) {
  Echelon out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t limit = std::min(cols, pivot_col_limit);
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      if (rule == PivotRule::kFirstNonzero) {
        best = i;
        break;
      }
      const std::size_t bits = a(i, c).bit_size();
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    if (best != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

namespace {

std::vector<RatVector> kernel_from_echelon(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(ncols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-by-row denominator clearing; row scaling changes neither rank nor
// kernel, and det changes by the product of the scale factors.
std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& a, mpz_class* scale_product) {
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
  if (scale_product) *scale_product = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m[r][c] = a(r, c).raw().get_num() * (l / a(r, c).raw().get_den());
    }
    if (scale_product) *scale_product *= l;
  }
  return m;
}

struct BareissResult {
  std::size_t rank = 0;
  mpz_class last_pivot = 1;
  int sign = 1;
};

BareissResult bareiss(std::vector<std::vector<mpz_class>>& m, std::size_t cols) {
  BareissResult out;
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
          throw Error(ErrorCode::kInternal, "Bareiss: inexact division");
        }
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

}  // namespace

SquareSolution solve_square(const RatMatrix& a, std::span<const Rational> b, PivotRule rule) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_square: need square A and matching b");
  }
  const std::size_t n = a.cols();
  Echelon e = reduced_row_echelon(a.with_column(n, b), rule, n);
  if (e.pivot_cols.size() == n) {
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
    return x;
  }
  auto kernel = kernel_from_echelon(e, n);
  return Singular{e.pivot_cols.size(), std::move(kernel.front())};
}

std::vector<RatVector> nullspace(const RatMatrix& a, PivotRule rule) {
  return kernel_from_echelon(reduced_row_echelon(a, rule), a.cols());
}

std::size_t rank(const RatMatrix& a) {
  auto m = integer_rows(a, nullptr);
  return bareiss(m, a.cols()).rank;
}

std::size_t rank_by_elimination(const RatMatrix& a, PivotRule rule) {
  return reduced_row_echelon(a, rule).pivot_cols.size();
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kDimensionMismatch, "determinant: not square");
  if (a.rows() == 0) return 1;
  mpz_class scale;
  auto m = integer_rows(a, &scale);
  const BareissResult res = bareiss(m, a.cols());
  if (res.rank < a.rows()) return 0;
  mpq_class det(res.last_pivot * res.sign, scale);
  return Rational(std::move(det));
}

}  // namespace hpdual
