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

#ifndef HPDUAL_TYPE1_HPP
#define HPDUAL_TYPE1_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hpdual/laurent_series.hpp"
#include "hpdual/linear_system.hpp"
#include "hpdual/series_tuple.hpp"
#include "hpdual/verdict.hpp"

namespace hpdual {

/// Type I multi-index n_k = (n-1, ..., n-1, n, n-1, ..., n-1) with the n in
/// slot k.
struct Type1Index {
  int n = 1;
  int k = 0;
  int m = 1;

  int degree_bound(int j) const noexcept { return j == k ? n : n - 1; }
  /// Power of z multiplying Q_j in the combination: 0 for j == k, else 1.
  int shift(int j) const noexcept { return j == k ? 0 : 1; }
  /// Required vanishing order of the combination at infinity.
  int required_order() const noexcept { return m * n; }
  std::vector<int> multi_index() const;

  friend bool operator==(const Type1Index&, const Type1Index&) = default;
};

/// Normalized type I polynomials (Q_0, ..., Q_m) for one index with the
/// combination
///   sum_{j != k} z Q_j f_j + Q_k f_k = O(z^-mn)
/// and Q_k(0) = 1.
struct Type1Solution {
  Type1Index index;
  std::uint64_t tuple_fingerprint = 0;
  std::vector<Polynomial> q;
  LaurentSeries residual;
  ResidualOrder residual_order;
};

/// Coefficient equations for z^p, p = n, n-1, ..., -mn+1 (mn+n rows).
/// Needs every f_j known through z^-(mn+n-1).
LinearSystem build_type1_system(const SeriesTuple& f, const Type1Index& idx);

/// Solution, or the reason the index is not normal.
std::variant<Type1Solution, Verdict> attempt_type1(const SeriesTuple& f, const Type1Index& idx);

/// Throws NotNormal / InsufficientTruncation.
Type1Solution solve_type1(const SeriesTuple& f, const Type1Index& idx);

/// All m+1 solutions for k = 0..m.
std::vector<Type1Solution> solve_type1_all(const SeriesTuple& f, int n);

/// sum_{j != k} z Q_j f_j + Q_k f_k evaluated with series arithmetic.
LaurentSeries type1_residual(const SeriesTuple& f, int k, std::span<const Polynomial> q);

/// Rechecks a solution against the tuple without touching the linear
/// system: order of the residual, degree bounds, degree of Q_k, Q_k(0) = 1.
VerificationReport verify_type1(const SeriesTuple& f, const Type1Solution& sol);

}  // namespace hpdual

#endif  // HPDUAL_TYPE1_HPP
