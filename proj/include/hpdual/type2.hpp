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

#ifndef HPDUAL_TYPE2_HPP
#define HPDUAL_TYPE2_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hpdual/laurent_series.hpp"
#include "hpdual/linear_system.hpp"
#include "hpdual/series_tuple.hpp"
#include "hpdual/verdict.hpp"

namespace hpdual {

/// Type II multi-index d_s = (mn-1, ..., mn-1, mn, mn-1, ..., mn-1) with the
/// mn in slot s.
struct Type2Index {
  int n = 1;
  int s = 0;
  int m = 1;

  int degree_bound(int j) const noexcept { return j == s ? m * n : m * n - 1; }
  /// Required vanishing order of every pairwise residual.
  int required_order() const noexcept { return n; }
  std::vector<int> multi_index() const;

  friend bool operator==(const Type2Index&, const Type2Index&) = default;
};

/// Normalized type II polynomials (P_0, ..., P_m) with
///   z f_s P_j - f_j P_s = O(z^-n)   for every j != s
/// and P_s(0) = 1. `residuals[i]` belongs to the i-th j != s in ascending
/// order (see pair_index()).
struct Type2Solution {
  Type2Index index;
  std::uint64_t tuple_fingerprint = 0;
  std::vector<Polynomial> p;
  std::vector<LaurentSeries> residuals;
  std::vector<ResidualOrder> residual_orders;
};

/// Position of pair j among the residuals of index s.
inline int pair_index(int s, int j) noexcept { return j < s ? j : j - 1; }

/// For each j != s (ascending), coefficient equations for z^p,
/// p = mn, ..., -n+1. m(mn+n) rows in total. Needs every f_j known through
/// z^-(mn+n-1).
LinearSystem build_type2_system(const SeriesTuple& f, const Type2Index& idx);

std::variant<Type2Solution, Verdict> attempt_type2(const SeriesTuple& f, const Type2Index& idx);

/// Throws NotNormal / InsufficientTruncation.
Type2Solution solve_type2(const SeriesTuple& f, const Type2Index& idx);

std::vector<Type2Solution> solve_type2_all(const SeriesTuple& f, int n);

/// z f_s P_j - f_j P_s with series arithmetic.
LaurentSeries type2_residual(const SeriesTuple& f, int s, int j, std::span<const Polynomial> p);

/// Independent recheck of all m pairwise order conditions, degree bounds,
/// deg P_s == mn and P_s(0) == 1.
VerificationReport verify_type2(const SeriesTuple& f, const Type2Solution& sol);

}  // namespace hpdual

#endif  // HPDUAL_TYPE2_HPP
