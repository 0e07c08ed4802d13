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

#ifndef HPDUAL_LINEAR_SYSTEM_HPP
#define HPDUAL_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hpdual/exact_linalg.hpp"
#include "hpdual/polynomial.hpp"

namespace hpdual {

/// Linearized order condition for one Hermite-Pade index.
///
/// Unknowns are the coefficients of the polynomials 0..m in ascending
/// powers, polynomial after polynomial. One unknown (the constant term of the
/// distinguished polynomial) is pinned to 1 and its column moved to the
/// right-hand side, which leaves `matrix` square.
struct LinearSystem {
  RatMatrix matrix;
  RatVector rhs;
  /// Position of the pinned unknown in the full (unnormalized) ordering.
  std::size_t pinned = 0;
  /// Degree bound of each polynomial.
  std::vector<int> degree_bounds;

  std::size_t size() const noexcept { return matrix.cols(); }

  /// The homogeneous system with the pinned column restored; one more
  /// column than rows.
  RatMatrix unnormalized() const;

  /// Full coefficient vector from a solution of the square system.
  RatVector expand(std::span<const Rational> reduced, const Rational& pinned_value) const;

  /// Splits a full coefficient vector into the m+1 polynomials.
  std::vector<Polynomial> unpack(std::span<const Rational> full) const;
};

/// Offset of the first coefficient of polynomial j in the full ordering.
std::size_t coefficient_offset(std::span<const int> degree_bounds, int j);

}  // namespace hpdual

#endif  // HPDUAL_LINEAR_SYSTEM_HPP
