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

#ifndef HPDUAL_NORMALITY_HPP
#define HPDUAL_NORMALITY_HPP

#include <cstdint>
#include <vector>

#include "hpdual/series_tuple.hpp"
#include "hpdual/verdict.hpp"

namespace hpdual {

/// Verdict for one of the indices the construction instantiates.
struct IndexVerdict {
  enum class Family { kType1, kType2 };
  Family family = Family::kType1;
  /// k for type I, s for type II.
  int slot = 0;
  std::vector<int> multi_index;
  Verdict verdict;
};

/// Normality of the 2(m+1) indices n_0..n_m and d_0..d_m at one n. Says
/// nothing about any other multi-index.
struct NormalityReport {
  int n = 0;
  int m = 0;
  std::vector<IndexVerdict> type1;
  std::vector<IndexVerdict> type2;

  /// True iff all 2(m+1) verdicts are normal.
  bool general_position_at_n() const;
};

/// Singularity is decided by fraction-free rank of each normalized system;
/// full-rank systems are then solved to look for degree drops and order
/// shortfalls. Throws InsufficientTruncation if the tuple is too short.
NormalityReport check_general_position(const SeriesTuple& f, int n);

/// Deterministic random tuple of m+1 series with `num_coeffs` coefficients
/// each: numerators uniform in [-height, height], denominators uniform in
/// [1, height], leading numerators redrawn until nonzero.
SeriesTuple random_tuple(std::uint64_t seed, int m, int num_coeffs, int height);

}  // namespace hpdual

#endif  // HPDUAL_NORMALITY_HPP
