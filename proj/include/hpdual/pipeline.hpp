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

#ifndef HPDUAL_PIPELINE_HPP
#define HPDUAL_PIPELINE_HPP

#include <vector>

#include "hpdual/duality.hpp"
#include "hpdual/series_tuple.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"
#include "hpdual/verdict.hpp"

namespace hpdual {

/// Everything the duality demonstration produces for one tuple and n.
struct Theorem1Result {
  int n = 0;
  std::vector<Type1Solution> type1;
  std::vector<Type2Solution> type2;
  std::vector<VerificationReport> type1_checks;
  std::vector<VerificationReport> type2_checks;
  PolyMatrix m1;
  PolyMatrix m2;
  DualityReport duality;
  Polynomial det_m1;
  Polynomial det_m2;

  /// All solutions verified and M1*M2 == I.
  bool holds() const;
};

/// Solves all 2(m+1) systems, verifies each solution independently,
/// assembles M1 and M2, multiplies and takes both determinants.
/// Throws NotNormal / InsufficientTruncation from the solvers.
Theorem1Result run_theorem1(const SeriesTuple& f, int n);

}  // namespace hpdual

#endif  // HPDUAL_PIPELINE_HPP
