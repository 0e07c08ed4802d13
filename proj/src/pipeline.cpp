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

#include "hpdual/pipeline.hpp"

#include <algorithm>

namespace hpdual {

bool Theorem1Result::holds() const {
  auto ok = [](const VerificationReport& r) { return r.passed(); };
  return duality.identity && std::all_of(type1_checks.begin(), type1_checks.end(), ok) &&
         std::all_of(type2_checks.begin(), type2_checks.end(), ok);
}

Theorem1Result run_theorem1(const SeriesTuple& f, int n) {
  Theorem1Result out;
  out.n = n;
  out.type1 = solve_type1_all(f, n);
  out.type2 = solve_type2_all(f, n);
  for (const auto& s : out.type1) out.type1_checks.push_back(verify_type1(f, s));
  for (const auto& s : out.type2) out.type2_checks.push_back(verify_type2(f, s));
  out.m1 = assemble_m1(out.type1);
  out.m2 = assemble_m2(out.type2);
  out.duality = check_duality(out.m1, out.m2);
  out.det_m1 = polymatrix_det(out.m1);
  out.det_m2 = polymatrix_det(out.m2);
  return out;
}

}  // namespace hpdual
