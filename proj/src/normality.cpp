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

#include "hpdual/normality.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>
#include <variant>

#include "hpdual/error.hpp"
#include "hpdual/exact_linalg.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"

namespace hpdual {

namespace {

template <class Attempt>
Verdict classify(const LinearSystem& sys, Attempt attempt) {
  const std::size_t r = rank(sys.matrix);
  if (r < sys.size()) {
    const auto kernel = nullspace(sys.matrix);
    return verdict::Singular{r, sys.size(), sys.unpack(sys.expand(kernel.front(), Rational(0)))};
  }
  auto result = attempt();
  if (auto* v = std::get_if<Verdict>(&result)) return std::move(*v);
  return verdict::Normal{};
}

// Uniform draw from [lo, hi] by rejection, independent of the standard
// library's distribution implementations.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace

bool NormalityReport::general_position_at_n() const {
  auto normal = [](const IndexVerdict& v) { return is_normal(v.verdict); };
  return std::all_of(type1.begin(), type1.end(), normal) &&
         std::all_of(type2.begin(), type2.end(), normal);
}

NormalityReport check_general_position(const SeriesTuple& f, int n) {
  NormalityReport report;
  report.n = n;
  report.m = f.m();
  for (int k = 0; k <= f.m(); ++k) {
    const Type1Index idx{n, k, f.m()};
    const LinearSystem sys = build_type1_system(f, idx);
    report.type1.push_back({IndexVerdict::Family::kType1, k, idx.multi_index(),
                            classify(sys, [&] { return attempt_type1(f, idx); })});
  }
  for (int s = 0; s <= f.m(); ++s) {
    const Type2Index idx{n, s, f.m()};
    const LinearSystem sys = build_type2_system(f, idx);
    report.type2.push_back({IndexVerdict::Family::kType2, s, idx.multi_index(),
                            classify(sys, [&] { return attempt_type2(f, idx); })});
  }
  return report;
}

SeriesTuple random_tuple(std::uint64_t seed, int m, int num_coeffs, int height) {
  if (m < 1 || num_coeffs < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument, "random_tuple: need m >= 1, num_coeffs >= 1, height >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<LaurentSeries> series;
  for (int j = 0; j <= m; ++j) {
    std::vector<Rational> c;
    for (int l = 0; l < num_coeffs; ++l) {
      std::int64_t num = draw(rng, -height, height);
      while (l == 0 && num == 0) num = draw(rng, -height, height);
      const std::int64_t den = draw(rng, 1, height);
      c.emplace_back(static_cast<long>(num), static_cast<long>(den));
    }
    series.push_back(LaurentSeries::at_infinity(std::move(c)));
  }
  return SeriesTuple(std::move(series));
}

}  // namespace hpdual
