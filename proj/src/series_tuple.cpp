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

#include "hpdual/series_tuple.hpp"

#include <algorithm>
#include <cstdio>
#include <string_view>
#include <utility>

#include "hpdual/error.hpp"

namespace hpdual {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
}

}  // namespace

SeriesTuple::SeriesTuple(std::vector<LaurentSeries> series) : series_(std::move(series)) {
  if (series_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "SeriesTuple: need at least two series (m >= 1)");
  }
  for (std::size_t j = 0; j < series_.size(); ++j) {
    const auto& f = series_[j];
    if (f.top_power() > 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "SeriesTuple: f_" + std::to_string(j) + " has positive powers of z");
    }
    if (f.is_zero() || f.top_power() < 0) {
      throw Error(ErrorCode::kLeadingZero, "SeriesTuple: f_" + std::to_string(j) + "(inf) = 0");
    }
  }
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, std::to_string(m()));
  for (const auto& f : series_) {
    fnv_mix(h, "|" + std::to_string(f.known_through()) + ":");
    for (const auto& c : f.coeffs()) {
      fnv_mix(h, c.to_string());
      fnv_mix(h, ",");
    }
  }
  fingerprint_ = h;
}

int SeriesTuple::known_through() const noexcept {
  int through = series_.front().known_through();
  for (const auto& f : series_) through = std::max(through, f.known_through());
  return through;
}

std::string SeriesTuple::fingerprint_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint_));
  return buf;
}

}  // namespace hpdual
