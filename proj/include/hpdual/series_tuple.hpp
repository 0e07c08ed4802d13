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

#ifndef HPDUAL_SERIES_TUPLE_HPP
#define HPDUAL_SERIES_TUPLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hpdual/laurent_series.hpp"

namespace hpdual {

/// The tuple [f_0, ..., f_m] of series in nonnegative powers of 1/z with
/// f_j(inf) != 0. Immutable once built.
class SeriesTuple {
 public:
  /// Throws LeadingZero if some f_j(inf) == 0, InvalidArgument if fewer than
  /// two series are given or a series has positive powers of z.
  explicit SeriesTuple(std::vector<LaurentSeries> series);

  int m() const noexcept { return static_cast<int>(series_.size()) - 1; }
  const LaurentSeries& operator[](int j) const { return series_.at(static_cast<std::size_t>(j)); }
  const std::vector<LaurentSeries>& series() const noexcept { return series_; }

  /// Lowest power of z known for every series.
  int known_through() const noexcept;

  /// FNV-1a digest of m, the trust windows and every coefficient.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  std::string fingerprint_hex() const;

  friend bool operator==(const SeriesTuple& a, const SeriesTuple& b) {
    return a.series_ == b.series_;
  }

 private:
  std::vector<LaurentSeries> series_;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace hpdual

#endif  // HPDUAL_SERIES_TUPLE_HPP
