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

#include "hpdual/linear_system.hpp"

#include <stdexcept>

namespace hpdual {

std::size_t coefficient_offset(std::span<const int> degree_bounds, int j) {
  std::size_t offset = 0;
  for (int i = 0; i < j; ++i) offset += static_cast<std::size_t>(degree_bounds[i] + 1);
  return offset;
}

RatMatrix LinearSystem::unnormalized() const {
  RatVector pinned_column(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) pinned_column[i] = -rhs[i];
  return matrix.with_column(pinned, pinned_column);
}

RatVector LinearSystem::expand(std::span<const Rational> reduced,
                               const Rational& pinned_value) const {
  if (reduced.size() != size()) throw std::invalid_argument("LinearSystem::expand: size");
  RatVector full(reduced.begin(), reduced.end());
  full.insert(full.begin() + static_cast<std::ptrdiff_t>(pinned), pinned_value);
  return full;
}

std::vector<Polynomial> LinearSystem::unpack(std::span<const Rational> full) const {
  if (full.size() != size() + 1) throw std::invalid_argument("LinearSystem::unpack: size");
  std::vector<Polynomial> out;
  std::size_t offset = 0;
  for (int bound : degree_bounds) {
    const std::size_t count = static_cast<std::size_t>(bound + 1);
    out.emplace_back(RatVector(full.begin() + static_cast<std::ptrdiff_t>(offset),
                               full.begin() + static_cast<std::ptrdiff_t>(offset + count)));
    offset += count;
  }
  return out;
}

}  // namespace hpdual
