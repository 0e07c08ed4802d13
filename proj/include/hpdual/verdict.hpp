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

#ifndef HPDUAL_VERDICT_HPP
#define HPDUAL_VERDICT_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hpdual/error.hpp"
#include "hpdual/laurent_series.hpp"
#include "hpdual/polynomial.hpp"

namespace hpdual {

/// Outcome of examining one Hermite-Pade system at one multi-index.
namespace verdict {

struct Normal {
  friend bool operator==(const Normal&, const Normal&) = default;
};

/// The normalized system is singular. The witness is a nonzero polynomial
/// vector satisfying the order condition whose pinned constant coefficient
/// is 0.
struct Singular {
  std::size_t rank = 0;
  std::size_t size = 0;
  std::vector<Polynomial> kernel_witness;
  friend bool operator==(const Singular&, const Singular&) = default;
};

/// The system solved but the distinguished polynomial misses its degree.
struct DegreeDrop {
  int polynomial = 0;
  Degree degree;
  int expected = 0;
  friend bool operator==(const DegreeDrop&, const DegreeDrop&) = default;
};

/// The recomputed residual does not certify the required order. `pair` is
/// the index j of the failing type II pair, or -1 for type I.
struct OrderShortfall {
  int pair = -1;
  ResidualOrder achieved;
  int required = 0;
  friend bool operator==(const OrderShortfall&, const OrderShortfall&) = default;
};

}  // namespace verdict

using Verdict = std::variant<verdict::Normal, verdict::Singular, verdict::DegreeDrop,
                             verdict::OrderShortfall>;

inline bool is_normal(const Verdict& v) { return std::holds_alternative<verdict::Normal>(v); }

/// Short machine-friendly kind: "normal", "singular", "degree-drop", "order-shortfall".
const char* verdict_kind(const Verdict& v);
std::string describe(const Verdict& v);

/// Thrown by the solvers when the requested multi-index is not normal.
class NotNormal : public Error {
 public:
  NotNormal(const std::string& context, Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// Pass/fail record of an independent recheck of a solution.
struct VerificationReport {
  struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
  };
  std::vector<Check> checks;

  bool passed() const;
  /// Whether the named check is present and failed.
  bool failed(const std::string& name) const;
  void add(std::string name, bool passed, std::string detail = {});
};

}  // namespace hpdual

#endif  // HPDUAL_VERDICT_HPP
