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

#include "hpdual/verdict.hpp"

#include <algorithm>
#include <utility>

namespace hpdual {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string degree_string(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

}  // namespace

const char* verdict_kind(const Verdict& v) {
  return std::visit(Overloaded{
                        [](const verdict::Normal&) { return "normal"; },
                        [](const verdict::Singular&) { return "singular"; },
                        [](const verdict::DegreeDrop&) { return "degree-drop"; },
                        [](const verdict::OrderShortfall&) { return "order-shortfall"; },
                    },
                    v);
}

std::string describe(const Verdict& v) {
  return std::visit(
      Overloaded{
          [](const verdict::Normal&) -> std::string { return "normal"; },
          [](const verdict::Singular& s) -> std::string {
            std::string out = "singular: rank " + std::to_string(s.rank) + " of " +
                              std::to_string(s.size) + ", kernel witness (";
            for (std::size_t j = 0; j < s.kernel_witness.size(); ++j) {
              out += (j ? ", " : "") + s.kernel_witness[j].to_string();
            }
            return out + ")";
          },
          [](const verdict::DegreeDrop& d) -> std::string {
            return "degree-drop: polynomial " + std::to_string(d.polynomial) + " has degree " +
                   degree_string(d.degree) + ", expected " + std::to_string(d.expected);
          },
          [](const verdict::OrderShortfall& o) -> std::string {
            std::string out = "order-shortfall: ";
            if (o.pair >= 0) out += "pair j=" + std::to_string(o.pair) + " ";
            return out + "residual order " + o.achieved.to_string() + ", required " +
                   std::to_string(o.required);
          },
      },
      v);
}

NotNormal::NotNormal(const std::string& context, Verdict verdict)
    : Error(ErrorCode::kNotNormal, context + " is not normal: " + describe(verdict)),
      verdict_(std::move(verdict)) {}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool VerificationReport::failed(const std::string& name) const {
  return std::any_of(checks.begin(), checks.end(),
                     [&](const Check& c) { return c.name == name && !c.passed; });
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

}  // namespace hpdual
