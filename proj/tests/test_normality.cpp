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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <variant>

#include "hpdual/error.hpp"
#include "hpdual/normality.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"
#include "support.hpp"

using namespace hpdual;
using hpdual::testing::q;

namespace {

bool all_solve(const SeriesTuple& f, int n) {
  for (int k = 0; k <= f.m(); ++k) {
    if (!std::holds_alternative<Type1Solution>(attempt_type1(f, {n, k, f.m()}))) return false;
  }
  for (int s = 0; s <= f.m(); ++s) {
    if (!std::holds_alternative<Type2Solution>(attempt_type2(f, {n, s, f.m()}))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("check_general_position examples") {
  const auto ok = check_general_position(testing::worked_tuple(), 1);
  CHECK(ok.type1.size() == 2);
  CHECK(ok.type2.size() == 2);
  CHECK(ok.general_position_at_n());
  CHECK(ok.type1[0].multi_index == std::vector<int>{1, 0});
  CHECK(ok.type2[1].multi_index == std::vector<int>{0, 1});

  const auto bad = check_general_position(testing::geometric_tuple(4), 2);
  CHECK_FALSE(bad.general_position_at_n());
  for (const auto* family : {&bad.type1, &bad.type2}) {
    for (const auto& v : *family) {
      const auto* s = std::get_if<verdict::Singular>(&v.verdict);
      REQUIRE(s);
      CHECK(s->rank < s->size);
      CHECK(s->kernel_witness.size() == 2);
    }
  }

  CHECK_THROWS_AS(check_general_position(testing::worked_tuple(), 2), InsufficientTruncation);
}

TEST_CASE("random_tuple") {
  const auto a = random_tuple(1, 1, 4, 10);
  const auto b = random_tuple(1, 1, 4, 10);
  CHECK(a == b);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK_FALSE(random_tuple(2, 1, 4, 10) == a);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = random_tuple(seed, 2, 3, 1);
    for (const auto& f : t.series()) {
      REQUIRE(f.top_power() == 0);
      REQUIRE_FALSE(f.coeff(0).is_zero());
      REQUIRE(f.known_through() == -2);
      for (int p = 0; p >= -2; --p) {
        const Rational c = f.coeff(p);
        REQUIRE(c.numerator() >= -1);
        REQUIRE(c.numerator() <= 1);
      }
    }
  }
  CHECK_THROWS_AS(random_tuple(1, 0, 4, 10), Error);
  CHECK_THROWS_AS(random_tuple(1, 1, 0, 10), Error);
  CHECK_THROWS_AS(random_tuple(1, 1, 4, 0), Error);
}

TEST_CASE("random_tuple is pinned to its generator") {
  // Frozen output for seed 1; a change here means previously generated
  // corpora no longer reproduce.
  const auto t = random_tuple(1, 1, 4, 10);
  CHECK(t[0].coeff(0) == q(-8, 3));
  CHECK(t[0].coeff(-3) == q(5, 3));
  CHECK(t[1].coeff(-1) == q(-5, 4));
  CHECK(t.fingerprint_hex() == "db711a99073811cd");
}

TEST_CASE("property: rank path and solve path agree") {
  int normal = 0;
  int degenerate = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int m = 1 + static_cast<int>(seed % 2);
    const int n = 1 + static_cast<int>((seed / 2) % 3);
    // height 1 makes degenerate tuples common
    const auto f = random_tuple(seed, m, m * n + n, seed % 3 == 0 ? 10 : 1);
    const auto report = check_general_position(f, n);
    REQUIRE(report.general_position_at_n() == all_solve(f, n));
    if (report.general_position_at_n()) {
      ++normal;
    } else {
      ++degenerate;
    }
  }
  CHECK(normal > 0);
  CHECK(degenerate > 0);
}

TEST_CASE("property: singular witnesses satisfy the order condition with a zero pin") {
  int witnesses = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int m = 1 + static_cast<int>(seed % 2);
    const int n = 1 + static_cast<int>((seed / 2) % 3);
    const auto f = random_tuple(seed, m, m * n + n, 1);
    const auto report = check_general_position(f, n);
    for (const auto& v : report.type1) {
      const auto* s = std::get_if<verdict::Singular>(&v.verdict);
      if (!s) continue;
      const auto& w = s->kernel_witness;
      REQUIRE(std::any_of(w.begin(), w.end(), [](const Polynomial& p) { return !p.is_zero(); }));
      REQUIRE(w[static_cast<std::size_t>(v.slot)].constant_term().is_zero());
      REQUIRE(residual_order(type1_residual(f, v.slot, w)).certifies(m * n));
      ++witnesses;
    }
    for (const auto& v : report.type2) {
      const auto* s = std::get_if<verdict::Singular>(&v.verdict);
      if (!s) continue;
      const auto& w = s->kernel_witness;
      REQUIRE(std::any_of(w.begin(), w.end(), [](const Polynomial& p) { return !p.is_zero(); }));
      REQUIRE(w[static_cast<std::size_t>(v.slot)].constant_term().is_zero());
      for (int j = 0; j <= m; ++j) {
        if (j == v.slot) continue;
        REQUIRE(residual_order(type2_residual(f, v.slot, j, w)).certifies(n));
      }
      ++witnesses;
    }
  }
  CHECK(witnesses > 0);
}

TEST_CASE("general position rate for m = 2, n = 1 (measured, not asserted)") {
  int passing = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (check_general_position(random_tuple(seed, 2, 3, 10), 1).general_position_at_n()) ++passing;
  }
  MESSAGE("m=2 n=1 height=10: " << passing << "/100 tuples in general position at n");
  CHECK(passing >= 0);
}
