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

// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
// throughout. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hpdual/duality.hpp"
#include "hpdual/error.hpp"
#include "hpdual/exact_linalg.hpp"
#include "hpdual/laurent_series.hpp"
#include "hpdual/normality.hpp"
#include "hpdual/pipeline.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"
#include "support.hpp"

namespace {

using namespace hpdual;
using hpdual::testing::q;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Polynomial poly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial(v);
}

PolyMatrix expected_m1() {
  return PolyMatrix{{poly({1, 1}), poly({0, -1})}, {poly({0, 1}), poly({1, -1})}};
}

PolyMatrix expected_m2() {
  return PolyMatrix{{poly({1, -1}), poly({0, 1})}, {poly({0, -1}), poly({1, 1})}};
}

// Residuals rebuilt from series arithmetic alone.
LaurentSeries type1_combination(const SeriesTuple& f, int k, const std::vector<Polynomial>& qs) {
  LaurentSeries acc = poly_shift_mul_series(qs[static_cast<std::size_t>(k)], 0, f[static_cast<std::size_t>(k)]);
  for (int j = 0; j <= f.m(); ++j) {
    if (j == k) continue;
    const auto uj = static_cast<std::size_t>(j);
    acc = series_add(acc, poly_shift_mul_series(qs[uj], 1, f[uj]));
  }
  return acc;
}

LaurentSeries type2_combination(const SeriesTuple& f, int s, int j, const std::vector<Polynomial>& ps) {
  const auto us = static_cast<std::size_t>(s);
  const auto uj = static_cast<std::size_t>(j);
  return series_sub(poly_shift_mul_series(ps[uj], 1, f[us]), poly_shift_mul_series(ps[us], 0, f[uj]));
}

std::vector<Polynomial> normalized_kernel_generator(const LinearSystem& sys, Outcome& out,
                                                    const std::string& label) {
  const auto kernel = nullspace(sys.unnormalized());
  if (kernel.size() != 1) {
    out.fail(label + ": kernel dimension " + std::to_string(kernel.size()));
    return {};
  }
  RatVector v = kernel.front();
  const Rational pin = v[sys.pinned];
  if (pin.is_zero()) {
    out.fail(label + ": kernel generator vanishes at the pinned coefficient");
    return {};
  }
  for (auto& x : v) x /= pin;
  return sys.unpack(v);
}

struct Instance {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  SeriesTuple f;
  Theorem1Result result;
};

struct Sweep {
  int drawn = 0;
  std::vector<Instance> passing;
  std::vector<std::string> failures;
  double ms = 0;
};

Sweep run_sweep() {
  Sweep sweep;
  const auto t0 = Clock::now();
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int i = 0; i < 6; ++i) {
        const std::uint64_t seed = 1000u * static_cast<unsigned>(m) + 100u * static_cast<unsigned>(n) +
                                   static_cast<unsigned>(i);
        ++sweep.drawn;
        auto f = random_tuple(seed, m, m * n + n, 10);
        if (!check_general_position(f, n).general_position_at_n()) continue;
        auto result = run_theorem1(f, n);
        if (!result.duality.identity) {
          sweep.failures.push_back("seed " + std::to_string(seed));
        }
        sweep.passing.push_back({m, n, seed, std::move(f), std::move(result)});
      }
    }
  }
  sweep.ms = ms_since(t0);
  return sweep;
}

std::string where(const Instance& in) {
  return "m=" + std::to_string(in.m) + " n=" + std::to_string(in.n) + " seed=" + std::to_string(in.seed);
}

Outcome criterion1() {
  Outcome out;
  const auto f = testing::worked_tuple();
  const auto r = run_theorem1(f, 1);
  if (!(r.m1 == expected_m1())) out.fail("M1 differs");
  if (!(r.m2 == expected_m2())) out.fail("M2 differs");
  if (!(r.duality.product == PolyMatrix::identity(2))) out.fail("M1*M2 is not I_2");
  if (!r.holds()) out.fail("pipeline verdict false");
  for (int i = 0; i < 50; ++i) (void)run_theorem1(f, 1);
  std::vector<double> times;
  for (int i = 0; i < 201; ++i) {
    const auto t0 = Clock::now();
    const auto again = run_theorem1(f, 1);
    times.push_back(ms_since(t0));
    if (!again.holds()) out.fail("repeat run disagrees");
  }
  std::nth_element(times.begin(), times.begin() + 100, times.end());
  const double median = times[100];
  if (median >= 1.0) out.fail("median runtime " + std::to_string(median) + " ms");
  if (out.pass) {
    std::ostringstream s;
    s << "M1, M2 exact, product I_2, median " << median << " ms";
    out.detail = s.str();
  }
  return out;
}

Outcome criterion2(const Sweep& sweep) {
  Outcome out;
  if (sweep.passing.size() < 50) {
    out.fail("only " + std::to_string(sweep.passing.size()) + " tuples in general position");
  }
  for (const auto& f : sweep.failures) out.fail("M1*M2 != I at " + f);
  for (const auto& in : sweep.passing) {
    if (!(in.result.duality.product == PolyMatrix::identity(static_cast<std::size_t>(in.m + 1)))) {
      out.fail("product differs from identity at " + where(in));
    }
  }
  if (sweep.ms >= 60000.0) out.fail("sweep took " + std::to_string(sweep.ms) + " ms");
  if (out.pass) {
    std::ostringstream s;
    s << sweep.passing.size() << "/" << sweep.drawn << " draws in general position, all M1*M2 == I, sweep "
      << sweep.ms << " ms";
    out.detail = s.str();
  }
  return out;
}

Outcome criterion3(const Sweep& sweep) {
  Outcome out;
  int checked = 0;
  for (const auto& in : sweep.passing) {
    if (in.m != 1) continue;
    ++checked;
    if (!(polymatrix_det(in.result.m1) == poly({1}))) out.fail("det M1 != 1 at " + where(in));
  }
  if (checked == 0) out.fail("no m=1 instances");
  if (out.pass) out.detail = std::to_string(checked) + " m=1 instances, det M1 == 1";
  return out;
}

Outcome criterion4(const Sweep& sweep) {
  Outcome out;
  int systems = 0;
  for (const auto& in : sweep.passing) {
    for (const auto& sol : in.result.type1) {
      ++systems;
      const auto r = type1_combination(in.f, sol.index.k, sol.q);
      if (!residual_order(r).certifies(in.m * in.n)) {
        out.fail("type I k=" + std::to_string(sol.index.k) + " order " + residual_order(r).to_string() +
                 " at " + where(in));
      }
    }
    for (const auto& sol : in.result.type2) {
      ++systems;
      for (int j = 0; j <= in.m; ++j) {
        if (j == sol.index.s) continue;
        const auto r = type2_combination(in.f, sol.index.s, j, sol.p);
        if (!residual_order(r).certifies(in.n)) {
          out.fail("type II s=" + std::to_string(sol.index.s) + " j=" + std::to_string(j) + " at " + where(in));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(systems) + " solutions, orders >= mn (I) and >= n (II)";
  return out;
}

Outcome criterion5(const Sweep& sweep) {
  Outcome out;
  for (const auto& in : sweep.passing) {
    for (const auto& sol : in.result.type1) {
      const auto& qk = sol.q[static_cast<std::size_t>(sol.index.k)];
      if (qk.degree() != Degree(in.n)) out.fail("deg Q_k != n at " + where(in));
      if (qk.constant_term() != Rational(1)) out.fail("Q_k(0) != 1 at " + where(in));
    }
    for (const auto& sol : in.result.type2) {
      const auto& ps = sol.p[static_cast<std::size_t>(sol.index.s)];
      if (ps.degree() != Degree(in.m * in.n)) out.fail("deg P_s != mn at " + where(in));
      if (ps.constant_term() != Rational(1)) out.fail("P_s(0) != 1 at " + where(in));
    }
  }
  if (out.pass) out.detail = "degrees n and mn attained, constant terms 1";
  return out;
}

Outcome criterion6(const Sweep& sweep) {
  Outcome out;
  int systems = 0;
  for (const auto& in : sweep.passing) {
    for (const auto& sol : in.result.type1) {
      ++systems;
      const auto gen = normalized_kernel_generator(build_type1_system(in.f, sol.index), out, where(in));
      if (!gen.empty() && gen != sol.q) out.fail("type I generator differs at " + where(in));
    }
    for (const auto& sol : in.result.type2) {
      ++systems;
      const auto gen = normalized_kernel_generator(build_type2_system(in.f, sol.index), out, where(in));
      if (!gen.empty() && gen != sol.p) out.fail("type II generator differs at " + where(in));
    }
  }
  if (out.pass) out.detail = std::to_string(systems) + " systems, 1-D kernels equal pinned solves";
  return out;
}

Outcome criterion7() {
  Outcome out;
  const auto f = testing::geometric_tuple(6);
  const int m = 1;
  const int n = 2;
  int witnesses = 0;
  auto check_witness = [&](const Verdict& v, const std::function<bool(const std::vector<Polynomial>&)>& holds,
                           std::size_t pinned_poly, const std::string& label) {
    const auto* s = std::get_if<verdict::Singular>(&v);
    if (!s) {
      out.fail(label + ": verdict " + describe(v));
      return;
    }
    const auto& w = s->kernel_witness;
    if (std::all_of(w.begin(), w.end(), [](const Polynomial& p) { return p.is_zero(); })) {
      out.fail(label + ": zero witness");
    } else if (!w[pinned_poly].constant_term().is_zero()) {
      out.fail(label + ": witness is not in the pinned hyperplane");
    } else if (!holds(w)) {
      out.fail(label + ": witness violates the order condition");
    } else {
      ++witnesses;
    }
  };
  for (int k = 0; k <= m; ++k) {
    try {
      (void)solve_type1(f, {n, k, m});
      out.fail("type I k=" + std::to_string(k) + " solved");
    } catch (const NotNormal& e) {
      check_witness(
          e.verdict(),
          [&](const std::vector<Polynomial>& w) {
            return residual_order(type1_combination(f, k, w)).certifies(m * n);
          },
          static_cast<std::size_t>(k), "type I k=" + std::to_string(k));
    }
  }
  for (int s = 0; s <= m; ++s) {
    try {
      (void)solve_type2(f, {n, s, m});
      out.fail("type II s=" + std::to_string(s) + " solved");
    } catch (const NotNormal& e) {
      check_witness(
          e.verdict(),
          [&](const std::vector<Polynomial>& w) {
            for (int j = 0; j <= m; ++j) {
              if (j != s && !residual_order(type2_combination(f, s, j, w)).certifies(n)) return false;
            }
            return true;
          },
          static_cast<std::size_t>(s), "type II s=" + std::to_string(s));
    }
  }
  try {
    (void)run_theorem1(f, n);
    out.fail("pipeline accepted a degenerate tuple");
  } catch (const NotNormal&) {
  }
  if (out.pass) out.detail = std::to_string(witnesses) + " NotNormal witnesses substitute back exactly";
  return out;
}

Outcome criterion8(const Sweep& sweep) {
  Outcome out;
  for (const auto& in : sweep.passing) {
    const auto sp = scalar_products(in.result.type1, in.result.type2);
    for (std::size_t k = 0; k < sp.dim(); ++k) {
      for (std::size_t s = 0; s < sp.dim(); ++s) {
        const Polynomial expected = k == s ? poly({1}) : Polynomial();
        if (!(sp(k, s) == expected)) {
          out.fail("P_{" + std::to_string(k) + "," + std::to_string(s) + "} = " + sp(k, s).to_string() + " at " +
                   where(in));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(sweep.passing.size()) + " instances, every scalar product is delta";
  return out;
}

Outcome criterion9() {
  Outcome out;
  const PolyMatrix base[2] = {expected_m1(), expected_m2()};
  int mutants = 0;
  for (int which = 0; which < 2; ++which) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        const auto coeffs = base[which](r, c).coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (coeffs[i].is_zero()) continue;
          ++mutants;
          PolyMatrix mats[2] = {base[0], base[1]};
          auto flipped = coeffs;
          flipped[i] = -flipped[i];
          mats[which](r, c) = Polynomial(flipped);
          // Entries of the product that differ from I, computed by hand.
          std::set<std::pair<std::size_t, std::size_t>> expected;
          for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
              const Polynomial e = mats[0](a, 0) * mats[1](0, b) + mats[0](a, 1) * mats[1](1, b);
              if (!(e == (a == b ? poly({1}) : Polynomial()))) expected.emplace(a, b);
            }
          }
          const auto report = check_duality(mats[0], mats[1]);
          std::set<std::pair<std::size_t, std::size_t>> reported;
          for (const auto& e : report.offending()) reported.emplace(e.row, e.col);
          if (report.identity || expected.empty() || reported != expected) {
            out.fail(std::string(which == 0 ? "M1" : "M2") + "(" + std::to_string(r) + "," + std::to_string(c) +
                     ") z^" + std::to_string(i) + " flip misreported");
          }
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(mutants) + " sign flips, each flagged at the right entries";
  return out;
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Outcome out;
    out.fail(std::string("exception: ") + e.what());
    return out;
  }
}

}  // namespace

int main() {
  Sweep sweep;
  std::string sweep_error;
  try {
    sweep = run_sweep();
  } catch (const std::exception& e) {
    sweep_error = e.what();
  }
  auto on_sweep = [&](Outcome (*fn)(const Sweep&)) {
    return guarded([&] {
      if (!sweep_error.empty()) {
        Outcome out;
        out.fail("sweep failed: " + sweep_error);
        return out;
      }
      return fn(sweep);
    });
  };

  const std::vector<std::pair<const char*, Outcome>> results = {
      {"worked example identity", guarded(criterion1)},
      {"identity at scale", on_sweep(criterion2)},
      {"m=1 determinant", on_sweep(criterion3)},
      {"order conditions", on_sweep(criterion4)},
      {"degree and normalization", on_sweep(criterion5)},
      {"kernel oracle", on_sweep(criterion6)},
      {"degeneracy detection", guarded(criterion7)},
      {"scalar products", on_sweep(criterion8)},
      {"mutation sensitivity", guarded(criterion9)},
  };
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, out] = results[i];
    std::printf("%s %zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, name, out.detail.c_str());
    if (!out.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed), results.size());
  return failed == 0 ? 0 : 1;
}
