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

#include "hpdual/type2.hpp"

#include <string>
#include <utility>

#include "hpdual/error.hpp"

namespace hpdual {

namespace {

void check_index(const SeriesTuple& f, const Type2Index& idx) {
  if (idx.m != f.m()) {
    throw Error(ErrorCode::kInvalidArgument, "type II index has m=" + std::to_string(idx.m) +
                                                 " but the tuple has m=" + std::to_string(f.m()));
  }
  if (idx.n < 1) throw Error(ErrorCode::kInvalidArgument, "type II index needs n >= 1");
  if (idx.s < 0 || idx.s > idx.m) {
    throw Error(ErrorCode::kInvalidArgument, "type II index needs 0 <= s <= m");
  }
}

std::string context(const Type2Index& idx) {
  return "type II index n=" + std::to_string(idx.n) + " s=" + std::to_string(idx.s);
}

}  // namespace

std::vector<int> Type2Index::multi_index() const {
  std::vector<int> out(static_cast<std::size_t>(m) + 1, m * n - 1);
  out[static_cast<std::size_t>(s)] = m * n;
  return out;
}

LinearSystem build_type2_system(const SeriesTuple& f, const Type2Index& idx) {
  check_index(f, idx);
  const int m = idx.m;
  const int n = idx.n;
  const int s = idx.s;
  const int needed = -(m * n + n - 1);
  for (int j = 0; j <= m; ++j) {
    if (f[j].known_through() > needed) {
      throw InsufficientTruncation(needed, f[j].known_through(),
                                   context(idx) + ", f_" + std::to_string(j));
    }
  }

  LinearSystem sys;
  for (int j = 0; j <= m; ++j) sys.degree_bounds.push_back(idx.degree_bound(j));
  sys.pinned = coefficient_offset(sys.degree_bounds, s);
  const std::size_t s_offset = sys.pinned;

  const std::size_t per_pair = static_cast<std::size_t>(m * n + n);
  const std::size_t rows = static_cast<std::size_t>(m) * per_pair;
  RatMatrix full(rows, rows + 1);
  std::size_t row = 0;
  for (int j = 0; j <= m; ++j) {
    if (j == s) continue;
    const std::size_t j_offset = coefficient_offset(sys.degree_bounds, j);
    for (int p = m * n; p >= -n + 1; --p, ++row) {
      // z f_s P_j
      for (int i = 0; i <= idx.degree_bound(j); ++i) {
        const int power = p - 1 - i;
        if (power <= 0) full(row, j_offset + static_cast<std::size_t>(i)) = f[s].coeff(power);
      }
      // - f_j P_s
      for (int i = 0; i <= idx.degree_bound(s); ++i) {
        const int power = p - i;
        if (power <= 0) full(row, s_offset + static_cast<std::size_t>(i)) = -f[j].coeff(power);
      }
    }
  }

  sys.rhs.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) sys.rhs[r] = -full(r, sys.pinned);
  sys.matrix = full.without_column(sys.pinned);
  return sys;
}

LaurentSeries type2_residual(const SeriesTuple& f, int s, int j, std::span<const Polynomial> p) {
  if (static_cast<int>(p.size()) != f.m() + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "type2_residual: need m+1 polynomials");
  }
  return series_sub(poly_shift_mul_series(p[static_cast<std::size_t>(j)], 1, f[s]),
                    poly_shift_mul_series(p[static_cast<std::size_t>(s)], 0, f[j]));
}

std::variant<Type2Solution, Verdict> attempt_type2(const SeriesTuple& f, const Type2Index& idx) {
  const LinearSystem sys = build_type2_system(f, idx);
  SquareSolution solved = solve_square(sys.matrix, sys.rhs);
  if (auto* sing = std::get_if<Singular>(&solved)) {
    return Verdict{verdict::Singular{sing->rank, sys.size(),
                                     sys.unpack(sys.expand(sing->kernel_witness, Rational(0)))}};
  }
  Type2Solution sol;
  sol.index = idx;
  sol.tuple_fingerprint = f.fingerprint();
  sol.p = sys.unpack(sys.expand(std::get<RatVector>(solved), Rational(1)));

  const Degree ds = sol.p[static_cast<std::size_t>(idx.s)].degree();
  if (ds != idx.m * idx.n) return Verdict{verdict::DegreeDrop{idx.s, ds, idx.m * idx.n}};

  for (int j = 0; j <= idx.m; ++j) {
    if (j == idx.s) continue;
    sol.residuals.push_back(type2_residual(f, idx.s, j, sol.p));
    sol.residual_orders.push_back(residual_order(sol.residuals.back()));
    if (!sol.residual_orders.back().certifies(idx.required_order())) {
      return Verdict{verdict::OrderShortfall{j, sol.residual_orders.back(), idx.required_order()}};
    }
  }
  return sol;
}

Type2Solution solve_type2(const SeriesTuple& f, const Type2Index& idx) {
  auto attempt = attempt_type2(f, idx);
  if (auto* v = std::get_if<Verdict>(&attempt)) throw NotNormal(context(idx), std::move(*v));
  return std::get<Type2Solution>(std::move(attempt));
}

std::vector<Type2Solution> solve_type2_all(const SeriesTuple& f, int n) {
  std::vector<Type2Solution> out;
  for (int s = 0; s <= f.m(); ++s) out.push_back(solve_type2(f, {n, s, f.m()}));
  return out;
}

VerificationReport verify_type2(const SeriesTuple& f, const Type2Solution& sol) {
  VerificationReport report;
  const Type2Index& idx = sol.index;
  const bool shape_ok = idx.m == f.m() && static_cast<int>(sol.p.size()) == f.m() + 1 &&
                        idx.s >= 0 && idx.s <= idx.m && idx.n >= 1;
  report.add("shape", shape_ok, shape_ok ? "" : "index or polynomial count does not match tuple");
  if (!shape_ok) return report;

  bool bounds_ok = true;
  std::string bounds_detail;
  for (int j = 0; j <= idx.m; ++j) {
    const Degree d = sol.p[static_cast<std::size_t>(j)].degree();
    if (d && *d > idx.degree_bound(j)) {
      bounds_ok = false;
      bounds_detail += "deg P_" + std::to_string(j) + " = " + std::to_string(*d) + " > " +
                       std::to_string(idx.degree_bound(j)) + "; ";
    }
  }
  report.add("degree-bound", bounds_ok, bounds_detail);

  const Polynomial& ps = sol.p[static_cast<std::size_t>(idx.s)];
  report.add("degree-attained", ps.degree() == idx.m * idx.n,
             "deg P_s = " + (ps.degree() ? std::to_string(*ps.degree()) : std::string("-inf")));
  report.add("normalization", ps.constant_term() == Rational(1),
             "P_s(0) = " + ps.constant_term().to_string());

  for (int j = 0; j <= idx.m; ++j) {
    if (j == idx.s) continue;
    const ResidualOrder order = residual_order(type2_residual(f, idx.s, j, sol.p));
    report.add("residual-order[" + std::to_string(j) + "]", order.certifies(idx.required_order()),
               "order " + order.to_string() + ", required " + std::to_string(idx.required_order()));
  }
  return report;
}

}  // namespace hpdual
