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

#include "hpdual/type1.hpp"

#include <string>
#include <utility>

#include "hpdual/error.hpp"

namespace hpdual {

namespace {

void check_index(const SeriesTuple& f, const Type1Index& idx) {
  if (idx.m != f.m()) {
    throw Error(ErrorCode::kInvalidArgument, "type I index has m=" + std::to_string(idx.m) +
                                                 " but the tuple has m=" + std::to_string(f.m()));
  }
  if (idx.n < 1) throw Error(ErrorCode::kInvalidArgument, "type I index needs n >= 1");
  if (idx.k < 0 || idx.k > idx.m) {
    throw Error(ErrorCode::kInvalidArgument, "type I index needs 0 <= k <= m");
  }
}

std::string context(const Type1Index& idx) {
  return "type I index n=" + std::to_string(idx.n) + " k=" + std::to_string(idx.k);
}

}  // namespace

std::vector<int> Type1Index::multi_index() const {
  std::vector<int> out(static_cast<std::size_t>(m) + 1, n - 1);
  out[static_cast<std::size_t>(k)] = n;
  return out;
}

LinearSystem build_type1_system(const SeriesTuple& f, const Type1Index& idx) {
  check_index(f, idx);
  const int m = idx.m;
  const int n = idx.n;
  const int needed = -(m * n + n - 1);
  for (int j = 0; j <= m; ++j) {
    if (f[j].known_through() > needed) {
      throw InsufficientTruncation(needed, f[j].known_through(),
                                   context(idx) + ", f_" + std::to_string(j));
    }
  }

  LinearSystem sys;
  for (int j = 0; j <= m; ++j) sys.degree_bounds.push_back(idx.degree_bound(j));
  sys.pinned = coefficient_offset(sys.degree_bounds, idx.k);

  const std::size_t rows = static_cast<std::size_t>(m * n + n);
  RatMatrix full(rows, rows + 1);
  std::size_t row = 0;
  for (int p = n; p >= -m * n + 1; --p, ++row) {
    std::size_t col = 0;
    for (int j = 0; j <= m; ++j) {
      for (int i = 0; i <= idx.degree_bound(j); ++i, ++col) {
        const int power = p - idx.shift(j) - i;
        if (power <= 0) full(row, col) = f[j].coeff(power);
      }
    }
  }

  sys.rhs.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) sys.rhs[r] = -full(r, sys.pinned);
  sys.matrix = full.without_column(sys.pinned);
  return sys;
}

LaurentSeries type1_residual(const SeriesTuple& f, int k, std::span<const Polynomial> q) {
  if (static_cast<int>(q.size()) != f.m() + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "type1_residual: need m+1 polynomials");
  }
  LaurentSeries sum = poly_shift_mul_series(q[0], k == 0 ? 0 : 1, f[0]);
  for (int j = 1; j <= f.m(); ++j) {
    sum = series_add(sum, poly_shift_mul_series(q[static_cast<std::size_t>(j)], j == k ? 0 : 1, f[j]));
  }
  return sum;
}

std::variant<Type1Solution, Verdict> attempt_type1(const SeriesTuple& f, const Type1Index& idx) {
  const LinearSystem sys = build_type1_system(f, idx);
  SquareSolution solved = solve_square(sys.matrix, sys.rhs);
  if (auto* sing = std::get_if<Singular>(&solved)) {
    return Verdict{verdict::Singular{sing->rank, sys.size(),
                                     sys.unpack(sys.expand(sing->kernel_witness, Rational(0)))}};
  }
  Type1Solution sol;
  sol.index = idx;
  sol.tuple_fingerprint = f.fingerprint();
  sol.q = sys.unpack(sys.expand(std::get<RatVector>(solved), Rational(1)));

  const Degree dk = sol.q[static_cast<std::size_t>(idx.k)].degree();
  if (dk != idx.n) return Verdict{verdict::DegreeDrop{idx.k, dk, idx.n}};

  sol.residual = type1_residual(f, idx.k, sol.q);
  sol.residual_order = residual_order(sol.residual);
  if (!sol.residual_order.certifies(idx.required_order())) {
    return Verdict{verdict::OrderShortfall{-1, sol.residual_order, idx.required_order()}};
  }
  return sol;
}

Type1Solution solve_type1(const SeriesTuple& f, const Type1Index& idx) {
  auto attempt = attempt_type1(f, idx);
  if (auto* v = std::get_if<Verdict>(&attempt)) throw NotNormal(context(idx), std::move(*v));
  return std::get<Type1Solution>(std::move(attempt));
}

std::vector<Type1Solution> solve_type1_all(const SeriesTuple& f, int n) {
  std::vector<Type1Solution> out;
  for (int k = 0; k <= f.m(); ++k) out.push_back(solve_type1(f, {n, k, f.m()}));
  return out;
}

VerificationReport verify_type1(const SeriesTuple& f, const Type1Solution& sol) {
  VerificationReport report;
  const Type1Index& idx = sol.index;
  const bool shape_ok = idx.m == f.m() && static_cast<int>(sol.q.size()) == f.m() + 1 &&
                        idx.k >= 0 && idx.k <= idx.m && idx.n >= 1;
  report.add("shape", shape_ok, shape_ok ? "" : "index or polynomial count does not match tuple");
  if (!shape_ok) return report;

  bool bounds_ok = true;
  std::string bounds_detail;
  for (int j = 0; j <= idx.m; ++j) {
    const Degree d = sol.q[static_cast<std::size_t>(j)].degree();
    if (d && *d > idx.degree_bound(j)) {
      bounds_ok = false;
      bounds_detail += "deg Q_" + std::to_string(j) + " = " + std::to_string(*d) + " > " +
                       std::to_string(idx.degree_bound(j)) + "; ";
    }
  }
  report.add("degree-bound", bounds_ok, bounds_detail);

  const Polynomial& qk = sol.q[static_cast<std::size_t>(idx.k)];
  report.add("degree-attained", qk.degree() == idx.n,
             "deg Q_k = " + (qk.degree() ? std::to_string(*qk.degree()) : std::string("-inf")));
  report.add("normalization", qk.constant_term() == Rational(1),
             "Q_k(0) = " + qk.constant_term().to_string());

  const ResidualOrder order = residual_order(type1_residual(f, idx.k, sol.q));
  report.add("residual-order", order.certifies(idx.required_order()),
             "order " + order.to_string() + ", required " + std::to_string(idx.required_order()));
  return report;
}

}  // namespace hpdual
