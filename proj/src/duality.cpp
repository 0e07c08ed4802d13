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

#include "hpdual/duality.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hpdual/error.hpp"
#include "hpdual/exact_linalg.hpp"

namespace hpdual {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "PolyMatrix: not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t dim) {
  PolyMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = Polynomial::constant(1);
  return out;
}

bool PolyMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const Polynomial& e = (*this)(r, c);
      if (r == c ? e != Polynomial::constant(1) : !e.is_zero()) return false;
    }
  }
  return true;
}

Degree PolyMatrix::max_degree() const {
  Degree best;
  for (const auto& e : entries_) {
    if (e.degree() && (!best || *e.degree() > *best)) best = e.degree();
  }
  return best;
}

RatMatrix PolyMatrix::evaluate(const Rational& z) const {
  RatMatrix out(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(r, c) = (*this)(r, c).evaluate(z);
  }
  return out;
}

namespace {

template <class Solution, class IndexOf>
void check_family(std::span<const Solution> sols, IndexOf slot, const char* what) {
  if (sols.empty()) throw Error(ErrorCode::kMixedInputs, std::string(what) + ": no solutions");
  const auto& first = sols.front();
  if (static_cast<int>(sols.size()) != first.index.m + 1) {
    throw Error(ErrorCode::kMixedInputs, std::string(what) + ": expected m+1 solutions");
  }
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    if (s.index.n != first.index.n || s.index.m != first.index.m ||
        s.tuple_fingerprint != first.tuple_fingerprint) {
      throw Error(ErrorCode::kMixedInputs,
                  std::string(what) + ": solution " + std::to_string(i) +
                      " belongs to a different tuple or n");
    }
    if (slot(s) != static_cast<int>(i)) {
      throw Error(ErrorCode::kMixedInputs,
                  std::string(what) + ": solution " + std::to_string(i) + " has the wrong index");
    }
  }
}

// Entry j of u_k (type I) or v_s (type II): the distinguished polynomial
// as is, every other one times z.
Polynomial weighted(const std::vector<Polynomial>& polys, int distinguished, int j) {
  const Polynomial& p = polys[static_cast<std::size_t>(j)];
  return j == distinguished ? p : p.shifted(1);
}

}  // namespace

PolyMatrix assemble_m1(std::span<const Type1Solution> sols) {
  check_family(sols, [](const Type1Solution& s) { return s.index.k; }, "assemble_m1");
  const int m = sols.front().index.m;
  PolyMatrix out(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    for (int j = 0; j <= m; ++j) out(k, j) = weighted(sols[k].q, k, j);
  }
  return out;
}

PolyMatrix assemble_m2(std::span<const Type2Solution> sols) {
  check_family(sols, [](const Type2Solution& s) { return s.index.s; }, "assemble_m2");
  const int m = sols.front().index.m;
  PolyMatrix out(static_cast<std::size_t>(m) + 1);
  for (int s = 0; s <= m; ++s) {
    for (int j = 0; j <= m; ++j) out(j, s) = weighted(sols[s].p, s, j);
  }
  return out;
}

PolyMatrix polymatrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "polymatrix_mul: " + std::to_string(a.dim()) +
                                                   " vs " + std::to_string(b.dim()));
  }
  const std::size_t d = a.dim();
  PolyMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Polynomial acc;
      for (std::size_t i = 0; i < d; ++i) acc += a(r, i) * b(i, c);
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

Polynomial polymatrix_det(const PolyMatrix& a) {
  const std::size_t d = a.dim();
  if (d == 0) return Polynomial::constant(1);
  int bound = 0;
  for (std::size_t r = 0; r < d; ++r) {
    Degree row_max;
    for (std::size_t c = 0; c < d; ++c) {
      const Degree e = a(r, c).degree();
      if (e && (!row_max || *e > *row_max)) row_max = e;
    }
    if (!row_max) return {};
    bound += *row_max;
  }
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int i = 0; i <= bound; ++i) {
    xs.emplace_back(i);
    ys.push_back(determinant(a.evaluate(Rational(i))));
  }
  return interpolate(xs, ys);
}

PolyMatrix scalar_products(std::span<const Type1Solution> type1,
                           std::span<const Type2Solution> type2) {
  check_family(type1, [](const Type1Solution& s) { return s.index.k; }, "scalar_products");
  check_family(type2, [](const Type2Solution& s) { return s.index.s; }, "scalar_products");
  if (type1.size() != type2.size() || type1.front().index.n != type2.front().index.n ||
      type1.front().tuple_fingerprint != type2.front().tuple_fingerprint) {
    throw Error(ErrorCode::kMixedInputs, "scalar_products: type I and type II families differ");
  }
  const int m = type1.front().index.m;
  PolyMatrix out(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    for (int s = 0; s <= m; ++s) {
      Polynomial acc;
      for (int j = 0; j <= m; ++j) {
        acc += weighted(type1[k].q, k, j) * weighted(type2[s].p, s, j);
      }
      out(k, s) = std::move(acc);
    }
  }
  return out;
}

std::vector<DualityReport::Entry> DualityReport::offending() const {
  std::vector<Entry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [](const Entry& e) { return !e.ok; });
  return out;
}

DualityReport check_duality(const PolyMatrix& m1, const PolyMatrix& m2) {
  DualityReport report;
  report.product = polymatrix_mul(m1, m2);
  report.identity = true;
  const std::size_t d = report.product.dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      DualityReport::Entry e;
      e.row = r;
      e.col = c;
      e.value = report.product(r, c);
      e.expected = r == c ? Rational(1) : Rational(0);
      e.is_constant = e.value.is_constant();
      e.ok = e.is_constant && e.value.constant_term() == e.expected;
      if (!e.ok) {
        std::string why;
        if (!e.is_constant) why += "not constant (degree " + std::to_string(*e.value.degree()) + ")";
        if (e.value.constant_term() != e.expected) {
          why += std::string(why.empty() ? "" : ", ") + "value at 0 is " +
                 e.value.constant_term().to_string() + ", expected " + e.expected.to_string();
        }
        e.detail = why;
        report.identity = false;
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace hpdual
