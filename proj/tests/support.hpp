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

// Fixtures and independent oracles shared by the test suites. Nothing here
// calls the code paths it is used to check.

#ifndef HPDUAL_TESTS_SUPPORT_HPP
#define HPDUAL_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hpdual/duality.hpp"
#include "hpdual/exact_linalg.hpp"
#include "hpdual/laurent_series.hpp"
#include "hpdual/polynomial.hpp"
#include "hpdual/rational.hpp"
#include "hpdual/series_tuple.hpp"

namespace hpdual::testing {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

/// f_0 = 1, f_1 = 1 + 1/z, two coefficients each.
inline SeriesTuple worked_tuple() {
  return SeriesTuple({LaurentSeries::at_infinity({q(1), q(0)}),
                      LaurentSeries::at_infinity({q(1), q(1)})});
}

/// f_0 = 1, f_1 = 1 + 1/z + 1/z^2 + ... with `len` coefficients each.
inline SeriesTuple geometric_tuple(int len) {
  std::vector<Rational> one(static_cast<std::size_t>(len));
  one[0] = 1;
  std::vector<Rational> geo(static_cast<std::size_t>(len), q(1));
  return SeriesTuple({LaurentSeries::at_infinity(one), LaurentSeries::at_infinity(geo)});
}

namespace oracle {

/// Sparse power -> coefficient map; every value is the exact coefficient.
using PowerMap = std::map<int, Rational>;

/// The known coefficients of a series as a PowerMap (all of them, zeros
/// included, so callers can distinguish "zero" from "unknown").
inline PowerMap known(const LaurentSeries& s) {
  PowerMap out;
  for (int p = std::max(s.top_power(), 0); p >= s.known_through(); --p) out[p] = s.coeff(p);
  return out;
}

/// Schoolbook z^shift * poly * series where the series is given by its
/// known coefficients; returns every output power whose value is fully
/// determined by them.
inline PowerMap shift_mul(const Polynomial& poly, int shift, const LaurentSeries& f) {
  PowerMap out;
  const int deg = poly.degree().value_or(0);
  const PowerMap fc = known(f);
  const int hi = shift + deg + std::max(f.top_power(), 0);
  const int lo = shift + deg + f.known_through();
  for (int p = hi; p >= lo; --p) {
    Rational acc;
    for (int i = 0; i <= deg; ++i) {
      const int fp = p - shift - i;
      auto it = fc.find(fp);
      if (it != fc.end()) acc += poly.coeff(i) * it->second;
      // fp above every stored power contributes zero
    }
    out[p] = acc;
  }
  return out;
}

inline Rational laplace_det(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != c) minor(r - 1, k++) = a(r, j);
      }
    }
    const Rational term = a(0, c) * laplace_det(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

inline Polynomial laplace_det(const PolyMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Polynomial::constant(1);
  if (n == 1) return a(0, 0);
  Polynomial acc;
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != c) minor(r - 1, k++) = a(r, j);
      }
    }
    const Polynomial term = a(0, c) * laplace_det(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace oracle

/// Small random rational matrix with entries p/q, |p| <= height, 1 <= q <= 3.
/// A fraction of the entries is forced to zero so rank deficiency happens.
inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               int height = 5, double zero_fraction = 0.3) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  RatMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < zero_fraction) continue;
      a(r, c) = Rational(num(rng), den(rng));
    }
  }
  return a;
}

/// Random matrix of rank at most `rank_cap`: product of two random factors.
inline RatMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 std::size_t rank_cap) {
  const RatMatrix left = random_matrix(rng, rows, rank_cap, 4, 0.0);
  const RatMatrix right = random_matrix(rng, rank_cap, cols, 4, 0.0);
  RatMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Rational acc;
      for (std::size_t i = 0; i < rank_cap; ++i) acc += left(r, i) * right(i, c);
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace hpdual::testing

#endif  // HPDUAL_TESTS_SUPPORT_HPP
