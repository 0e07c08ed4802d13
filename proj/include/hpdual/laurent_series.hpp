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

#ifndef HPDUAL_LAURENT_SERIES_HPP
#define HPDUAL_LAURENT_SERIES_HPP

#include <ostream>
#include <string>
#include <vector>

#include "hpdual/polynomial.hpp"
#include "hpdual/rational.hpp"

namespace hpdual {

/// Truncated formal series sum_p a_p z^p at z = infinity.
///
/// Coefficients are stored from the highest power `top_power()` downwards to
/// `known_through()`, the lowest power whose coefficient is known. Every
/// power above top_power() is known to be zero; every power below
/// known_through() is unknown (not zero). The all-zero series has no stored
/// coefficients and top_power() == known_through() - 1.
class LaurentSeries {
 public:
  /// The zero series, trusted down to z^known_through.
  explicit LaurentSeries(int known_through = 0);

  /// coeffs[t] is the coefficient of z^(top_power - t); trusted through
  /// z^(top_power - coeffs.size() + 1). Leading zeros are trimmed.
  LaurentSeries(int top_power, std::vector<Rational> coeffs);

  /// Series sum_l c[l] z^-l, the usual form of an input series f(z) with
  /// f(inf) = c[0]. Trusted through z^-(c.size() - 1).
  static LaurentSeries at_infinity(std::vector<Rational> c);
  /// Same, but the coefficients past c are known to vanish down to
  /// z^known_through (lets tests describe exact finite series).
  static LaurentSeries at_infinity(std::vector<Rational> c, int known_through);

  int top_power() const noexcept { return top_power_; }
  int known_through() const noexcept { return known_through_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  bool is_known(int power) const noexcept { return power >= known_through_; }
  /// Coefficient of z^power. Throws InsufficientTruncation below the window.
  Rational coeff(int power) const;

  /// Drops trust below z^known_through (no-op if already coarser).
  LaurentSeries truncated(int known_through) const;

  LaurentSeries operator-() const;
  LaurentSeries operator*(const Rational& scalar) const;

  std::string to_string() const;
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  void trim();

  int top_power_;
  int known_through_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

/// z^shift * q(z) * f(z). The result is trusted through
/// z^(shift + deg q + f.known_through()): the coefficient of z^p draws on f
/// at powers p - shift - i for every i <= deg q.
LaurentSeries poly_shift_mul_series(const Polynomial& q, int shift, const LaurentSeries& f);

/// Coefficient-wise sum, trusted on the intersection of both windows.
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b);

/// Product of two series, trusted as far as both inputs allow.
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

/// Vanishing order at infinity: the largest d with every coefficient of z^p,
/// p > -d, equal to zero. If the whole trusted window is zero only a lower
/// bound is known.
struct ResidualOrder {
  int order = 0;
  bool lower_bound = false;

  /// True only when the data certify order >= d.
  bool certifies(int d) const noexcept { return order >= d; }
  std::string to_string() const;
  friend bool operator==(const ResidualOrder&, const ResidualOrder&) = default;
};

ResidualOrder residual_order(const LaurentSeries& r);

/// g with f*g = 1 + O(z^-(terms+1)); needs f(inf) != 0 and f known
/// through z^-terms.
LaurentSeries series_reciprocal(const LaurentSeries& f, int terms);

}  // namespace hpdual

#endif  // HPDUAL_LAURENT_SERIES_HPP
