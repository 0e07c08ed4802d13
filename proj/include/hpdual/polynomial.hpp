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

#ifndef HPDUAL_POLYNOMIAL_HPP
#define HPDUAL_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hpdual/rational.hpp"

namespace hpdual {

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity).
using Degree = std::optional<int>;

/// Dense univariate polynomial in z over the rationals. Coefficient i is the
/// coefficient of z^i; the highest stored coefficient is always nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  /// c * z^power
  static Polynomial monomial(const Rational& c, int power);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^i; zero beyond the degree.
  Rational coeff(int i) const;
  Rational constant_term() const { return coeff(0); }

  Degree degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// True for the zero polynomial as well.
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  Rational evaluate(const Rational& z) const;
  /// Multiplies by z^power, power >= 0.
  Polynomial shifted(int power) const;

  /// Ascending powers with explicit signs: "1 - 1*z + 1/2*z^2". Zero prints as "0".
  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace hpdual

#endif  // HPDUAL_POLYNOMIAL_HPP
