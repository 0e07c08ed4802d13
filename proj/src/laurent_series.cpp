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

#include "hpdual/laurent_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hpdual/error.hpp"

namespace hpdual {

LaurentSeries::LaurentSeries(int known_through)
    : top_power_(known_through - 1), known_through_(known_through) {}

LaurentSeries::LaurentSeries(int top_power, std::vector<Rational> coeffs)
    : top_power_(top_power),
      known_through_(top_power - static_cast<int>(coeffs.size()) + 1),
      coeffs_(std::move(coeffs)) {
  trim();
}

LaurentSeries LaurentSeries::at_infinity(std::vector<Rational> c) {
  return LaurentSeries(0, std::move(c));
}

LaurentSeries LaurentSeries::at_infinity(std::vector<Rational> c, int known_through) {
  const int given_through = 1 - static_cast<int>(c.size());
  if (known_through > given_through) {
    return LaurentSeries(0, std::move(c)).truncated(known_through);
  }
  c.resize(static_cast<std::size_t>(1 - known_through));
  return LaurentSeries(0, std::move(c));
}

void LaurentSeries::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  top_power_ -= static_cast<int>(lead);
  if (coeffs_.empty()) top_power_ = known_through_ - 1;
}

Rational LaurentSeries::coeff(int power) const {
  if (power < known_through_) {
    throw InsufficientTruncation(power, known_through_, "series coefficient");
  }
  if (power > top_power_) return Rational();
  return coeffs_[static_cast<std::size_t>(top_power_ - power)];
}

LaurentSeries LaurentSeries::truncated(int known_through) const {
  if (known_through <= known_through_) return *this;
  if (known_through > top_power_) return LaurentSeries(known_through);
  std::vector<Rational> kept(coeffs_.begin(),
                             coeffs_.begin() + (top_power_ - known_through + 1));
  return LaurentSeries(top_power_, std::move(kept));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries LaurentSeries::operator*(const Rational& scalar) const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c *= scalar;
  out.trim();
  return out;
}

std::string LaurentSeries::to_string() const {
  std::string out;
  for (int p = top_power_; p >= known_through_; --p) {
    const Rational c = coeff(p);
    if (c.is_zero()) continue;
    const std::string mag = (c.sign() < 0 ? -c : c).to_string();
    if (out.empty()) {
      out += c.sign() < 0 ? "-" : "";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += mag;
    if (p == 1) out += "*z";
    if (p != 0 && p != 1) out += "*z^" + std::to_string(p);
  }
  if (out.empty()) out = "0";
  out += " + O(z^" + std::to_string(known_through_ - 1) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.to_string(); }

LaurentSeries poly_shift_mul_series(const Polynomial& q, int shift, const LaurentSeries& f) {
  if (shift < 0) throw std::invalid_argument("poly_shift_mul_series: negative shift");
  if (q.is_zero()) return LaurentSeries(shift + f.known_through());
  const int deg = *q.degree();
  const int top = shift + deg + f.top_power();
  const int through = shift + deg + f.known_through();
  if (top < through) return LaurentSeries(through);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(top - through + 1));
  const auto& qc = q.coeffs();
  for (int p = top; p >= through; --p) {
    Rational acc;
    for (int i = 0; i <= deg; ++i) {
      const Rational& qi = qc[static_cast<std::size_t>(i)];
      if (qi.is_zero()) continue;
      const int fp = p - shift - i;
      if (fp > f.top_power()) continue;
      acc += qi * f.coeff(fp);
    }
    out.push_back(std::move(acc));
  }
  return LaurentSeries(top, std::move(out));
}

namespace {

template <class Op>
LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, Op op) {
  const int through = std::max(a.known_through(), b.known_through());
  const int top = std::max(a.top_power(), b.top_power());
  if (top < through) return LaurentSeries(through);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(top - through + 1));
  for (int p = top; p >= through; --p) out.push_back(op(a.coeff(p), b.coeff(p)));
  return LaurentSeries(top, std::move(out));
}

}  // namespace

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  const int top = a.top_power() + b.top_power();
  const int through =
      std::max(a.known_through() + b.top_power(), b.known_through() + a.top_power());
  if (top < through) return LaurentSeries(through);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(top - through + 1));
  for (int p = top; p >= through; --p) {
    Rational acc;
    const int lo = std::max(a.known_through(), p - b.top_power());
    const int hi = std::min(a.top_power(), p - b.known_through());
    for (int i = lo; i <= hi; ++i) acc += a.coeff(i) * b.coeff(p - i);
    out.push_back(std::move(acc));
  }
  return LaurentSeries(top, std::move(out));
}

std::string ResidualOrder::to_string() const {
  return (lower_bound ? ">= " : "") + std::to_string(order);
}

ResidualOrder residual_order(const LaurentSeries& r) {
  if (r.is_zero()) return {1 - r.known_through(), true};
  return {-r.top_power(), false};
}

LaurentSeries series_reciprocal(const LaurentSeries& f, int terms) {
  if (terms < 0) throw std::invalid_argument("series_reciprocal: negative term count");
  if (f.top_power() > 0) {
    throw Error(ErrorCode::kInvalidArgument, "series_reciprocal: series has a pole at infinity");
  }
  if (f.is_zero() || f.top_power() < 0) {
    throw Error(ErrorCode::kLeadingZero, "series_reciprocal: f(inf) = 0");
  }
  if (f.known_through() > -terms) {
    throw InsufficientTruncation(-terms, f.known_through(), "series_reciprocal");
  }
  const Rational lead = f.coeff(0);
  std::vector<Rational> g;
  g.reserve(static_cast<std::size_t>(terms) + 1);
  g.push_back(Rational(1) / lead);
  for (int l = 1; l <= terms; ++l) {
    Rational acc;
    for (int i = 1; i <= l; ++i) acc += f.coeff(-i) * g[static_cast<std::size_t>(l - i)];
    g.push_back(-acc / lead);
  }
  return LaurentSeries(0, std::move(g));
}

}  // namespace hpdual
