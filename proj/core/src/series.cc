// Copyright 2026 The Weierstrass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weierstrass/series.h"

#include <algorithm>
#include <utility>

#include "weierstrass/errors.h"

namespace weierstrass {

std::vector<FiniteField::Rep> MulSeries(const FiniteField& field,
                                        const std::vector<FiniteField::Rep>& a,
                                        const std::vector<FiniteField::Rep>& b,
                                        std::size_t n) {
  if (a.empty() || b.empty() || n == 0) return {};
  const std::size_t len = std::min(n, a.size() + b.size() - 1);
  std::vector<FiniteField::Rep> out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j] != 0) out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
  }
  return out;
}

std::vector<FiniteField::Rep> InverseSeries(
    const FiniteField& field, const std::vector<FiniteField::Rep>& a,
    std::size_t n) {
  if (a.empty() || a[0] == 0) {
    throw PreconditionError("series inverse needs a nonzero constant term");
  }
  std::vector<FiniteField::Rep> out(n, 0);
  if (n == 0) return out;
  const FiniteField::Rep inv0 = field.inv(a[0]);
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    FiniteField::Rep acc = 0;
    const std::size_t jmax = std::min(k, a.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (a[j] != 0) acc = field.add(acc, field.mul(a[j], out[k - j]));
    }
    out[k] = field.neg(field.mul(acc, inv0));
  }
  return out;
}

LaurentSeries::LaurentSeries(FiniteField field, std::int64_t shift,
                             std::vector<Rep> coeffs, std::int64_t precision)
    : field_(std::move(field)),
      shift_(shift),
      coeffs_(std::move(coeffs)),
      precision_(std::min(precision, kExact)) {
  normalize();
}

LaurentSeries LaurentSeries::Constant(const FiniteField& field, Rep c) {
  return LaurentSeries(field, 0, {c}, kExact);
}

LaurentSeries LaurentSeries::Monomial(const FiniteField& field,
                                      std::int64_t k) {
  return LaurentSeries(field, k, {1}, kExact);
}

LaurentSeries LaurentSeries::Parameter(const FiniteField& field,
                                       std::int64_t precision) {
  return LaurentSeries(field, 1, {1}, precision);
}

LaurentSeries LaurentSeries::FromPowerSeries(const FiniteField& field,
                                             const std::vector<Rep>& coeffs,
                                             std::int64_t precision) {
  return LaurentSeries(field, 0, coeffs, precision);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    shift_ = precision_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    shift_ += static_cast<std::int64_t>(lead);
  }
  if (shift_ >= precision_) {
    coeffs_.clear();
    shift_ = precision_;
    return;
  }
  const std::int64_t known = precision_ - shift_;
  if (static_cast<std::int64_t>(coeffs_.size()) > known) {
    coeffs_.resize(static_cast<std::size_t>(known));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return shift_;
}

LaurentSeries::Rep LaurentSeries::coeff(std::int64_t exponent) const {
  if (exponent >= precision_) {
    throw PreconditionError("coefficient of t^" + std::to_string(exponent) +
                            " is beyond the known precision");
  }
  const std::int64_t j = exponent - shift_;
  if (j < 0 || j >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

LaurentSeries LaurentSeries::operator-() const { return scaled(field_.neg(1)); }

LaurentSeries LaurentSeries::scaled(Rep c) const {
  std::vector<Rep> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = field_.mul(coeffs_[i], c);
  }
  return LaurentSeries(field_, shift_, std::move(out), precision_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field_ != b.field_) throw InputError("series over different fields");
  const std::int64_t prec = std::min(a.precision_, b.precision_);
  std::int64_t lo = prec;
  if (!a.coeffs_.empty()) lo = std::min(lo, a.shift_);
  if (!b.coeffs_.empty()) lo = std::min(lo, b.shift_);
  std::int64_t hi = lo;
  auto top = [&](const LaurentSeries& s) {
    if (!s.coeffs_.empty()) {
      hi = std::max(hi, s.shift_ + static_cast<std::int64_t>(s.coeffs_.size()));
    }
  };
  top(a);
  top(b);
  hi = std::min(hi, prec);
  std::vector<FiniteField::Rep> out(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)), 0);
  auto accumulate = [&](const LaurentSeries& s) {
    for (std::size_t j = 0; j < s.coeffs_.size(); ++j) {
      const std::int64_t e = s.shift_ + static_cast<std::int64_t>(j);
      if (e >= hi) break;
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      slot = a.field_.add(slot, s.coeffs_[j]);
    }
  };
  accumulate(a);
  accumulate(b);
  return LaurentSeries(a.field_, lo, std::move(out), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field_ != b.field_) throw InputError("series over different fields");
  // With a = t^sa (A + O(t^ra)) and b = t^sb (B + O(t^rb)), A(0), B(0) != 0,
  // the product is t^{sa+sb} (AB + O(t^min(ra, rb))).
  const std::int64_t ra = a.precision_ - a.shift_;
  const std::int64_t rb = b.precision_ - b.shift_;
  const std::int64_t shift = a.shift_ + b.shift_;
  std::int64_t rel = std::min(ra, rb);
  if (a.is_exact() && b.is_exact()) {
    rel = static_cast<std::int64_t>(a.coeffs_.size() + b.coeffs_.size());
    auto prod = MulSeries(a.field_, a.coeffs_, b.coeffs_,
                          static_cast<std::size_t>(rel));
    return LaurentSeries(a.field_, shift, std::move(prod), LaurentSeries::kExact);
  }
  auto prod = MulSeries(a.field_, a.coeffs_, b.coeffs_,
                        static_cast<std::size_t>(std::max<std::int64_t>(rel, 0)));
  return LaurentSeries(a.field_, shift, std::move(prod), shift + rel);
}

LaurentSeries LaurentSeries::inverse() const {
  if (coeffs_.empty()) {
    throw PreconditionError("cannot invert a series with unknown valuation");
  }
  if (is_exact()) {
    if (coeffs_.size() != 1) {
      throw PreconditionError("inverse of an exact series is not finite");
    }
    return LaurentSeries(field_, -shift_, {field_.inv(coeffs_[0])}, kExact);
  }
  const std::int64_t rel = precision_ - shift_;
  auto inv = InverseSeries(field_, coeffs_, static_cast<std::size_t>(rel));
  return LaurentSeries(field_, -shift_, std::move(inv), -shift_ + rel);
}

LaurentSeries LaurentSeries::truncated(std::int64_t precision) const {
  return LaurentSeries(field_, shift_, coeffs_, std::min(precision, precision_));
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
  std::string out;
  std::size_t shown = 0;
  for (std::size_t j = 0; j < coeffs_.size() && shown < max_terms; ++j) {
    if (coeffs_[j] == 0) continue;
    if (!out.empty()) out += " + ";
    out += field_.format(coeffs_[j]) + "*t^" +
           std::to_string(shift_ + static_cast<std::int64_t>(j));
    ++shown;
  }
  if (out.empty()) out = "0";
  if (!is_exact()) out += " + O(t^" + std::to_string(precision_) + ")";
  return out;
}

}  // namespace weierstrass
