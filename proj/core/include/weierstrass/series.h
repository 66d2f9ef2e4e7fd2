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

#ifndef WEIERSTRASS_SERIES_H_
#define WEIERSTRASS_SERIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weierstrass/field.h"

namespace weierstrass {

// Truncated Laurent series sum_j c_j t^{shift + j}, exact modulo t^precision.
// Kept normalized: either the first stored coefficient is nonzero, or nothing
// is stored and shift == precision (the series is O(t^precision)).
class LaurentSeries {
 public:
  using Rep = FiniteField::Rep;
  // Precision of series that are exact (polynomials in t, t^-1).
  static constexpr std::int64_t kExact = std::int64_t{1} << 40;

  LaurentSeries(FiniteField field, std::int64_t shift, std::vector<Rep> coeffs,
                std::int64_t precision);

  static LaurentSeries Constant(const FiniteField& field, Rep c);
  // t^k exactly.
  static LaurentSeries Monomial(const FiniteField& field, std::int64_t k);
  // t + O(t^precision).
  static LaurentSeries Parameter(const FiniteField& field,
                                 std::int64_t precision);
  // Power series from coefficients of t^0, t^1, ..., exact below precision.
  static LaurentSeries FromPowerSeries(const FiniteField& field,
                                       const std::vector<Rep>& coeffs,
                                       std::int64_t precision);

  const FiniteField& field() const { return field_; }
  std::int64_t precision() const { return precision_; }
  bool is_exact() const { return precision_ >= kExact; }
  // Order in t, when some known coefficient is nonzero.
  std::optional<std::int64_t> valuation() const;
  // Leading coefficient; zero when the valuation is unknown.
  Rep leading() const { return coeffs_.empty() ? 0 : coeffs_.front(); }
  Rep coeff(std::int64_t exponent) const;
  // Coefficients stored from the valuation upward.
  const std::vector<Rep>& coeffs() const { return coeffs_; }
  std::int64_t shift() const { return shift_; }

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a,
                                 const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a,
                                 const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a,
                                 const LaurentSeries& b);
  LaurentSeries scaled(Rep c) const;
  // Throws PreconditionError when the valuation is unknown, or when the
  // series is exact with more than one term (the inverse would be infinite).
  LaurentSeries inverse() const;
  LaurentSeries truncated(std::int64_t precision) const;

  std::string to_string(std::size_t max_terms = 8) const;

 private:
  void normalize();

  FiniteField field_;
  std::int64_t shift_ = 0;
  std::vector<Rep> coeffs_;
  std::int64_t precision_ = kExact;
};

// Inverse of a power series with nonzero constant term, modulo t^n.
std::vector<FiniteField::Rep> InverseSeries(const FiniteField& field,
                                            const std::vector<FiniteField::Rep>& a,
                                            std::size_t n);
// Product modulo t^n.
std::vector<FiniteField::Rep> MulSeries(const FiniteField& field,
                                        const std::vector<FiniteField::Rep>& a,
                                        const std::vector<FiniteField::Rep>& b,
                                        std::size_t n);

}  // namespace weierstrass

#endif  // WEIERSTRASS_SERIES_H_
