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

#include <random>

#include <gtest/gtest.h>

#include "weierstrass/errors.h"

namespace weierstrass {
namespace {

TEST(SeriesTest, NormalizesLeadingZeros) {
  const FiniteField f5 = FiniteField::Make(5);
  const LaurentSeries s(f5, -2, {0, 0, 3, 1}, 10);
  EXPECT_EQ(s.valuation(), 0);
  EXPECT_EQ(s.leading(), 3u);
  EXPECT_EQ(s.coeff(1), 1u);
  const LaurentSeries z(f5, 0, {0, 0}, 6);
  EXPECT_FALSE(z.valuation().has_value());
  EXPECT_EQ(z.shift(), 6);
}

TEST(SeriesTest, PrecisionPropagates) {
  const FiniteField f7 = FiniteField::Make(7);
  const LaurentSeries a(f7, -3, {1, 2}, 5);
  const LaurentSeries b(f7, 1, {4}, 8);
  // (t^-3 + ...) * (4t + ...) is known below min(-3 + 8, 1 + 5).
  EXPECT_EQ((a * b).precision(), 5);
  EXPECT_EQ((a + b).precision(), 5);
  EXPECT_EQ((a * b).valuation(), -2);
  EXPECT_EQ((a * b).leading(), 4u);
}

TEST(SeriesTest, InverseOfRandomSeries) {
  std::mt19937_64 rng(41);
  const FiniteField f9 = FiniteField::Make(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FiniteField::Rep> coeffs(20);
    for (auto& c : coeffs) c = static_cast<FiniteField::Rep>(rng() % 9);
    coeffs[0] = 1 + static_cast<FiniteField::Rep>(rng() % 8);
    const std::int64_t shift = static_cast<std::int64_t>(rng() % 7) - 3;
    const LaurentSeries s(f9, shift, coeffs, shift + 20);
    const LaurentSeries product = s * s.inverse();
    EXPECT_EQ(product.valuation(), 0);
    EXPECT_EQ(product.precision(), 20);
    for (std::int64_t k = 0; k < 20; ++k) EXPECT_EQ(product.coeff(k), k == 0 ? 1u : 0u);
  }
}

TEST(SeriesTest, PowerSeriesHelpers) {
  const FiniteField f5 = FiniteField::Make(5);
  // 1 / (1 - t) = 1 + t + t^2 + ...
  const auto inv = InverseSeries(f5, {1, 4}, 6);
  EXPECT_EQ(inv, (std::vector<FiniteField::Rep>{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(MulSeries(f5, inv, {1, 4}, 6),
            (std::vector<FiniteField::Rep>{1, 0, 0, 0, 0, 0}));
}

TEST(SeriesTest, InverseNeedsKnownValuation) {
  const FiniteField f5 = FiniteField::Make(5);
  EXPECT_THROW(LaurentSeries(f5, 0, {}, 4).inverse(), PreconditionError);
  EXPECT_THROW((LaurentSeries::Constant(f5, 1) + LaurentSeries::Monomial(f5, 1)).inverse(),
               PreconditionError);
  EXPECT_EQ(LaurentSeries::Monomial(f5, 3).inverse().valuation(), -3);
}

}  // namespace
}  // namespace weierstrass
