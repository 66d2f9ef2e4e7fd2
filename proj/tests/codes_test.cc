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

#include "weierstrass/codes.h"

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "weierstrass/errors.h"
#include "weierstrass/poly_text.h"

namespace weierstrass {
namespace {

class GoldenCode : public ::testing::Test {
 protected:
  GoldenCode()
      : model_(testing::GoldenModel()),
        oracle_(BranchParam::Parametrize(model_)),
        result_(triangulate(semigroup_at_infinity(am_sequence(model_)),
                            testing::GoldenBasis(model_.field), oracle_)) {}

  EvaluationSet Points(std::uint32_t k) {
    return enumerate_points(model_, result_.table, FiniteField::Make(2, k));
  }

  PlaneModel model_;
  BranchParam oracle_;
  TriangulationResult result_;
};

TEST_F(GoldenCode, PointsOverGF8) {
  const EvaluationSet pts = Points(3);
  EXPECT_EQ(pts.points.size(), 6u);
  EXPECT_EQ(pts.singular_excluded, 2u);
  EXPECT_EQ(pts.pole_excluded, 0u);
  for (Point p : pts.points) EXPECT_EQ(model_.f.eval(pts.field, p.x, p.y), 0u);
}

TEST_F(GoldenCode, ParametersOverGF8) {
  const CodeSpec spec = build_code(result_.table, Points(3), 5, oracle_);
  EXPECT_EQ(spec.n, 6u);
  EXPECT_EQ(spec.rank, 3u);
  EXPECT_EQ(spec.k, 3u);
  EXPECT_EQ(spec.d_star, 1);
  EXPECT_EQ(spec.m_prime, 6);
  EXPECT_EQ(spec.feng_rao_bound, 3);
  EXPECT_EQ(spec.row_values, (std::vector<Value>{0, 3, 4}));
  const auto d = minimum_distance(spec);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, 3u);
  EXPECT_GE(static_cast<Value>(*d), spec.feng_rao_bound);
}

// rank = m + 1 - g and k = n - m + g - 1 for 2g - 2 < m < n.
TEST_F(GoldenCode, RiemannRochOverGF64) {
  const EvaluationSet pts = Points(6);
  ASSERT_EQ(pts.points.size(), 108u);
  const Value g = result_.report.genus;
  for (Value m = 2 * g - 1; m <= 40; ++m) {
    const CodeSpec spec = build_code(result_.table, pts, m, oracle_);
    EXPECT_EQ(static_cast<Value>(spec.rank), m + 1 - g) << m;
    EXPECT_EQ(static_cast<Value>(spec.k), 108 - m + g - 1) << m;
  }
  EXPECT_THROW(minimum_distance(build_code(result_.table, pts, 10, oracle_)),
               PreconditionError);
}

TEST_F(GoldenCode, DualBasisAndSyndromes) {
  const CodeSpec spec = build_code(result_.table, Points(3), 5, oracle_);
  const Matrix dual = dual_basis(spec);
  ASSERT_EQ(dual.size(), spec.k);
  EXPECT_EQ(matrix_rank(spec.field, dual), spec.k);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FiniteField::Rep> word(spec.n, 0);
    for (const auto& row : dual) {
      const FiniteField::Rep c = static_cast<FiniteField::Rep>(rng() % 8);
      for (std::size_t j = 0; j < spec.n; ++j) {
        word[j] = spec.field.add(word[j], spec.field.mul(c, row[j]));
      }
    }
    EXPECT_TRUE(is_codeword(spec, word));
    word[trial % spec.n] = spec.field.add(word[trial % spec.n], 1);
    EXPECT_FALSE(is_codeword(spec, word));
    // Row 0 is the constant function, so s_{i,0} = s_i.
    const auto s = known_syndromes(spec, word);
    const Matrix s2 = bidimensional_syndromes(spec, word);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s2[i][0], s[i]);
  }
  EXPECT_THROW(known_syndromes(spec, {1, 2}), InputError);
}

TEST_F(GoldenCode, ImprovedCodeUsesSp) {
  const CodeSpec spec = build_code(result_.table, Points(3), 5, oracle_, true);
  EXPECT_TRUE(spec.improved);
  EXPECT_EQ(spec.row_values, (std::vector<Value>{0, 3}));
  for (const RationalFunction& f : spec.row_functions) EXPECT_TRUE(f.is_polynomial());
}

TEST_F(GoldenCode, RejectsNonEmbeddingField) {
  const FiniteField f4 = FiniteField::Make(2, 2);
  const PlaneModel other = normalize_degree(ParseBiPoly(f4, "Y^2+Y+X^3"));
  EXPECT_THROW(enumerate_points(other, FiniteField::Make(2, 3), {}), InputError);
}

TEST(DistanceTableTest, Invariants) {
  const NumericalSemigroup gamma = NumericalSemigroup::FromGenerators({3, 4});
  const Value g = gamma.genus();
  const auto rows = distance_bound_table(gamma, 0, 30);
  for (const DistanceRow& row : rows) {
    EXPECT_TRUE(gamma.contains(row.m));
    EXPECT_EQ(row.d_star_prev, row.m + 1 - 2 * g);
    EXPECT_GE(row.delta_fr, row.d_star_prev);
    EXPECT_EQ(row.gain, row.delta_fr - row.d_star_prev);
    EXPECT_EQ(row.t_corr, (row.delta_fr - 1) / 2);
    if (row.m >= 4 * g - 1) EXPECT_EQ(row.gain, 0);
  }
  EXPECT_EQ(rows.size(), gamma.elements_up_to(30).size());
}

}  // namespace
}  // namespace weierstrass
