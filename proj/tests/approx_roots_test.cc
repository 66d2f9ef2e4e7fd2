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

#include "weierstrass/approx_roots.h"

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "weierstrass/errors.h"
#include "weierstrass/poly_text.h"

namespace weierstrass {
namespace {

TEST(NormalizeDegreeTest, GoldenSubstitution) {
  const PlaneModel model = testing::GoldenModel();
  ASSERT_TRUE(model.substitution_k.has_value());
  EXPECT_EQ(*model.substitution_k, 3);
  EXPECT_EQ(model.m, 9);
  EXPECT_EQ(model.n, 3);
  EXPECT_EQ(model.f, model.original.substitute_x_plus_y_power(3));
  EXPECT_EQ(model.to_original(model.to_model(BiPoly::X(model.field))),
            BiPoly::X(model.field));
}

TEST(NormalizeDegreeTest, HypothesisHFailure) {
  const FiniteField f2 = FiniteField::Make(2);
  try {
    normalize_degree(ParseBiPoly(f2, "Y^8+Y+X^10+X^3"));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("hypothesis (H)"), std::string::npos);
  }
}

TEST(NormalizeDegreeTest, NoSubstitutionWhenPrime) {
  const FiniteField f5 = FiniteField::Make(5);
  const PlaneModel model = normalize_degree(ParseBiPoly(f5, "2*Y^2+2*X^3"));
  EXPECT_FALSE(model.substitution_k.has_value());
  EXPECT_EQ(model.f, ParseBiPoly(f5, "Y^2+X^3"));
  EXPECT_THROW(normalize_degree(ParseBiPoly(f5, "X*Y^2+1")), PreconditionError);
}

TEST(ApproximateRootTest, SmallCase) {
  const FiniteField f7 = FiniteField::Make(7);
  EXPECT_EQ(approximate_root(ParseBiPoly(f7, "Y^2+3*Y+X"), 2), ParseBiPoly(f7, "Y+5"));
  EXPECT_THROW(approximate_root(ParseBiPoly(f7, "Y^3+X"), 2), PreconditionError);
  EXPECT_THROW(approximate_root(ParseBiPoly(f7, "Y^7+X"), 7), PreconditionError);
}

// Defining property: G monic of degree m/d with deg_Y(F - G^d) < m - m/d.
TEST(ApproximateRootTest, DefiningPropertyOnRandomPolynomials) {
  std::mt19937_64 rng(21);
  const FiniteField f5 = FiniteField::Make(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = trial % 2 == 0 ? 6 : 4;
    const BiPoly f = BiPoly::Monomial(f5, 1, 0, m) + testing::RandomBiPoly(rng, f5, 4, m - 1);
    for (int d : {2, 3, 6, 4}) {
      if (m % d != 0) continue;
      const BiPoly g = approximate_root(f, d);
      EXPECT_EQ(g.deg_y(), m / d);
      EXPECT_TRUE(g.is_monic_in_y());
      EXPECT_LT((f - g.pow(static_cast<unsigned>(d))).deg_y(), m - m / d);
    }
  }
}

TEST(AMSequenceTest, Golden) {
  const AMSequence seq = am_sequence(testing::GoldenModel());
  EXPECT_EQ(seq.h, 2);
  EXPECT_EQ(seq.delta, (std::vector<int>{9, 3, 8}));
  EXPECT_EQ(seq.d, (std::vector<int>{9, 3, 1}));
  EXPECT_EQ(seq.nseq, (std::vector<int>{3, 3}));
  ASSERT_EQ(seq.roots.size(), 3u);
  EXPECT_EQ(FormatBiPoly(seq.roots[2]), "Y^3 + Y^2 + Y + X + 1");
  EXPECT_TRUE(one_branch_criterion(seq).one_branch);
  const SemigroupAtInfinity sp = semigroup_at_infinity(seq);
  EXPECT_EQ(sp.generators, (std::vector<Value>{9, 3, 8}));
  EXPECT_EQ(sp.semigroup.pivot(), 9);
  EXPECT_EQ(sp.semigroup.genus(), 7);
}

TEST(AMSequenceTest, Cusp) {
  const FiniteField f5 = FiniteField::Make(5);
  const AMSequence seq = am_sequence(normalize_degree(ParseBiPoly(f5, "Y^2+X^3")));
  EXPECT_EQ(seq.h, 1);
  EXPECT_EQ(seq.delta, (std::vector<int>{2, 3}));
  EXPECT_TRUE(one_branch_criterion(seq).one_branch);
}

TEST(AMSequenceTest, Line) {
  const FiniteField f3 = FiniteField::Make(3);
  const AMSequence seq = am_sequence(normalize_degree(ParseBiPoly(f3, "Y-X")));
  EXPECT_EQ(seq.h, 0);
  EXPECT_TRUE(one_branch_criterion(seq).one_branch);
  EXPECT_EQ(semigroup_at_infinity(seq).semigroup.genus(), 0);
}

TEST(AMSequenceTest, TwoBranchesFailCriterion) {
  const FiniteField f5 = FiniteField::Make(5);
  const AMSequence seq =
      am_sequence(normalize_degree(ParseBiPoly(f5, "(Y-X)(Y-2X)+1")));
  const BranchVerdict v = one_branch_criterion(seq);
  EXPECT_FALSE(v.one_branch);
  EXPECT_FALSE(v.reason.empty());
  EXPECT_THROW(semigroup_at_infinity(seq), PreconditionError);
}

// AM property: the n_i delta_i decrease and the generators are telescopic
// whenever the criterion passes.
TEST(AMSequenceTest, CriterionImpliesTelescopic) {
  std::mt19937_64 rng(22);
  const FiniteField f7 = FiniteField::Make(7);
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly f = ParseBiPoly(f7, "Y^6+X^4") + testing::RandomBiPoly(rng, f7, 2, 3);
    const PlaneModel model = normalize_degree(f);
    const AMSequence seq = am_sequence(model);
    if (!one_branch_criterion(seq).one_branch) continue;
    ++accepted;
    std::vector<Value> gens(seq.delta.begin(), seq.delta.end());
    EXPECT_TRUE(is_telescopic(gens)) << FormatBiPoly(f);
    for (int i = 1; i < seq.h; ++i) {
      EXPECT_GT(seq.nseq[i - 1] * seq.delta[i], seq.delta[i + 1]);
    }
  }
  EXPECT_GT(accepted, 0);
}

}  // namespace
}  // namespace weierstrass
