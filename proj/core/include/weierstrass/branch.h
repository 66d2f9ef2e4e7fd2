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

#ifndef WEIERSTRASS_BRANCH_H_
#define WEIERSTRASS_BRANCH_H_

#include <cstdint>
#include <vector>

#include "weierstrass/approx_roots.h"
#include "weierstrass/field.h"
#include "weierstrass/poly.h"
#include "weierstrass/rational.h"
#include "weierstrass/series.h"

namespace weierstrass {

// Order in the local parameter t and leading coefficient of a function along
// the branch at infinity. A pole has negative order.
struct Valuation {
  std::int64_t order = 0;
  FieldElement leading;
};

// Parametrization (X(t), Y(t)) of the unique branch at infinity.
//
// The point at infinity is read off the top-degree form of F and moved to
// the origin of a standard affine chart of the projective plane. Blow-ups
// along the (unique) tangent line are then applied until the strict
// transform is smooth, where a Newton iteration solves for one coordinate in
// terms of the other. Mapping back gives X(t), Y(t) as Laurent series.
//
// Refinement mutates the object; use one instance per thread.
class BranchParam {
 public:
  static constexpr std::int64_t kDefaultCeiling = std::int64_t{1} << 16;

  // Throws PreconditionError when the curve has more than one point or
  // branch at infinity, or when they are not defined over the base field.
  // The initial precision defaults to 4 * (deg F)^2 terms.
  static BranchParam Parametrize(const PlaneModel& model,
                                 std::int64_t precision = 0,
                                 std::int64_t ceiling = kDefaultCeiling);

  const PlaneModel& model() const { return model_; }
  std::int64_t precision() const { return precision_; }
  std::int64_t ceiling() const { return ceiling_; }
  void set_ceiling(std::int64_t ceiling) { ceiling_ = ceiling; }

  // Recomputes with at least `precision` terms; known prefixes are kept.
  void refine(std::int64_t precision);

  const LaurentSeries& x() const { return x_; }
  const LaurentSeries& y() const { return y_; }

  // Number of blow-ups before the strict transform became smooth.
  std::size_t blowup_count() const { return steps_.size(); }

  // Evaluates g(X(t), Y(t)) at the current precision.
  LaurentSeries evaluate(const BiPoly& g);

 private:
  struct Step {
    bool keeps_x = true;  // y = x (y1 + alpha); otherwise x = y x1
    FiniteField::Rep alpha = 0;
  };

  explicit BranchParam(PlaneModel model);
  // Chart and blow-up sequence; independent of the precision.
  void Resolve();
  // Series solution and back-substitution at precision_.
  void Solve();

  PlaneModel model_;
  std::int64_t precision_ = 0;
  std::int64_t ceiling_ = kDefaultCeiling;
  // Point at infinity: Y-chart when false, X-chart (with slope a) when true.
  bool x_chart_ = true;
  FiniteField::Rep slope_ = 0;
  std::vector<Step> steps_;
  BiPoly smooth_;
  bool solve_for_y_ = true;  // parameter t is the first local coordinate
  LaurentSeries x_;
  LaurentSeries y_;
  std::vector<LaurentSeries> x_powers_;
};

// Order and leading coefficient of num/den along the branch, refining the
// precision by doubling until the leading term is known. Throws
// PreconditionError("zero function") when num vanishes on the curve or the
// denominator does, and InconsistencyError at the precision ceiling.
Valuation valuation(BranchParam& param, const RationalFunction& f);
Valuation valuation(BranchParam& param, const BiPoly& g);

// deg_X Res_Y(F, g) = -order of g along the branch for a polynomial g prime
// to F. Throws PreconditionError on a common factor.
int valuation_by_resultant(const PlaneModel& model, const BiPoly& g);

}  // namespace weierstrass

#endif  // WEIERSTRASS_BRANCH_H_
