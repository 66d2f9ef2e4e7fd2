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

#ifndef WEIERSTRASS_TRIANGULATION_H_
#define WEIERSTRASS_TRIANGULATION_H_

#include <optional>
#include <string>
#include <vector>

#include "weierstrass/approx_roots.h"
#include "weierstrass/branch.h"
#include "weierstrass/rational.h"
#include "weierstrass/semigroup.h"

namespace weierstrass {

enum class Origin {
  kAmProduct,      // power product of approximate roots
  kIntegralBasis,  // reduced integral-basis element
  kComposite,      // product of table functions
};

std::string OriginName(Origin origin);

// A function together with its pole order v = -order at infinity and the
// leading coefficient of its expansion.
struct ValuedFunction {
  RationalFunction f;
  Value value = 0;
  FiniteField::Rep leading = 1;
  Origin origin = Origin::kComposite;
};

// Evaluates f along the branch and packages it. Throws InconsistencyError
// when f has a zero at infinity (negative value).
ValuedFunction MakeValued(BranchParam& oracle, RationalFunction f,
                          Origin origin);

// Semigroup Gamma with Apéry functions h_0..h_{e-1} and h_e relative to a
// fixed pivot e, so h_i * h_e^l has value a_i + l e. Keeps the approximate
// roots for S_P power products.
class FunctionTable {
 public:
  FunctionTable(const SemigroupAtInfinity& sp, BranchParam& oracle);

  const NumericalSemigroup& semigroup() const { return gamma_; }
  const SemigroupAtInfinity& at_infinity() const { return sp_; }
  const std::vector<ValuedFunction>& apery_functions() const { return h_; }
  const ValuedFunction& pivot_function() const { return h_pivot_; }

  // prod F_k^lambda_k for r in S_P via the telescopic representation.
  ValuedFunction am_product(Value r) const;
  // h_i * h_e^l for r = a_i + l e in Gamma.
  ValuedFunction composite(Value r) const;

  // Adjoins the value of g as a generator; Apéry slots a_j + lambda v that
  // improve a class get h_j g^lambda. Returns the newly covered values,
  // ascending.
  std::vector<Value> adjoin(const ValuedFunction& g);

 private:
  ValuedFunction Product(const std::vector<const ValuedFunction*>& factors,
                         const std::vector<Value>& exponents,
                         Origin origin) const;

  SemigroupAtInfinity sp_;
  FiniteField field_;
  BiPoly curve_;
  NumericalSemigroup gamma_;
  std::vector<ValuedFunction> roots_;  // F_0..F_h with values delta_i
  std::vector<ValuedFunction> h_;
  ValuedFunction h_pivot_;
};

enum class TriangulationMode {
  kFast,        // adjoin whole semigroup closures, stop after s values
  kSequential,  // Gamma^i = S_P plus the values found so far
};

struct ReductionTrace {
  std::size_t basis_index = 0;  // 0-based index into the integral basis
  std::vector<Value> values;    // pole orders visited, first to last
  bool escaped = false;         // final value was outside S
  bool absorbed = false;        // reduced to zero (fast mode only)
  bool skipped = false;         // not processed after early termination
};

struct TriangulationReport {
  std::vector<Value> sp_generators;
  Value sp_genus = 0;
  std::size_t s = 0;
  std::vector<Value> added_values;  // discovery order
  NumericalSemigroup gamma;
  std::vector<ValuedFunction> reduced;  // the g_i whose value escaped
  std::vector<ReductionTrace> traces;
  Value genus = 0;
  TriangulationMode mode = TriangulationMode::kFast;
};

struct TriangulationResult {
  TriangulationReport report;
  FunctionTable table;
};

// g - (lc g / lc f) f for the table function f of the same value; nullopt
// when the difference vanishes on the curve. Throws PreconditionError when
// the value of g is a gap of the table semigroup.
std::optional<ValuedFunction> reduce_step(const ValuedFunction& g,
                                          const FunctionTable& table,
                                          BranchParam& oracle);

// Completes S_P to Gamma_P with the integral basis h_1..h_s (in model
// coordinates). Throws InconsistencyError when the number of added values
// differs from s or a basis element reduces to zero.
TriangulationResult triangulate(const SemigroupAtInfinity& sp,
                                const std::vector<RationalFunction>& basis,
                                BranchParam& oracle,
                                TriangulationMode mode = TriangulationMode::kFast);

// A function with pole order exactly r: the approximate-root power product
// for r in S_P, the Apéry composite otherwise. Throws InputError when r is a
// gap and InconsistencyError when the oracle disagrees.
ValuedFunction function_for(const FunctionTable& table, Value r,
                            BranchParam& oracle);

// One function for each r in Gamma with 0 <= r <= m.
std::vector<ValuedFunction> l_basis(const FunctionTable& table, Value m,
                                    BranchParam& oracle);

}  // namespace weierstrass

#endif  // WEIERSTRASS_TRIANGULATION_H_
