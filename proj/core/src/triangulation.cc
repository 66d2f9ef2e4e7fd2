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

#include "weierstrass/triangulation.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "weierstrass/errors.h"

namespace weierstrass {

namespace {

// Replaces the numerator by its remainder modulo F (the same function on the
// curve); returns nullopt when the function vanishes on the curve.
std::optional<RationalFunction> ReduceOnCurve(const RationalFunction& f,
                                              const BiPoly& curve) {
  BiPoly num = BiPoly::DivModMonicY(f.numerator(), curve).second;
  if (num.is_zero()) return std::nullopt;
  return RationalFunction(std::move(num), f.denominator());
}

std::optional<ValuedFunction> Subtract(const ValuedFunction& g,
                                       const ValuedFunction& f,
                                       BranchParam& oracle) {
  const FiniteField& field = oracle.model().field;
  const FiniteField::Rep c = field.div(g.leading, f.leading);
  auto diff = ReduceOnCurve(g.f - f.f.scaled(c), oracle.model().f);
  if (!diff) return std::nullopt;
  ValuedFunction out = MakeValued(oracle, std::move(*diff), g.origin);
  if (out.value >= g.value) {
    throw InconsistencyError("leading terms did not cancel at value " +
                             std::to_string(g.value));
  }
  return out;
}

}  // namespace

std::string OriginName(Origin origin) {
  switch (origin) {
    case Origin::kAmProduct:
      return "am-product";
    case Origin::kIntegralBasis:
      return "integral-basis";
    case Origin::kComposite:
      return "composite";
  }
  return "unknown";
}

ValuedFunction MakeValued(BranchParam& oracle, RationalFunction f,
                          Origin origin) {
  const Valuation v = valuation(oracle, f);
  if (v.order > 0) {
    throw InconsistencyError(f.to_string() +
                             " vanishes at infinity; it is not integral over "
                             "the affine coordinate ring");
  }
  return {std::move(f), -v.order, v.leading.rep(), origin};
}

FunctionTable::FunctionTable(const SemigroupAtInfinity& sp,
                             BranchParam& oracle)
    : sp_(sp),
      field_(oracle.model().field),
      curve_(oracle.model().f),
      gamma_(sp.semigroup.WithPivot(sp.semigroup.multiplicity())),
      h_pivot_{RationalFunction::Constant(oracle.model().field, 1), 0, 1,
               Origin::kAmProduct} {
  for (std::size_t k = 0; k < sp.functions.size(); ++k) {
    ValuedFunction root =
        MakeValued(oracle, RationalFunction(sp.functions[k]), Origin::kAmProduct);
    if (root.value != sp.generators[k]) {
      throw InconsistencyError(
          "approximate root F_" + std::to_string(k) + " has pole order " +
          std::to_string(root.value) + ", expected " +
          std::to_string(sp.generators[k]));
    }
    roots_.push_back(std::move(root));
  }
  for (Value i = 0; i < gamma_.pivot(); ++i) {
    h_.push_back(am_product(gamma_.apery(i)));
  }
  h_pivot_ = am_product(gamma_.pivot());
}

ValuedFunction FunctionTable::Product(
    const std::vector<const ValuedFunction*>& factors,
    const std::vector<Value>& exponents, Origin origin) const {
  RationalFunction f = RationalFunction::Constant(field_, 1);
  Value value = 0;
  FiniteField::Rep leading = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (exponents[k] == 0) continue;
    const ValuedFunction& base = *factors[k];
    f = f * base.f.pow(static_cast<unsigned>(exponents[k]));
    value += exponents[k] * base.value;
    leading = field_.mul(leading,
                         field_.pow(base.leading,
                                    static_cast<std::uint64_t>(exponents[k])));
  }
  auto reduced = ReduceOnCurve(f, curve_);
  if (!reduced) throw InconsistencyError("product vanishes on the curve");
  return {std::move(*reduced), value, leading, origin};
}

ValuedFunction FunctionTable::am_product(Value r) const {
  const std::vector<Value> lambda = telescopic_repr(sp_.telescopic, r);
  std::vector<const ValuedFunction*> factors;
  for (const auto& root : roots_) factors.push_back(&root);
  return Product(factors, lambda, Origin::kAmProduct);
}

ValuedFunction FunctionTable::composite(Value r) const {
  const AperyCoordinates c = gamma_.coordinates(r);
  const ValuedFunction& hi = h_[static_cast<std::size_t>(c.i)];
  if (c.l == 0) return hi;
  ValuedFunction out = Product({&hi, &h_pivot_}, {1, c.l}, Origin::kComposite);
  if (hi.origin == Origin::kAmProduct && h_pivot_.origin == Origin::kAmProduct) {
    out.origin = Origin::kAmProduct;
  }
  return out;
}

std::vector<Value> FunctionTable::adjoin(const ValuedFunction& g) {
  const Value b = g.value;
  if (b <= 0) throw InputError("adjoined value must be positive");
  if (gamma_.contains(b)) return {};
  const Value e = gamma_.pivot();
  std::vector<ValuedFunction> updated = h_;
  std::vector<Value> best = gamma_.apery();
  for (Value j = 0; j < e; ++j) {
    for (Value lambda = 1; lambda < e; ++lambda) {
      const Value cand = gamma_.apery(j) + lambda * b;
      const std::size_t slot = static_cast<std::size_t>(cand % e);
      if (cand < best[slot]) {
        best[slot] = cand;
        updated[slot] = Product({&h_[static_cast<std::size_t>(j)], &g},
                                {1, lambda}, Origin::kComposite);
        if (j == 0 && lambda == 1) updated[slot] = g;
      }
    }
  }
  const NumericalSemigroup next = weierstrass::adjoin(gamma_, b);
  if (next.apery() != best) {
    throw InconsistencyError("function table and semigroup adjoin disagree");
  }
  std::vector<Value> covered;
  for (Value x = 0; x < gamma_.conductor(); ++x) {
    if (next.contains(x) && !gamma_.contains(x)) covered.push_back(x);
  }
  gamma_ = next;
  h_ = std::move(updated);
  return covered;
}

std::optional<ValuedFunction> reduce_step(const ValuedFunction& g,
                                          const FunctionTable& table,
                                          BranchParam& oracle) {
  if (!table.semigroup().contains(g.value)) {
    throw PreconditionError("value " + std::to_string(g.value) +
                            " is a gap of the table semigroup");
  }
  return Subtract(g, table.composite(g.value), oracle);
}

TriangulationResult triangulate(const SemigroupAtInfinity& sp,
                                const std::vector<RationalFunction>& basis,
                                BranchParam& oracle, TriangulationMode mode) {
  FunctionTable table(sp, oracle);
  const FunctionTable sp_table = table;
  TriangulationReport report{sp.generators,
                             sp.semigroup.genus(),
                             basis.size(),
                             {},
                             table.semigroup(),
                             {},
                             {},
                             0,
                             mode};
  const std::size_t s = basis.size();

  // Sequential mode: values of S_P plus the values found so far.
  std::map<Value, ValuedFunction> found;
  auto in_current = [&](Value v) {
    if (mode == TriangulationMode::kFast) return table.semigroup().contains(v);
    return sp.semigroup.contains(v) || found.count(v) > 0;
  };
  auto function_of = [&](Value v) -> ValuedFunction {
    if (mode == TriangulationMode::kFast) return table.composite(v);
    if (sp.semigroup.contains(v)) return sp_table.am_product(v);
    return found.at(v);
  };

  for (std::size_t i = 0; i < s; ++i) {
    ReductionTrace trace{i, {}, false, false, false};
    if (report.added_values.size() == s) {
      trace.skipped = true;
      report.traces.push_back(std::move(trace));
      continue;
    }
    auto start = ReduceOnCurve(basis[i], oracle.model().f);
    if (!start) {
      throw InconsistencyError("integral basis inconsistent: h_" +
                               std::to_string(i + 1) + " vanishes on the curve");
    }
    ValuedFunction g = MakeValued(oracle, *start, Origin::kIntegralBasis);
    trace.values.push_back(g.value);
    while (in_current(g.value)) {
      auto next = Subtract(g, function_of(g.value), oracle);
      if (!next) break;
      g = std::move(*next);
      trace.values.push_back(g.value);
    }
    if (in_current(g.value)) {
      // Reduced to zero. With products available this only says h_i lies in
      // the algebra generated so far; in the linear setting it contradicts
      // the independence of the basis.
      if (mode == TriangulationMode::kSequential) {
        throw InconsistencyError(
            "integral basis inconsistent: h_" + std::to_string(i + 1) +
            " reduces to zero modulo the span of the others");
      }
      trace.absorbed = true;
      report.traces.push_back(std::move(trace));
      continue;
    }
    trace.escaped = true;
    report.traces.push_back(std::move(trace));
    report.reduced.push_back(g);
    if (mode == TriangulationMode::kFast) {
      const std::vector<Value> covered = table.adjoin(g);
      report.added_values.insert(report.added_values.end(), covered.begin(),
                                 covered.end());
    } else {
      found.emplace(g.value, g);
      report.added_values.push_back(g.value);
    }
    if (report.added_values.size() > s) {
      throw InconsistencyError(
          "integral basis inconsistent: more than s = " + std::to_string(s) +
          " values added");
    }
  }
  if (report.added_values.size() != s) {
    throw InconsistencyError("integral basis inconsistent: " +
                             std::to_string(report.added_values.size()) +
                             " values added, expected s = " + std::to_string(s));
  }
  if (mode == TriangulationMode::kSequential) {
    for (const ValuedFunction& g : report.reduced) table.adjoin(g);
    std::set<Value> expected(report.added_values.begin(),
                             report.added_values.end());
    for (Value x = 0; x < table.semigroup().conductor(); ++x) {
      const bool in_union = sp.semigroup.contains(x) || expected.count(x) > 0;
      if (table.semigroup().contains(x) != in_union) {
        throw InconsistencyError(
            "S_P together with the added values is not a semigroup");
      }
    }
  }
  report.gamma = table.semigroup();
  report.genus = report.gamma.genus();
  if (report.genus != report.sp_genus - static_cast<Value>(s)) {
    throw InconsistencyError("genus of Gamma_P differs from g(S_P) - s");
  }
  return {std::move(report), std::move(table)};
}

ValuedFunction function_for(const FunctionTable& table, Value r,
                            BranchParam& oracle) {
  if (!table.semigroup().contains(r)) {
    throw InputError(std::to_string(r) + " is a gap of Gamma_P");
  }
  ValuedFunction out = table.at_infinity().semigroup.contains(r)
                           ? table.am_product(r)
                           : table.composite(r);
  const Valuation v = valuation(oracle, out.f);
  if (-v.order != r || v.leading.rep() != out.leading) {
    throw InconsistencyError("function for " + std::to_string(r) +
                             " has pole order " + std::to_string(-v.order));
  }
  return out;
}

std::vector<ValuedFunction> l_basis(const FunctionTable& table, Value m,
                                    BranchParam& oracle) {
  std::vector<ValuedFunction> out;
  for (Value r = 0; r <= m; ++r) {
    if (table.semigroup().contains(r)) out.push_back(function_for(table, r, oracle));
  }
  return out;
}

}  // namespace weierstrass
