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

#include <numeric>
#include <string>

#include "weierstrass/errors.h"

namespace weierstrass {

namespace {

constexpr int kMaxSubstitutionSearch = 256;

BiPoly Monicized(const BiPoly& f) {
  const UniPoly lead = f.leading_y_coeff();
  if (lead.degree() != 0) {
    throw PreconditionError("leading coefficient in Y of " + f.to_string() +
                            " is not a nonzero constant");
  }
  return f.scaled(f.field().inv(lead.coeff(0)));
}

}  // namespace

BiPoly PlaneModel::to_model(const BiPoly& g) const {
  if (!substitution_k) return g;
  return g.substitute_x_plus_y_power(*substitution_k);
}

BiPoly PlaneModel::to_original(const BiPoly& g) const {
  if (!substitution_k) return g;
  return g.substitute_x_plus_y_power(*substitution_k,
                                     field.neg(FiniteField::one()));
}

bool PlaneModel::hypothesis_h() const {
  const int p = static_cast<int>(field.characteristic());
  return m % p != 0 || n % p != 0;
}

BiPoly approximate_root(const BiPoly& f, int d) {
  const FiniteField& field = f.field();
  if (!f.is_monic_in_y()) {
    throw PreconditionError("approximate root needs F monic in Y");
  }
  const int m = f.deg_y();
  if (d <= 0 || m % d != 0) {
    throw PreconditionError(std::to_string(d) + " does not divide deg_Y F = " +
                            std::to_string(m));
  }
  if (d % static_cast<int>(field.characteristic()) == 0) {
    throw PreconditionError(std::to_string(d) +
                            " is not a unit: the characteristic divides it");
  }
  if (d == 1) return f;
  const int e = m / d;
  const FiniteField::Rep inv_d = field.inv(field.from_int(d));
  BiPoly g = BiPoly::Monomial(field, 1, 0, e);
  // The Y^{m-j} coefficient of G^d is d * c_j plus terms in c_1..c_{j-1}.
  for (int j = 1; j <= e; ++j) {
    const BiPoly diff = f - g.pow(static_cast<std::uint64_t>(d));
    const std::vector<UniPoly> coeffs = diff.YCoeffs();
    const int idx = m - j;
    if (idx < static_cast<int>(coeffs.size()) && !coeffs[idx].is_zero()) {
      g += BiPoly::FromX(coeffs[idx].scaled(inv_d)).shifted(0, e - j);
    }
  }
  return g;
}

PlaneModel normalize_degree(const BiPoly& input) {
  if (input.deg_y() < 1) {
    throw PreconditionError("the equation must involve Y: " +
                            input.to_string());
  }
  const FiniteField& field = input.field();
  const int p = static_cast<int>(field.characteristic());
  PlaneModel model{field, input, Monicized(input), 0, 0, std::nullopt};
  model.m = model.f.deg_y();
  model.n = std::max(model.f.deg_x(), 0);
  const bool p_divides_m = model.m % p == 0;
  const bool p_divides_n = model.n % p == 0;
  if (p_divides_m && p_divides_n) {
    throw PreconditionError(
        "hypothesis (H) fails: the characteristic " + std::to_string(p) +
        " divides both m = " + std::to_string(model.m) + " and n = " +
        std::to_string(model.n));
  }
  if (!p_divides_m) return model;

  for (int k = 1; k <= kMaxSubstitutionSearch; ++k) {
    if (k % p == 0 || model.n * k <= model.m) continue;
    const BiPoly g = model.f.substitute_x_plus_y_power(k);
    if (g.leading_y_coeff().degree() != 0) continue;
    if (g.deg_y() % p == 0) continue;
    model.f = Monicized(g);
    model.m = model.f.deg_y();
    model.n = std::max(model.f.deg_x(), 0);
    model.substitution_k = k;
    return model;
  }
  throw PreconditionError("no substitution X <- X + Y^k makes deg_Y prime to "
                          "the characteristic");
}

AMSequence am_sequence(const PlaneModel& model) {
  const BiPoly& f = model.f;
  const FiniteField& field = model.field;
  if (!f.is_monic_in_y()) {
    throw PreconditionError("model equation is not monic in Y");
  }
  if (f.coeff(0, 0) == 0) {
    bool y_divides = true;
    for (const auto& [e, c] : f.terms()) {
      if (e.y == 0) {
        y_divides = false;
        break;
      }
    }
    if (y_divides) throw PreconditionError("Y divides F");
  }
  const int p = static_cast<int>(field.characteristic());
  if (model.m % p == 0) {
    throw PreconditionError("the characteristic divides m = " +
                            std::to_string(model.m));
  }
  // Loop state, with i running from 2. kZeroDegree marks -infinity.
  std::vector<int> d{model.m};
  std::vector<int> delta{model.m};
  std::vector<BiPoly> roots{BiPoly::X(field), BiPoly::Y(field)};
  delta.push_back(ResultantDegreeX(f, roots[1]));
  for (;;) {
    const int prev_d = d.back();
    const int prev_delta = delta.back();
    const int di = prev_delta == UniPoly::kZeroDegree
                       ? prev_d
                       : std::gcd(prev_d, prev_delta);
    if (di == prev_d) break;
    d.push_back(di);
    roots.push_back(approximate_root(f, di));
    delta.push_back(ResultantDegreeX(f, roots.back()));
  }
  // Stopped at i with d_i = d_{i-1}, so h = i - 2 and d holds d_1..d_{i-1}.
  AMSequence seq;
  seq.h = static_cast<int>(d.size()) - 1;
  seq.d = d;
  seq.delta.assign(delta.begin(), delta.begin() + seq.h + 1);
  seq.roots.assign(roots.begin(), roots.begin() + seq.h + 1);
  for (int i = 1; i <= seq.h; ++i) seq.nseq.push_back(d[i - 1] / d[i]);
  return seq;
}

BranchVerdict one_branch_criterion(const AMSequence& seq) {
  const int h = seq.h;
  if (seq.d.back() != 1) {
    return {false, "d_{h+1} = " + std::to_string(seq.d.back()) + " != 1"};
  }
  if (h <= 1) return {true, ""};
  for (int i = 1; i < h; ++i) {
    const long long lhs = 1LL * seq.delta[i] * seq.d[i - 1];
    const long long rhs = 1LL * seq.delta[i + 1] * seq.d[i];
    if (lhs <= rhs) {
      return {false, "delta_" + std::to_string(i) + " d_" + std::to_string(i) +
                         " = " + std::to_string(lhs) + " <= delta_" +
                         std::to_string(i + 1) + " d_" + std::to_string(i + 1) +
                         " = " + std::to_string(rhs)};
    }
  }
  for (int i = 1; i <= h; ++i) {
    // <delta_0..delta_{i-1}> has gcd d_i; test membership after scaling.
    const Value di = seq.d[i - 1];
    std::vector<Value> scaled;
    for (int k = 0; k < i; ++k) scaled.push_back(seq.delta[k] / di);
    const Value target = Value{seq.nseq[i - 1]} * seq.delta[i];
    const auto s = NumericalSemigroup::FromGenerators(scaled);
    if (target % di != 0 || !s.contains(target / di)) {
      return {false, "n_" + std::to_string(i) + " delta_" + std::to_string(i) +
                         " = " + std::to_string(target) +
                         " is not in the semigroup generated by delta_0..delta_" +
                         std::to_string(i - 1)};
    }
  }
  return {true, ""};
}

SemigroupAtInfinity semigroup_at_infinity(const AMSequence& seq) {
  const BranchVerdict verdict = one_branch_criterion(seq);
  if (!verdict.one_branch) {
    throw PreconditionError("not one branch at infinity: " + verdict.reason);
  }
  std::vector<Value> gens(seq.delta.begin(), seq.delta.end());
  TelescopicStructure t = TelescopicStructure::FromGenerators(gens);
  for (int i = 2; i <= seq.h; ++i) {
    if (t.n(i) <= 1) throw InconsistencyError("n_i = 1 for some i >= 2");
  }
  NumericalSemigroup s = NumericalSemigroup::FromGenerators(gens, gens[0]);
  return {gens, std::move(t), std::move(s), seq.roots};
}

}  // namespace weierstrass
