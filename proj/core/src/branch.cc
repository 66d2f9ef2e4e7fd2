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

#include "weierstrass/branch.h"

#include <algorithm>
#include <string>
#include <utility>

#include "weierstrass/errors.h"

namespace weierstrass {

namespace {

using Rep = FiniteField::Rep;
using Coeffs = std::vector<Rep>;

// Root a of p(1, Y) with p = c (Y - a X)^deg, or nullopt when p has another
// shape.
std::optional<Rep> SingleSlope(const BiPoly& p, int deg) {
  const FiniteField& field = p.field();
  const Rep c = p.coeff(0, deg);
  if (c == 0) return std::nullopt;
  // Coefficient of X Y^{deg-1} is -deg c a; when p divides deg search.
  std::optional<Rep> slope;
  const Rep next = p.coeff(1, deg - 1);
  const Rep deg_rep = field.from_int(deg);
  if (deg_rep != 0) {
    slope = field.neg(field.div(next, field.mul(deg_rep, c)));
  } else {
    for (std::uint32_t a = 0; a < field.order(); ++a) {
      if (p.eval(1, a) == 0) {
        slope = a;
        break;
      }
    }
    if (!slope) return std::nullopt;
  }
  const BiPoly line = BiPoly::Y(field) - BiPoly::X(field).scaled(*slope);
  if (line.pow(static_cast<std::uint64_t>(deg)).scaled(c) != p) {
    return std::nullopt;
  }
  return slope;
}

bool IsPureX(const BiPoly& p, int deg) {
  return p.term_count() == 1 && p.coeff(deg, 0) != 0;
}

// sum c_ij a^i b^j modulo t^n for power series a, b.
Coeffs EvalPowerSeries(const BiPoly& g, const Coeffs& a, const Coeffs& b,
                       std::size_t n) {
  const FiniteField& field = g.field();
  const std::vector<UniPoly> ycoeffs = g.YCoeffs();
  std::vector<Coeffs> a_pow{{1}};
  const int dx = std::max(g.deg_x(), 0);
  for (int i = 1; i <= dx; ++i) a_pow.push_back(MulSeries(field, a_pow.back(), a, n));
  auto eval_x = [&](const UniPoly& c) {
    Coeffs out(n, 0);
    for (int i = 0; i <= c.degree(); ++i) {
      const Rep ci = c.coeff(i);
      if (ci == 0) continue;
      const Coeffs& pw = a_pow[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < pw.size() && k < n; ++k) {
        out[k] = field.add(out[k], field.mul(ci, pw[k]));
      }
    }
    return out;
  };
  Coeffs acc(n, 0);
  for (int j = static_cast<int>(ycoeffs.size()) - 1; j >= 0; --j) {
    acc = MulSeries(field, acc, b, n);
    acc.resize(n, 0);
    const Coeffs term = eval_x(ycoeffs[static_cast<std::size_t>(j)]);
    for (std::size_t k = 0; k < n; ++k) acc[k] = field.add(acc[k], term[k]);
  }
  return acc;
}

}  // namespace

BranchParam::BranchParam(PlaneModel model)
    : model_(std::move(model)),
      smooth_(model_.field),
      x_(LaurentSeries::Constant(model_.field, 0)),
      y_(LaurentSeries::Constant(model_.field, 0)) {}

BranchParam BranchParam::Parametrize(const PlaneModel& model,
                                     std::int64_t precision,
                                     std::int64_t ceiling) {
  BranchParam param(model);
  const std::int64_t deg = model.f.total_degree();
  param.ceiling_ = ceiling;
  param.precision_ = precision > 0 ? precision : 4 * deg * deg;
  if (param.precision_ > ceiling) {
    throw InconsistencyError("requested precision " +
                             std::to_string(param.precision_) +
                             " exceeds the ceiling " + std::to_string(ceiling));
  }
  param.Resolve();
  param.Solve();
  return param;
}

void BranchParam::Resolve() {
  const FiniteField& field = model_.field;
  const BiPoly& f = model_.f;
  const int deg = f.total_degree();
  if (deg < 1) throw PreconditionError("constant curve equation");
  const BiPoly top = f.homogeneous_part(deg);

  // Local equation at the point at infinity in variables (first, second),
  // stored as a BiPoly in (X, Y) = (first, second); second is Z in the chart.
  BiPoly local(field);
  if (auto a = SingleSlope(top, deg)) {
    // Chart X = 1 with u = Y/X - a, z = Z/X.
    x_chart_ = true;
    slope_ = *a;
    const BiPoly shifted_u = BiPoly::X(field) + BiPoly::Constant(field, *a);
    std::vector<BiPoly> u_pow{BiPoly::Constant(field, 1)};
    for (int j = 1; j <= deg; ++j) u_pow.push_back(u_pow.back() * shifted_u);
    for (const auto& [e, c] : f.terms()) {
      local += u_pow[static_cast<std::size_t>(e.y)] *
               BiPoly::Monomial(field, c, 0, deg - e.x - e.y);
    }
  } else if (IsPureX(top, deg)) {
    // Chart Y = 1 with x = X/Y, z = Z/Y.
    x_chart_ = false;
    for (const auto& [e, c] : f.terms()) {
      local += BiPoly::Monomial(field, c, e.x, deg - e.x - e.y);
    }
  } else {
    throw PreconditionError(
        "more than one point at infinity, or one not defined over " +
        field.name() + ": top-degree form " + top.to_string());
  }

  // Blow up until smooth. Each step lowers the local intersection data, so a
  // generous cap only guards against inconsistent input.
  const int max_steps = 4 * deg * deg + 16;
  steps_.clear();
  for (int step = 0;; ++step) {
    if (local.constant_term() != 0) {
      throw InconsistencyError("branch left the origin during blow-ups");
    }
    const int mu = local.min_total_degree();
    if (mu == 1) break;
    if (step >= max_steps) {
      throw PreconditionError("blow-up sequence did not terminate");
    }
    const BiPoly cone = local.homogeneous_part(mu);
    if (auto alpha = SingleSlope(cone, mu)) {
      const BiPoly image_y =
          BiPoly::X(field) * (BiPoly::Y(field) + BiPoly::Constant(field, *alpha));
      local = local.substitute(BiPoly::X(field), image_y).shifted(-mu, 0);
      steps_.push_back({true, *alpha});
    } else if (IsPureX(cone, mu)) {
      const BiPoly image_x = BiPoly::X(field) * BiPoly::Y(field);
      local = local.substitute(image_x, BiPoly::Y(field)).shifted(0, -mu);
      steps_.push_back({false, 0});
    } else {
      throw PreconditionError(
          "more than one branch at infinity (tangent cone " + cone.to_string() +
          " after " + std::to_string(step) + " blow-ups)");
    }
  }
  smooth_ = local;
  solve_for_y_ = local.coeff(0, 1) != 0;
}

void BranchParam::Solve() {
  const FiniteField& field = model_.field;
  const std::size_t n = static_cast<std::size_t>(precision_);
  // Solve smooth_(t, s) = 0 (or smooth_(s, t) = 0) for s with s(0) = 0.
  const BiPoly g = solve_for_y_ ? smooth_ : smooth_.swapped_xy();
  const BiPoly gs = g.derivative_y();
  const Coeffs t{0, 1};
  Coeffs s{0};
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    const Coeffs r = EvalPowerSeries(g, t, s, prec);
    const Coeffs d = EvalPowerSeries(gs, t, s, prec);
    const Coeffs step = MulSeries(field, r, InverseSeries(field, d, prec), prec);
    s.resize(prec, 0);
    for (std::size_t k = 0; k < step.size(); ++k) s[k] = field.sub(s[k], step[k]);
  }
  const std::int64_t prec = precision_;
  const LaurentSeries param = LaurentSeries::Parameter(field, prec);
  const LaurentSeries solved = LaurentSeries::FromPowerSeries(field, s, prec);
  LaurentSeries first = solve_for_y_ ? param : solved;
  LaurentSeries second = solve_for_y_ ? solved : param;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it->keeps_x) {
      second = first * (second + LaurentSeries::Constant(field, it->alpha));
    } else {
      first = second * first;
    }
  }
  if (!second.valuation()) {
    // Too few terms to see the pole; retry with twice as many.
    if (2 * precision_ > ceiling_) {
      throw InconsistencyError("series precision ceiling " +
                               std::to_string(ceiling_) +
                               " reached while locating the pole");
    }
    precision_ *= 2;
    Solve();
    return;
  }
  const LaurentSeries z_inv = second.inverse();
  if (x_chart_) {
    x_ = z_inv;
    y_ = (first + LaurentSeries::Constant(field, slope_)) * z_inv;
  } else {
    x_ = first * z_inv;
    y_ = z_inv;
  }
  x_powers_.clear();
}

void BranchParam::refine(std::int64_t precision) {
  if (precision <= precision_) return;
  if (precision > ceiling_) {
    throw InconsistencyError("series precision ceiling " +
                             std::to_string(ceiling_) + " reached");
  }
  precision_ = precision;
  Solve();
}

LaurentSeries BranchParam::evaluate(const BiPoly& g) {
  const FiniteField& field = model_.field;
  const int dx = std::max(g.deg_x(), 0);
  if (x_powers_.empty()) x_powers_.push_back(LaurentSeries::Constant(field, 1));
  while (static_cast<int>(x_powers_.size()) <= dx) {
    x_powers_.push_back(x_powers_.back() * x_);
  }
  const std::vector<UniPoly> ycoeffs = g.YCoeffs();
  LaurentSeries acc = LaurentSeries::Constant(field, 0);
  for (int j = static_cast<int>(ycoeffs.size()) - 1; j >= 0; --j) {
    acc = acc * y_;
    const UniPoly& c = ycoeffs[static_cast<std::size_t>(j)];
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) != 0) {
        acc = acc + x_powers_[static_cast<std::size_t>(i)].scaled(c.coeff(i));
      }
    }
  }
  return acc;
}

Valuation valuation(BranchParam& param, const RationalFunction& f) {
  const BiPoly& curve = param.model().f;
  const BiPoly num = BiPoly::DivModMonicY(f.numerator(), curve).second;
  const BiPoly den = BiPoly::DivModMonicY(f.denominator(), curve).second;
  if (num.is_zero()) {
    throw PreconditionError("zero function: " + f.to_string() +
                            " vanishes on the curve");
  }
  if (den.is_zero()) {
    throw PreconditionError("denominator of " + f.to_string() +
                            " vanishes on the curve");
  }
  for (;;) {
    const LaurentSeries sn = param.evaluate(num);
    const LaurentSeries sd = param.evaluate(den);
    if (sn.valuation() && sd.valuation()) {
      const FiniteField& field = param.model().field;
      return {*sn.valuation() - *sd.valuation(),
              field.element(field.div(sn.leading(), sd.leading()))};
    }
    const std::int64_t next = 2 * param.precision();
    if (next > param.ceiling()) {
      throw InconsistencyError(
          "series precision ceiling " + std::to_string(param.ceiling()) +
          " reached while evaluating " + f.to_string());
    }
    param.refine(next);
  }
}

Valuation valuation(BranchParam& param, const BiPoly& g) {
  return valuation(param, RationalFunction(g));
}

int valuation_by_resultant(const PlaneModel& model, const BiPoly& g) {
  const UniPoly res = ResultantY(model.f, g);
  if (res.is_zero()) {
    throw PreconditionError(g.to_string() +
                            " shares a factor with the curve equation");
  }
  return res.degree();
}

}  // namespace weierstrass
