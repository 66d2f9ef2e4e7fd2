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

#include "weierstrass/poly.h"

#include <algorithm>

#include "weierstrass/errors.h"

namespace weierstrass {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(FiniteField field, char var)
    : field_(std::move(field)), var_(var) {}

UniPoly::UniPoly(FiniteField field, std::vector<Rep> coeffs, char var)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

UniPoly UniPoly::Constant(const FiniteField& field, Rep c, char var) {
  return UniPoly(field, {c}, var);
}

UniPoly UniPoly::Monomial(const FiniteField& field, Rep c, int degree,
                          char var) {
  std::vector<Rep> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return UniPoly(field, std::move(coeffs), var);
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = field_.neg(c);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), 0);
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), 0);
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = field_.sub(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_, a.var_);
  const auto& f = a.field_;
  std::vector<UniPoly::Rep> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return UniPoly(f, std::move(out), a.var_);
}

UniPoly UniPoly::scaled(Rep c) const {
  UniPoly out = *this;
  for (auto& x : out.coeffs_) x = field_.mul(x, c);
  out.trim();
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = Constant(field_, 1, var_);
  UniPoly base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rep> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i)),
                             coeffs_[i]));
  }
  return UniPoly(field_, std::move(out), var_);
}

std::pair<UniPoly, UniPoly> UniPoly::DivMod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const auto& f = a.field_;
  UniPoly rem = a;
  if (a.degree() < b.degree()) return {UniPoly(f, a.var_), rem};
  std::vector<Rep> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                        0);
  const Rep lead_inv = f.inv(b.leading());
  const int db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Rep factor = f.mul(rem.leading(), lead_inv);
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= db; ++i) {
      auto& c = rem.coeffs_[static_cast<std::size_t>(shift + i)];
      c = f.sub(c, f.mul(factor, b.coeffs_[static_cast<std::size_t>(i)]));
    }
    rem.trim();
  }
  return {UniPoly(f, std::move(quot), a.var_), rem};
}

UniPoly UniPoly::ExactDiv(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = DivMod(a, b);
  if (!r.is_zero()) throw InconsistencyError("inexact polynomial division");
  return q;
}

UniPoly UniPoly::Gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = DivMod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly::Rep UniPoly::eval(Rep x) const {
  Rep acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  }
  return acc;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool ext = !field_.is_prime_field();
    const std::string c = field_.format(coeffs_[i]);
    if (i == 0) {
      out += ext && coeffs_[i] >= field_.characteristic() ? "[" + c + "]" : c;
      continue;
    }
    if (coeffs_[i] != 1) {
      out += ext && coeffs_[i] >= field_.characteristic() ? "[" + c + "]" : c;
      out += '*';
    }
    out += var_;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(FiniteField field) : field_(std::move(field)) {}

BiPoly::BiPoly(FiniteField field, Terms terms)
    : field_(std::move(field)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BiPoly BiPoly::Constant(const FiniteField& field, Rep c) {
  return Monomial(field, c, 0, 0);
}

BiPoly BiPoly::Monomial(const FiniteField& field, Rep c, int x_deg,
                        int y_deg) {
  BiPoly out(field);
  if (c != 0) out.terms_[{x_deg, y_deg}] = c;
  return out;
}

BiPoly BiPoly::FromYCoeffs(const FiniteField& field,
                           const std::vector<UniPoly>& coeffs) {
  BiPoly out(field);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) {
        out.terms_[{static_cast<int>(i), static_cast<int>(j)}] = c[i];
      }
    }
  }
  return out;
}

BiPoly BiPoly::FromX(const UniPoly& p) {
  return FromYCoeffs(p.field(), {p});
}

bool BiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

BiPoly::Rep BiPoly::coeff(int x_deg, int y_deg) const {
  auto it = terms_.find({x_deg, y_deg});
  return it == terms_.end() ? 0 : it->second;
}

int BiPoly::deg_x() const {
  int d = UniPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int BiPoly::deg_y() const {
  int d = UniPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

int BiPoly::total_degree() const {
  int d = UniPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
  return d;
}

int BiPoly::min_total_degree() const {
  if (terms_.empty()) return UniPoly::kZeroDegree;
  int d = terms_.begin()->first.x + terms_.begin()->first.y;
  for (const auto& [e, c] : terms_) d = std::min(d, e.x + e.y);
  return d;
}

std::vector<UniPoly> BiPoly::YCoeffs() const {
  const int dy = deg_y();
  std::vector<std::vector<Rep>> raw(static_cast<std::size_t>(dy + 1));
  for (const auto& [e, c] : terms_) {
    auto& v = raw[static_cast<std::size_t>(e.y)];
    if (v.size() <= static_cast<std::size_t>(e.x)) {
      v.resize(static_cast<std::size_t>(e.x) + 1, 0);
    }
    v[static_cast<std::size_t>(e.x)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(field_, std::move(v));
  return out;
}

UniPoly BiPoly::leading_y_coeff() const {
  if (terms_.empty()) return UniPoly(field_);
  return YCoeffs().back();
}

bool BiPoly::is_monic_in_y() const {
  if (terms_.empty()) return false;
  const UniPoly lead = leading_y_coeff();
  return lead.degree() == 0 && lead.leading() == 1;
}

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly out(field_);
  for (const auto& [e, c] : terms_) {
    if (e.x + e.y == d) out.terms_[e] = c;
  }
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = field_.neg(c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, field_.neg(c));
    if (!inserted) {
      it->second = field_.sub(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  const auto& f = a.field_;
  if (a.is_zero() || b.is_zero()) return BiPoly(f);
  // Dense accumulation; desk-scale degrees keep the grid small.
  const int dx = a.deg_x() + b.deg_x();
  const int dy = a.deg_y() + b.deg_y();
  const std::size_t width = static_cast<std::size_t>(dy) + 1;
  std::vector<BiPoly::Rep> grid((static_cast<std::size_t>(dx) + 1) * width, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto& cell = grid[static_cast<std::size_t>(ea.x + eb.x) * width +
                        static_cast<std::size_t>(ea.y + eb.y)];
      cell = f.add(cell, f.mul(ca, cb));
    }
  }
  BiPoly out(f);
  for (int x = 0; x <= dx; ++x) {
    for (int y = 0; y <= dy; ++y) {
      const auto c = grid[static_cast<std::size_t>(x) * width +
                          static_cast<std::size_t>(y)];
      if (c != 0) out.terms_.emplace_hint(out.terms_.end(), Exponent{x, y}, c);
    }
  }
  return out;
}

BiPoly BiPoly::scaled(Rep c) const {
  if (c == 0) return BiPoly(field_);
  BiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = field_.mul(v, c);
  return out;
}

BiPoly BiPoly::pow(std::uint64_t e) const {
  BiPoly result = Constant(field_, 1);
  BiPoly base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly out(field_);
  for (const auto& [e, c] : terms_) {
    const Rep v = field_.mul(field_.from_int(e.x), c);
    if (v != 0) out.terms_[{e.x - 1, e.y}] = v;
  }
  return out;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly out(field_);
  for (const auto& [e, c] : terms_) {
    const Rep v = field_.mul(field_.from_int(e.y), c);
    if (v != 0) out.terms_[{e.x, e.y - 1}] = v;
  }
  return out;
}

BiPoly BiPoly::swapped_xy() const {
  BiPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_[{e.y, e.x}] = c;
  return out;
}

BiPoly BiPoly::shifted(int dx, int dy) const {
  BiPoly out(field_);
  for (const auto& [e, c] : terms_) {
    if (e.x + dx < 0 || e.y + dy < 0) {
      throw InconsistencyError("monomial shift leaves the polynomial ring");
    }
    out.terms_[{e.x + dx, e.y + dy}] = c;
  }
  return out;
}

BiPoly BiPoly::substitute(const BiPoly& x_image, const BiPoly& y_image) const {
  // Horner in Y over coefficients evaluated by Horner in X.
  const auto ycoeffs = YCoeffs();
  auto eval_x = [&](const UniPoly& c) {
    BiPoly acc(field_);
    for (std::size_t i = c.coeffs().size(); i-- > 0;) {
      acc = acc * x_image;
      acc += Constant(field_, c.coeffs()[i]);
    }
    return acc;
  };
  BiPoly acc(field_);
  for (std::size_t j = ycoeffs.size(); j-- > 0;) {
    acc = acc * y_image;
    acc += eval_x(ycoeffs[j]);
  }
  return acc;
}

BiPoly BiPoly::substitute_x_plus_y_power(int k, Rep c) const {
  if (k < 1) throw PreconditionError("substitution X -> X + cY^k needs k >= 1");
  return substitute(X(field_) + Monomial(field_, c, 0, k), Y(field_));
}

BiPoly::Rep BiPoly::eval(const FiniteField& target, Rep x, Rep y) const {
  if (!field_.embeds_into(target)) {
    throw InputError("cannot evaluate a polynomial over " + field_.name() +
                     " at a point of " + target.name());
  }
  const auto ycoeffs = YCoeffs();
  Rep acc = 0;
  for (std::size_t j = ycoeffs.size(); j-- > 0;) {
    Rep cx = 0;
    const auto& c = ycoeffs[j].coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      cx = target.add(target.mul(cx, x), c[i]);
    }
    acc = target.add(target.mul(acc, y), cx);
  }
  return acc;
}

std::pair<BiPoly, BiPoly> BiPoly::DivModMonicY(const BiPoly& a,
                                               const BiPoly& b) {
  if (!b.is_monic_in_y()) {
    throw PreconditionError("divisor " + b.to_string() + " is not monic in Y");
  }
  const auto& f = a.field_;
  const int db = b.deg_y();
  std::vector<UniPoly> rem = a.YCoeffs();
  const std::vector<UniPoly> div = b.YCoeffs();
  const int da = static_cast<int>(rem.size()) - 1;
  std::vector<UniPoly> quot(
      static_cast<std::size_t>(std::max(da - db + 1, 0)), UniPoly(f));
  for (int j = da; j >= db; --j) {
    const UniPoly lead = rem[static_cast<std::size_t>(j)];
    if (lead.is_zero()) continue;
    quot[static_cast<std::size_t>(j - db)] = lead;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(j - db + i)] -= lead * div[static_cast<std::size_t>(i)];
    }
  }
  if (static_cast<int>(rem.size()) > db) rem.resize(static_cast<std::size_t>(std::max(db, 0)), UniPoly(f));
  return {FromYCoeffs(f, quot), FromYCoeffs(f, rem)};
}

// -------------------------------------------------------------- Resultant

namespace {

using YPoly = std::vector<UniPoly>;  // coefficient of Y^j at index j

void TrimY(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int DegY(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

// lc(b)^(deg a - deg b + 1) * a mod b, the pseudo-remainder.
YPoly PseudoRem(YPoly a, const YPoly& b) {
  const int db = DegY(b);
  const UniPoly& lb = b.back();
  int da = DegY(a);
  int steps = da - db + 1;
  while (!a.empty() && DegY(a) >= db) {
    da = DegY(a);
    const UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) {
      a[static_cast<std::size_t>(da - db + i)] -=
          la * b[static_cast<std::size_t>(i)];
    }
    TrimY(a);
    --steps;
  }
  if (steps > 0 && !a.empty()) {
    const UniPoly factor = lb.pow(static_cast<std::uint64_t>(steps));
    for (auto& c : a) c = c * factor;
  }
  return a;
}

}  // namespace

UniPoly ResultantY(const BiPoly& f, const BiPoly& g) {
  const FiniteField& field = f.field();
  if (f.field() != g.field()) throw InputError("resultant: field mismatch");
  UniPoly zero(field);
  if (f.is_zero() || g.is_zero()) return zero;
  YPoly a = f.YCoeffs();
  YPoly b = g.YCoeffs();
  TrimY(a);
  TrimY(b);
  UniPoly one = UniPoly::Constant(field, 1);
  bool negate = false;
  if (DegY(a) < DegY(b)) {
    std::swap(a, b);
    if (DegY(a) % 2 == 1 && DegY(b) % 2 == 1) negate = true;
  }
  auto finish = [&](UniPoly r) { return negate ? -r : r; };
  if (DegY(b) == 0) {
    // Res(A, b) = b^deg A for b free of Y (1 when both are free of Y).
    return finish(b[0].pow(static_cast<std::uint64_t>(DegY(a))));
  }
  UniPoly g_acc = one;
  UniPoly h_acc = one;
  for (;;) {
    const int delta = DegY(a) - DegY(b);
    if (DegY(a) % 2 == 1 && DegY(b) % 2 == 1) negate = !negate;
    YPoly r = PseudoRem(a, b);
    a = std::move(b);
    if (r.empty()) return zero;
    const UniPoly divisor =
        g_acc * h_acc.pow(static_cast<std::uint64_t>(delta));
    for (auto& c : r) c = UniPoly::ExactDiv(c, divisor);
    b = std::move(r);
    g_acc = a.back();
    // h <- h^(1-delta) g^delta
    if (delta == 1) {
      h_acc = g_acc;
    } else if (delta > 1) {
      h_acc = UniPoly::ExactDiv(
          g_acc.pow(static_cast<std::uint64_t>(delta)),
          h_acc.pow(static_cast<std::uint64_t>(delta - 1)));
    }
    if (DegY(b) == 0) {
      const int da = DegY(a);
      // h^(1-da) lc(b)^da
      UniPoly res = b[0].pow(static_cast<std::uint64_t>(da));
      if (da > 1) {
        res = UniPoly::ExactDiv(res, h_acc.pow(static_cast<std::uint64_t>(da - 1)));
      } else if (da == 0) {
        res = res * h_acc;
      }
      return finish(res);
    }
  }
}

int ResultantDegreeX(const BiPoly& f, const BiPoly& g) {
  return ResultantY(f, g).degree();
}

}  // namespace weierstrass
