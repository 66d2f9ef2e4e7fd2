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

#include "weierstrass/field.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "weierstrass/errors.h"

namespace weierstrass {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void Trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t InvModP(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Coeffs MulModP(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Trim(out);
  return out;
}

// Remainder of a modulo a nonzero m.
Coeffs RemModP(Coeffs a, const Coeffs& m, std::uint32_t p) {
  Trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = InvModP(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + p - factor * m[i] % p) % p);
    }
    Trim(a);
  }
  return a;
}

Coeffs GcdModP(Coeffs a, Coeffs b, std::uint32_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Coeffs r = RemModP(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^power) mod m
Coeffs FrobeniusPowerOfX(const Coeffs& m, std::uint32_t p, std::uint32_t power) {
  Coeffs x = RemModP({0, 1}, m, p);
  for (std::uint32_t i = 0; i < power; ++i) {
    Coeffs result{1};
    Coeffs base = x;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) result = RemModP(MulModP(result, base, p), m, p);
      base = RemModP(MulModP(base, base, p), m, p);
    }
    x = std::move(result);
  }
  return x;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Rabin's test: f of degree k is irreducible iff x^(p^k) = x mod f and
// gcd(x^(p^(k/r)) - x, f) = 1 for every prime r dividing k.
bool IsIrreducibleModP(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Coeffs f = poly;
  Trim(f);
  if (f.size() < 2) return false;
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  if (k == 1) return true;
  auto x_minus = [&](Coeffs c) {
    c.resize(std::max<std::size_t>(c.size(), 2), 0);
    c[1] = (c[1] + p - 1) % p;
    Trim(c);
    return c;
  };
  if (!x_minus(FrobeniusPowerOfX(f, p, k)).empty()) return false;
  for (std::uint64_t r : PrimeFactors(k)) {
    Coeffs g = GcdModP(f, x_minus(FrobeniusPowerOfX(f, p, k / static_cast<std::uint32_t>(r))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct FiniteField::Impl {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint32_t q = 2;
  Coeffs modulus;                     // ascending, monic, size k+1
  std::vector<std::uint32_t> powers;  // p^i, i < k
  bool tables = false;
  std::vector<Rep> exp_table;  // size 2(q-1)
  std::vector<std::uint32_t> log_table;
  Rep generator = 1;

  Coeffs ToCoeffs(Rep a) const {
    Coeffs c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }
  Rep FromCoeffs(const Coeffs& c) const {
    Rep r = 0;
    for (std::size_t i = std::min<std::size_t>(c.size(), k); i-- > 0;) {
      r = r * p + c[i];
    }
    return r;
  }
  Rep Add(Rep a, Rep b) const {
    if (k == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    Rep out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * powers[i];
      a /= p;
      b /= p;
    }
    return out;
  }
  Rep Neg(Rep a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Rep out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((p - a % p) % p) * powers[i];
      a /= p;
    }
    return out;
  }
  Rep SlowMul(Rep a, Rep b) const {
    if (k == 1) {
      return static_cast<Rep>(std::uint64_t{a} * b % p);
    }
    return FromCoeffs(
        RemModP(MulModP(ToCoeffs(a), ToCoeffs(b), p), modulus, p));
  }
  Rep Mul(Rep a, Rep b) const {
    if (a == 0 || b == 0) return 0;
    if (tables) return exp_table[log_table[a] + log_table[b]];
    return SlowMul(a, b);
  }
  Rep Pow(Rep a, std::uint64_t e) const {
    Rep result = 1;
    Rep base = a;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = Mul(result, base);
      base = Mul(base, base);
    }
    return result;
  }
};

namespace {

std::shared_ptr<FiniteField::Impl> BuildImpl(std::uint32_t p, Coeffs modulus) {
  auto impl = std::make_shared<FiniteField::Impl>();
  impl->p = p;
  impl->k = static_cast<std::uint32_t>(modulus.size() - 1);
  impl->modulus = std::move(modulus);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < impl->k; ++i) {
    impl->powers.push_back(static_cast<std::uint32_t>(q));
    q *= p;
  }
  impl->q = static_cast<std::uint32_t>(q);

  // Multiplicative generator: g with g^((q-1)/r) != 1 for all primes r | q-1.
  const std::uint64_t group = q - 1;
  const auto factors = PrimeFactors(group);
  for (FiniteField::Rep g = 1; g < q; ++g) {
    bool ok = group > 0;
    for (std::uint64_t r : factors) {
      if (impl->Pow(g, group / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok || group == 1) {
      impl->generator = g;
      break;
    }
  }
  if (q <= (1u << 16)) {
    impl->exp_table.assign(2 * group, 0);
    impl->log_table.assign(q, 0);
    FiniteField::Rep x = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
      impl->exp_table[i] = x;
      impl->exp_table[i + group] = x;
      impl->log_table[x] = static_cast<std::uint32_t>(i);
      x = impl->SlowMul(x, impl->generator);
    }
    impl->tables = true;
  }
  return impl;
}

void CheckOrder(std::uint32_t p, std::uint32_t k) {
  if (!IsPrime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not prime");
  }
  if (k == 0) throw InputError("field extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > FiniteField::kMaxOrder) {
      throw InputError("field GF(" + std::to_string(p) + "^" +
                       std::to_string(k) + ") exceeds 2^20 elements");
    }
  }
}

}  // namespace

FiniteField FiniteField::Make(std::uint32_t p, std::uint32_t k) {
  CheckOrder(p, k);
  if (k == 1) return FiniteField(BuildImpl(p, {0, 1}));
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs candidate(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      candidate[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    candidate[k] = 1;
    if (IsIrreducibleModP(candidate, p)) {
      return FiniteField(BuildImpl(p, std::move(candidate)));
    }
  }
  throw InconsistencyError("no irreducible polynomial found");
}

FiniteField FiniteField::WithModulus(std::uint32_t p, Coeffs modulus) {
  Trim(modulus);
  if (modulus.size() < 2) throw InputError("modulus must have degree >= 1");
  CheckOrder(p, static_cast<std::uint32_t>(modulus.size() - 1));
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw InputError("modulus must be monic");
  if (!IsIrreducibleModP(modulus, p)) {
    throw InputError("modulus is not irreducible over GF(" +
                     std::to_string(p) + ")");
  }
  if (modulus.size() == 2) return FiniteField(BuildImpl(p, {0, 1}));
  return FiniteField(BuildImpl(p, std::move(modulus)));
}

FiniteField FiniteField::Parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> FiniteField {
    throw InputError("bad field spec '" + std::string(text) +
                     "' (expected GF(p) or GF(p^k))");
  };
  if (s.size() < 5 || s.compare(0, 3, "GF(") != 0 || s.back() != ')') {
    return fail();
  }
  std::string_view body(s.data() + 3, s.size() - 4);
  auto parse_uint = [&](std::string_view v) -> std::uint64_t {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) fail();
    return out;
  };
  const auto caret = body.find('^');
  if (caret != std::string_view::npos) {
    const std::uint64_t p = parse_uint(body.substr(0, caret));
    const std::uint64_t k = parse_uint(body.substr(caret + 1));
    if (p > FiniteField::kMaxOrder || k > 64) fail();
    return Make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  }
  const std::uint64_t q = parse_uint(body);
  if (q < 2 || q > FiniteField::kMaxOrder) fail();
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint64_t rest = q;
    std::uint32_t k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) {
      throw InputError("field order " + std::to_string(q) +
                       " is not a prime power");
    }
    return Make(static_cast<std::uint32_t>(p), k);
  }
  return fail();
}

std::uint32_t FiniteField::characteristic() const { return impl_->p; }
std::uint32_t FiniteField::degree() const { return impl_->k; }
std::uint32_t FiniteField::order() const { return impl_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const {
  return impl_->modulus;
}

std::string FiniteField::name() const {
  if (impl_->k == 1) return "GF(" + std::to_string(impl_->p) + ")";
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) +
         ")";
}

FiniteField::Rep FiniteField::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<Rep>(r);
}

FiniteField::Rep FiniteField::add(Rep a, Rep b) const { return impl_->Add(a, b); }
FiniteField::Rep FiniteField::neg(Rep a) const { return impl_->Neg(a); }
FiniteField::Rep FiniteField::sub(Rep a, Rep b) const {
  return impl_->Add(a, impl_->Neg(b));
}
FiniteField::Rep FiniteField::mul(Rep a, Rep b) const { return impl_->Mul(a, b); }

FiniteField::Rep FiniteField::inv(Rep a) const {
  if (a == 0) throw PreconditionError("division by zero in " + name());
  if (impl_->tables) {
    const std::uint32_t group = impl_->q - 1;
    return impl_->exp_table[(group - impl_->log_table[a]) % group];
  }
  return impl_->Pow(a, impl_->q - 2);
}

FiniteField::Rep FiniteField::pow(Rep a, std::uint64_t e) const {
  return impl_->Pow(a, e);
}

FiniteField::Rep FiniteField::pth_root(Rep a) const {
  // a^(q/p) is the inverse of the Frobenius map a -> a^p.
  return impl_->Pow(a, impl_->q / impl_->p);
}

FiniteField::Rep FiniteField::primitive_element() const {
  return impl_->generator;
}

std::vector<std::uint32_t> FiniteField::coordinates(Rep a) const {
  return impl_->ToCoeffs(a);
}

FiniteField::Rep FiniteField::from_coordinates(
    const std::vector<std::uint32_t>& coords) const {
  Coeffs c = coords;
  for (auto& x : c) x %= impl_->p;
  if (c.size() > impl_->k) c = RemModP(c, impl_->modulus, impl_->p);
  return impl_->FromCoeffs(c);
}

std::string FiniteField::format(Rep a) const {
  if (impl_->k == 1) return std::to_string(a);
  if (a == 0) return "0";
  const Coeffs c = impl_->ToCoeffs(a);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i] << '*';
    out << 't';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

FiniteField::Rep FiniteField::parse_element(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw InputError("empty field element");
  // Sum of terms c, c*t, t, c*t^e, t^e with optional leading sign.
  Coeffs acc;
  std::size_t pos = 0;
  auto read_uint = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) {
      throw InputError("bad field element '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  };
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::uint64_t coeff = 1;
    std::uint64_t exponent = 0;
    bool have_number = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_uint() % impl_->p;
      have_number = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = read_uint();
      }
    } else if (!have_number) {
      throw InputError("bad field element '" + std::string(text) + "'");
    }
    if (exponent > 4096) throw InputError("t exponent too large");
    if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
    const std::uint64_t term = negative ? (impl_->p - coeff) % impl_->p : coeff;
    acc[exponent] = static_cast<std::uint32_t>((acc[exponent] + term) % impl_->p);
  }
  if (impl_->k == 1) {
    // A prime-field element cannot carry a t.
    for (std::size_t i = 1; i < acc.size(); ++i) {
      if (acc[i] != 0) {
        throw InputError("'t' is not defined in prime field " + name());
      }
    }
    return acc.empty() ? 0 : acc[0];
  }
  return from_coordinates(acc);
}

FieldElement FiniteField::element(Rep a) const {
  if (!contains(a)) throw InputError("element out of range for " + name());
  return FieldElement(*this, a);
}

FieldElement FiniteField::element_from_int(std::int64_t value) const {
  return FieldElement(*this, from_int(value));
}

bool FiniteField::embeds_into(const FiniteField& larger) const {
  if (*this == larger) return true;
  return is_prime_field() && characteristic() == larger.characteristic();
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
}

FieldElement::FieldElement(FiniteField field, FiniteField::Rep rep)
    : field_(std::move(field)), rep_(rep) {}

namespace {
const FiniteField& Common(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw InputError("field mismatch: " + a.field().name() + " vs " +
                     b.field().name());
  }
  return a.field();
}
}  // namespace

FieldElement FieldElement::operator-() const {
  return {field_, field_.neg(rep_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_.inv(rep_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const {
  return {field_, field_.pow(rep_, e)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = Common(a, b);
  return {f, f.add(a.rep(), b.rep())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = Common(a, b);
  return {f, f.sub(a.rep(), b.rep())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = Common(a, b);
  return {f, f.mul(a.rep(), b.rep())};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = Common(a, b);
  return {f, f.div(a.rep(), b.rep())};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field() == b.field() && a.rep() == b.rep();
}

}  // namespace weierstrass
