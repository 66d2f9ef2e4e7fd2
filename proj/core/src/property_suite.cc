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

#include "weierstrass/property_suite.h"

#include <numeric>
#include <sstream>
#include <utility>

#include "weierstrass/errors.h"
#include "weierstrass/semigroup_oracle.h"

namespace weierstrass {
namespace {

std::string Describe(const NumericalSemigroup& s) {
  return s.to_string() + " (c=" + std::to_string(s.conductor()) +
         ", g=" + std::to_string(s.genus()) + ")";
}

class Checker {
 public:
  Checker(const NumericalSemigroup& s, SuiteResult& result)
      : s_(s), result_(result) {}

  void Expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) result_.violations.push_back(Describe(s_) + ": " + what);
  }

 private:
  const NumericalSemigroup& s_;
  SuiteResult& result_;
};

std::string Eq(const std::string& lhs, Value a, Value b) {
  std::ostringstream os;
  os << lhs << " gave " << a << ", expected " << b;
  return os.str();
}

}  // namespace

Value Draw(SuiteRng& rng, Value lo, Value hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<Value>(rng() % span);
}

NumericalSemigroup RandomSemigroup(SuiteRng& rng, Value max_e, Value max_g) {
  for (;;) {
    const Value e = Draw(rng, 2, max_e);
    std::vector<Value> gens = {e};
    const Value extra = Draw(rng, 1, 4);
    for (Value i = 0; i < extra; ++i) gens.push_back(Draw(rng, e + 1, 4 * e));
    Value d = 0;
    for (Value x : gens) d = std::gcd(d, x);
    if (d != 1) continue;
    NumericalSemigroup s = NumericalSemigroup::FromGenerators(gens);
    if (s.genus() >= 1 && s.genus() <= max_g) return s;
  }
}

std::vector<Value> RandomTelescopic(SuiteRng& rng, Value max_delta0) {
  for (;;) {
    const Value h = Draw(rng, 1, 3);
    std::vector<Value> n;
    Value delta0 = 1;
    for (Value i = 0; i < h; ++i) {
      n.push_back(Draw(rng, 2, 4));
      delta0 *= n.back();
    }
    if (delta0 > max_delta0) continue;
    std::vector<Value> deltas = {delta0};
    Value d = delta0;
    for (Value i = 0; i < h; ++i) {
      const Value ni = n[static_cast<std::size_t>(i)];
      const Value next = d / ni;
      // delta_i = d_{i+1} u with gcd(u, n_i) = 1 and u in the semigroup of
      // the earlier generators divided by d_i, so n_i delta_i lies there.
      std::vector<Value> scaled;
      Value top = 0;
      for (Value x : deltas) {
        scaled.push_back(x / d);
        top = std::max(top, x / d);
      }
      const NumericalSemigroup prefix = NumericalSemigroup::FromGenerators(scaled);
      Value u = 0;
      for (int tries = 0; tries < 64; ++tries) {
        const Value cand = Draw(rng, 2, 2 * top + 6);
        if (std::gcd(cand, ni) == 1 && prefix.contains(cand)) {
          u = cand;
          break;
        }
      }
      if (u == 0) break;
      deltas.push_back(next * u);
      d = next;
    }
    if (deltas.size() == static_cast<std::size_t>(h + 1) &&
        is_telescopic(deltas)) {
      return deltas;
    }
  }
}

void CheckSemigroup(const NumericalSemigroup& s, SuiteResult& result) {
  Checker check(s, result);
  const BruteForceSemigroup oracle(s.generators());
  const Value g = s.genus();
  const Value c = s.conductor();
  const Value e = s.multiplicity();
  check.Expect(oracle.genus() == g, Eq("genus", g, oracle.genus()));
  check.Expect(oracle.conductor() == c, Eq("conductor", c, oracle.conductor()));

  for (Value m : s.elements_up_to(4 * g + 2 * e)) {
    const std::string at = "(" + std::to_string(m) + ")";
    const Value v = nu(s, m);
    const Value fr = feng_rao(s, m);
    check.Expect(v == oracle.pair_count(m),
                 Eq("nu" + at, v, oracle.pair_count(m)));
    check.Expect(fr == oracle.feng_rao(m),
                 Eq("feng_rao" + at, fr, oracle.feng_rao(m)));
    if (m == 0) {
      check.Expect(v == 1 && fr == 1, "nu(0) or delta_FR(0) is not 1");
    } else {
      check.Expect(2 <= v && v <= m + 1, Eq("bounds on nu" + at, v, m + 1));
      check.Expect(2 <= fr && fr <= m + 1,
                   Eq("bounds on delta_FR" + at, fr, m + 1));
    }
    if (m >= c) {
      const Value expect = m + 1 - 2 * g + gap_pair_count(s, m);
      check.Expect(v == expect, Eq("nu = m+1-2g+D" + at, v, expect));
    }
    if (m >= 4 * g - 1) {
      check.Expect(v == m + 1 - 2 * g, Eq("nu above 4g-1" + at, v, m + 1 - 2 * g));
      check.Expect(fr == m + 1 - 2 * g,
                   Eq("delta_FR above 4g-1" + at, fr, m + 1 - 2 * g));
    }
    check.Expect(fr >= m + 1 - 2 * g, Eq("delta_FR >= d*" + at, fr, m + 1 - 2 * g));
  }

  const bool sym = is_symmetric(s);
  check.Expect(sym == (c == 2 * g), "symmetry test disagrees with c = 2g");
  if (!sym) return;
  ++result.symmetric_cases;
  for (Value m = c; m <= 2 * c - 2; ++m) {
    const Value fast = feng_rao_symmetric(s, m);
    const Value slow = feng_rao(s, m);
    check.Expect(fast == slow,
                 Eq("feng_rao_symmetric(" + std::to_string(m) + ")", fast, slow));
  }
  for (Value x : s.elements_up_to(3 * c)) {
    if (x == 0) continue;
    const Value m = 2 * g - 1 + x;
    const Value fr = feng_rao(s, m);
    check.Expect(fr == x, Eq("delta_FR(2g-1+" + std::to_string(x) + ")", fr, x));
    check.Expect(nu(s, m) == x,
                 Eq("nu(2g-1+" + std::to_string(x) + ")", nu(s, m), x));
  }
}

SuiteResult RunOracleSuite(std::uint64_t seed, int count, Value max_e,
                           Value max_g) {
  SuiteResult result;
  result.name = "oracle-equivalence";
  SuiteRng rng(seed);
  for (int i = 0; i < count; ++i) {
    // Every third instance is telescopic so the symmetric checks run.
    if (i % 3 == 2) {
      for (;;) {
        const NumericalSemigroup s =
            TelescopicStructure::FromGenerators(RandomTelescopic(rng, max_e))
                .semigroup();
        if (s.genus() > max_g) continue;
        CheckSemigroup(s, result);
        break;
      }
    } else {
      CheckSemigroup(RandomSemigroup(rng, max_e, max_g), result);
    }
    ++result.cases;
  }
  return result;
}

SuiteResult RunTelescopicSuite(std::uint64_t seed, int count,
                               int adjunctions) {
  SuiteResult result;
  result.name = "telescopic";
  SuiteRng rng(seed);
  for (int i = 0; i < count; ++i) {
    const TelescopicStructure t =
        TelescopicStructure::FromGenerators(RandomTelescopic(rng, 24));
    const NumericalSemigroup s = t.semigroup();
    Checker check(s, result);
    ++result.cases;
    check.Expect(telescopic_apery(t) == s.apery(),
                 "telescopic Apery set differs from the general one");
    const bool sym = is_symmetric(s);
    check.Expect(sym, "telescopic semigroup is not symmetric");
    if (sym) ++result.symmetric_cases;
    for (Value m = 0; m <= s.conductor() + 2 * t.deltas()[0]; ++m) {
      if (!s.contains(m)) {
        bool threw = false;
        try {
          telescopic_repr(t, m);
        } catch (const InputError&) {
          threw = true;
        }
        check.Expect(threw, "gap " + std::to_string(m) + " has a representation");
        continue;
      }
      const std::vector<Value> lambda = telescopic_repr(t, m);
      Value sum = 0;
      bool bounded = lambda[0] >= 0;
      for (std::size_t k = 0; k < lambda.size(); ++k) {
        sum += lambda[k] * t.deltas()[k];
        if (k >= 1) bounded = bounded && lambda[k] >= 0 && lambda[k] < t.n(k);
      }
      check.Expect(sum == m && bounded,
                   "representation of " + std::to_string(m) + " does not round-trip");
    }
    for (Value a : s.apery()) {
      const Value product = telescopic_carry_free_pairs(t, a);
      check.Expect(product <= nu(s, a),
                   Eq("carry-free pairs at " + std::to_string(a), product, nu(s, a)));
    }
  }
  for (int i = 0; i < adjunctions; ++i) {
    const NumericalSemigroup s = RandomSemigroup(rng, 12, 25);
    const Value b = Draw(rng, 1, s.conductor() + s.pivot());
    std::vector<Value> gens = s.generators();
    gens.push_back(b);
    const NumericalSemigroup expected =
        NumericalSemigroup::FromGenerators(gens, s.pivot());
    const NumericalSemigroup got = adjoin(s, b);
    Checker check(s, result);
    ++result.cases;
    check.Expect(got == expected && got.genus() == expected.genus() &&
                     got.conductor() == expected.conductor(),
                 "adjoin " + std::to_string(b) + " gave " + Describe(got) +
                     ", expected " + Describe(expected));
  }
  return result;
}

}  // namespace weierstrass
