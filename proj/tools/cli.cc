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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "weierstrass/approx_roots.h"
#include "weierstrass/branch.h"
#include "weierstrass/codes.h"
#include "weierstrass/errors.h"
#include "weierstrass/field.h"
#include "weierstrass/poly_text.h"
#include "weierstrass/property_suite.h"
#include "weierstrass/semigroup.h"
#include "weierstrass/triangulation.h"

namespace weierstrass::cli {
namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string Str(Value v) { return std::to_string(v); }
std::string YesNo(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string Join(const std::vector<T>& items, const std::string& sep = ",") {
  std::string text;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) text += sep;
    if constexpr (std::is_same_v<T, std::string>) {
      text += items[i];
    } else {
      text += std::to_string(items[i]);
    }
  }
  return text;
}

std::string SemigroupText(const NumericalSemigroup& s) {
  return "<" + Join(s.minimal_generators()) + ">";
}

Value ParseValue(const std::string& text, const std::string& what) {
  Value v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InputError("bad " + what + " '" + text + "'");
  }
  return v;
}

std::pair<Value, Value> ParseRange(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InputError("--m-range expects LO:HI, got '" + text + "'");
  }
  const Value lo = ParseValue(text.substr(0, colon), "range bound");
  const Value hi = ParseValue(text.substr(colon + 1), "range bound");
  if (lo < 0 || hi < lo) throw InputError("empty or negative range " + text);
  return {lo, hi};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Non-blank lines that do not start with '#', trimmed.
std::vector<std::string> ContentLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

// Everything derived from --field and --curve.
struct Curve {
  FiniteField field;
  BiPoly input;
  PlaneModel model;
  AMSequence seq;
};

Curve LoadCurve(const JobConfig& job) {
  const FiniteField field = FiniteField::Parse(job.field_spec);
  std::string text = job.curve_text;
  if (!job.curve_path.empty()) text = Join(ContentLines(ReadFile(job.curve_path)), " ");
  BiPoly input = ParseBiPoly(field, text);
  PlaneModel model = normalize_degree(input);
  AMSequence seq = am_sequence(model);
  return {field, std::move(input), std::move(model), std::move(seq)};
}

void CurveFields(const Curve& c, Report& report) {
  report.Field("field", c.field.name());
  report.Field("curve", FormatBiPoly(c.input));
  report.Field("m", Str(c.model.m));
  report.Field("n", Str(c.model.n));
  report.Field("e_P", Str(c.model.e_p()));
  report.Field("hypothesis (H)", YesNo(c.model.hypothesis_h()));
  if (c.model.substitution_k) {
    report.Field("substitution", "X <- X + Y^" + Str(*c.model.substitution_k));
    report.Field("k", Str(*c.model.substitution_k));
  } else {
    report.Field("substitution", "none");
  }
  report.Field("model", FormatBiPoly(c.model.f));
  report.Field("h", Str(c.seq.h));
  report.Field("delta", Join(c.seq.delta));
  report.Field("d", Join(c.seq.d));
  report.Field("n_i", Join(c.seq.nseq));
  for (std::size_t i = 0; i < c.seq.roots.size(); ++i) {
    report.Field("F_" + std::to_string(i), FormatBiPoly(c.seq.roots[i]));
  }
}

BranchParam MakeOracle(const JobConfig& job, const PlaneModel& model) {
  return BranchParam::Parametrize(
      model, 0, job.precision_ceiling.value_or(BranchParam::kDefaultCeiling));
}

std::vector<RationalFunction> LoadBasis(const JobConfig& job,
                                        const PlaneModel& model) {
  std::vector<RationalFunction> basis;
  if (job.basis_path.empty()) return basis;
  for (const std::string& line : ContentLines(ReadFile(job.basis_path))) {
    RationalFunction f = ParseRational(model.field, line);
    if (job.basis_coords == "original") {
      f = RationalFunction(model.to_model(f.numerator()),
                           model.to_model(f.denominator()));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

// The full pipeline up to Gamma_P.
struct Pipeline {
  Curve curve;
  SemigroupAtInfinity sp;
  BranchParam oracle;
  std::vector<RationalFunction> basis;
  TriangulationResult result;
};

std::unique_ptr<Pipeline> RunPipeline(const JobConfig& job) {
  Curve curve = LoadCurve(job);
  SemigroupAtInfinity sp = semigroup_at_infinity(curve.seq);
  BranchParam oracle = MakeOracle(job, curve.model);
  std::vector<RationalFunction> basis = LoadBasis(job, curve.model);
  const TriangulationMode mode = job.mode == "sequential"
                                     ? TriangulationMode::kSequential
                                     : TriangulationMode::kFast;
  TriangulationResult result = triangulate(sp, basis, oracle, mode);
  return std::unique_ptr<Pipeline>(new Pipeline{
      std::move(curve), std::move(sp), std::move(oracle), std::move(basis),
      std::move(result)});
}

void GammaFields(const TriangulationReport& r, Report& report) {
  report.Field("Gamma_P", SemigroupText(r.gamma));
  report.Field("gaps", Join(r.gamma.gaps()));
  report.Field("genus", Str(r.genus));
  report.Field("conductor", Str(r.gamma.conductor()));
}

void CurveAnalyze(const JobConfig& job, Report& report) {
  const Curve c = LoadCurve(job);
  CurveFields(c, report);
  const BranchVerdict verdict = one_branch_criterion(c.seq);
  if (!verdict.one_branch) {
    report.Field("one-branch", "no");
    report.Field("reason", verdict.reason);
    throw PreconditionError("one-branch criterion fails: " + verdict.reason);
  }
  report.Field("one-branch", "yes");
  const SemigroupAtInfinity sp = semigroup_at_infinity(c.seq);
  report.Field("S_P", "<" + Join(sp.generators) + ">");
  report.Field("S_P genus", Str(sp.semigroup.genus()));
  report.Field("S_P conductor", Str(sp.semigroup.conductor()));
}

void Weierstrass(const JobConfig& job, Report& report) {
  const auto p = RunPipeline(job);
  const TriangulationReport& r = p->result.report;
  CurveFields(p->curve, report);
  report.Field("one-branch", "yes");
  report.Field("S_P", "<" + Join(r.sp_generators) + ">");
  report.Field("S_P genus", Str(r.sp_genus));
  report.Field("mode", r.mode == TriangulationMode::kFast ? "fast" : "sequential");
  report.Field("basis coordinates", job.basis_coords);
  report.Field("s", Str(static_cast<Value>(r.s)));
  report.Field("added values", Join(r.added_values));
  GammaFields(r, report);
  Rows traces;
  for (const ReductionTrace& t : r.traces) {
    std::string status = t.escaped ? "escaped" : "";
    if (t.absorbed) status = "absorbed";
    if (t.skipped) status = "skipped";
    traces.push_back({"h_" + std::to_string(t.basis_index + 1),
                      Join(t.values, " -> "), status});
  }
  report.Table({"basis", "values", "status"}, std::move(traces));
  Rows reduced;
  for (const ValuedFunction& g : r.reduced) {
    reduced.push_back({Str(g.value), OriginName(g.origin), g.f.to_string()});
  }
  report.Table({"value", "origin", "function"}, std::move(reduced));
}

void LBasis(const JobConfig& job, Report& report) {
  const auto p = RunPipeline(job);
  const std::vector<ValuedFunction> basis =
      l_basis(p->result.table, *job.m, p->oracle);
  report.Field("Gamma_P", SemigroupText(p->result.report.gamma));
  report.Field("m", Str(*job.m));
  report.Field("dimension", Str(static_cast<Value>(basis.size())));
  report.Field("coordinates", "model");
  Rows rows;
  for (const ValuedFunction& f : basis) {
    rows.push_back({Str(f.value), OriginName(f.origin), f.f.to_string()});
  }
  report.Table({"value", "origin", "function"}, std::move(rows));
}

FiniteField EvaluationField(const JobConfig& job, const FiniteField& base) {
  if (job.ext_degree < 1) throw InputError("--ext-degree must be positive");
  return FiniteField::Make(base.characteristic(),
                           base.degree() * static_cast<std::uint32_t>(job.ext_degree));
}

CodeSpec BuildCode(const JobConfig& job, Pipeline& p, Report& report) {
  const FiniteField ext = EvaluationField(job, p.curve.field);
  const EvaluationSet points = enumerate_points(p.curve.model, p.result.table, ext);
  CodeSpec spec = build_code(p.result.table, points, *job.m, p.oracle, job.improved);
  report.Field("evaluation field", ext.name());
  report.Field("n", Str(static_cast<Value>(spec.n)));
  report.Field("singular points excluded", Str(static_cast<Value>(points.singular_excluded)));
  report.Field("pole points excluded", Str(static_cast<Value>(points.pole_excluded)));
  report.Field("m", Str(spec.m));
  report.Field("improved", YesNo(spec.improved));
  report.Field("genus", Str(spec.genus));
  report.Field("rank", Str(static_cast<Value>(spec.rank)));
  report.Field("k", Str(static_cast<Value>(spec.k)));
  report.Field("d*", Str(spec.d_star));
  report.Field("m'", Str(spec.m_prime));
  report.Field("Feng-Rao bound", Str(spec.feng_rao_bound));
  return spec;
}

void CodeBuild(const JobConfig& job, Report& report) {
  const auto p = RunPipeline(job);
  const CodeSpec spec = BuildCode(job, *p, report);
  if (job.exact_distance) {
    const auto d = minimum_distance(spec);
    report.Field("minimum distance", d ? Str(static_cast<Value>(*d)) : "-");
  }
  Rows rows;
  for (std::size_t i = 0; i < spec.row_values.size(); ++i) {
    rows.push_back({Str(spec.row_values[i]), spec.row_functions[i].to_string()});
  }
  report.Table({"value", "function"}, std::move(rows));
  if (job.show_matrix) {
    Rows matrix;
    for (std::size_t i = 0; i < spec.matrix.size(); ++i) {
      std::vector<std::string> row = {Str(spec.row_values[i])};
      for (FiniteField::Rep a : spec.matrix[i]) row.push_back(spec.field.format(a));
      matrix.push_back(std::move(row));
    }
    std::vector<std::string> header = {"value"};
    for (std::size_t j = 0; j < spec.n; ++j) header.push_back("P" + std::to_string(j + 1));
    report.Table(std::move(header), std::move(matrix));
  }
}

void CodeBounds(const JobConfig& job, Report& report) {
  const auto p = RunPipeline(job);
  const NumericalSemigroup& gamma = p->result.report.gamma;
  std::pair<Value, Value> range = {0, 4 * gamma.genus() + gamma.multiplicity()};
  if (job.m) range = {*job.m, *job.m};
  if (job.m_range) range = *job.m_range;
  report.Field("Gamma_P", SemigroupText(gamma));
  report.Field("genus", Str(gamma.genus()));
  Rows rows;
  for (const DistanceRow& row : distance_bound_table(gamma, range.first, range.second)) {
    rows.push_back({Str(row.m), Str(row.d_star_prev), Str(row.delta_fr),
                    Str(row.gain), Str(row.t_corr)});
  }
  report.Table({"m", "m+1-2g", "delta_FR", "gain", "t"}, std::move(rows));
}

void CodeSyndrome(const JobConfig& job, Report& report) {
  const auto p = RunPipeline(job);
  const CodeSpec spec = BuildCode(job, *p, report);
  std::vector<FiniteField::Rep> word;
  std::istringstream in(job.word);
  std::string cell;
  while (std::getline(in, cell, ',')) word.push_back(spec.field.parse_element(cell));
  const std::vector<FiniteField::Rep> syndromes = known_syndromes(spec, word);
  report.Field("codeword", YesNo(is_codeword(spec, word)));
  Rows rows;
  for (std::size_t i = 0; i < syndromes.size(); ++i) {
    rows.push_back({Str(spec.row_values[i]), spec.field.format(syndromes[i])});
  }
  report.Table({"value", "syndrome"}, std::move(rows));
}

NumericalSemigroup LoadSemigroup(const JobConfig& job) {
  return NumericalSemigroup::FromGenerators(job.gens, job.pivot);
}

// Elements of S selected by --m / --m-range, or by `fallback`.
std::vector<Value> Selected(const JobConfig& job, const NumericalSemigroup& s,
                            std::pair<Value, Value> fallback) {
  if (job.m) {
    if (!s.contains(*job.m)) throw InputError(Str(*job.m) + " is not in " + s.to_string());
    return {*job.m};
  }
  const auto [lo, hi] = job.m_range.value_or(fallback);
  std::vector<Value> out;
  for (Value m : s.elements_up_to(hi)) {
    if (m >= lo) out.push_back(m);
  }
  return out;
}

void SemigroupStats(const JobConfig& job, Report& report) {
  const NumericalSemigroup s = LoadSemigroup(job);
  report.Field("generators", Join(s.generators()));
  report.Field("minimal generators", Join(s.minimal_generators()));
  report.Field("pivot", Str(s.pivot()));
  report.Field("multiplicity", Str(s.multiplicity()));
  report.Field("genus", Str(s.genus()));
  report.Field("conductor", Str(s.conductor()));
  report.Field("gaps", Join(s.gaps()));
  report.Field("symmetric", YesNo(is_symmetric(s)));
  const std::vector<Value> mins = s.minimal_generators();
  if (mins.size() <= 9) {
    const auto order = telescopic_ordering(mins);
    report.Field("telescopic", order ? "yes (" + Join(*order) + ")" : "no");
  }
}

void SemigroupApery(const JobConfig& job, Report& report) {
  const NumericalSemigroup s = LoadSemigroup(job);
  report.Field("pivot", Str(s.pivot()));
  Rows rows;
  for (std::size_t i = 0; i < s.apery().size(); ++i) {
    rows.push_back({std::to_string(i), Str(s.apery()[i])});
  }
  report.Table({"i", "a_i"}, std::move(rows));
}

void SemigroupNu(const JobConfig& job, Report& report) {
  const NumericalSemigroup s = LoadSemigroup(job);
  Rows rows;
  for (Value m : Selected(job, s, {0, 4 * s.genus() + s.multiplicity()})) {
    rows.push_back({Str(m), Str(nu(s, m))});
  }
  report.Table({"m", "nu"}, std::move(rows));
}

void SemigroupFengRao(const JobConfig& job, Report& report) {
  const NumericalSemigroup s = LoadSemigroup(job);
  const bool sym = is_symmetric(s);
  const Value g = s.genus();
  const Value c = s.conductor();
  report.Field("semigroup", SemigroupText(s));
  report.Field("genus", Str(g));
  report.Field("conductor", Str(c));
  Rows rows;
  for (Value m : Selected(job, s, {0, 4 * g + s.multiplicity()})) {
    const Value fr = feng_rao(s, m);
    const Value formula = minimum_formula(s, m);
    std::string fast = "-";
    if (sym && m >= c && m <= 2 * c - 2) {
      const Value alt = feng_rao_symmetric(s, m);
      if (alt != fr) {
        throw InconsistencyError("symmetric Feng-Rao path disagrees at " + Str(m));
      }
      fast = Str(alt);
    }
    rows.push_back({Str(m), Str(nu(s, m)), Str(fr), Str(m + 1 - 2 * g),
                    Str(formula), fr == formula ? "[@]" : "", fast});
  }
  report.Table({"m", "nu", "delta_FR", "m+1-2g", "min_formula", "formula",
                "symmetric_path"},
               std::move(rows));
}

void SemigroupSymmetric(const JobConfig& job, Report& report) {
  const NumericalSemigroup s = LoadSemigroup(job);
  report.Field("symmetric", YesNo(is_symmetric(s)));
  report.Field("conductor", Str(s.conductor()));
  report.Field("2g", Str(2 * s.genus()));
  report.Field("largest Apery element", Str(s.apery()[static_cast<std::size_t>(s.max_index())]));
}

void SemigroupQ0(const JobConfig& job, Report& report) {
  const NumericalSemigroup s = LoadSemigroup(job);
  const Q0Report q = q0_m0(s);
  report.Field("semigroup", SemigroupText(s));
  report.Field("conductor", Str(s.conductor()));
  report.Field("genus", Str(s.genus()));
  report.Field("q0", Str(q.q0));
  report.Field("q0 source", q.q0_is_default ? "default c-1" : "nu(q) < delta(q)");
  report.Field("m0", Str(q.m0));
  report.Field("m0 in S", YesNo(q.m0_in_s));
  report.Field("formula fails at m0", YesNo(q.fails_at_m0));
  report.Field("formula holds above m0", YesNo(q.holds_above_m0));
  report.Field("threshold (oracle)", q.oracle_threshold ? Str(q.oracle_threshold) : "-");
  report.Field("q0 >= e+2", YesNo(q.lower_bound_holds));
  const std::vector<Value> mins = s.minimal_generators();
  if (mins.size() <= 9) {
    if (const auto order = telescopic_ordering(mins, /*last_is_max=*/true)) {
      Value d = 0;
      for (std::size_t i = 0; i + 1 < order->size(); ++i) d = std::gcd(d, (*order)[i]);
      const Value bound = order->size() < 2 ? 0 : (d - 1) * order->back();
      report.Field("telescopic ordering", Join(*order));
      report.Field("(d_h-1)delta_h", Str(bound));
      report.Field("(d_h-1)delta_h <= q0", YesNo(bound <= q.q0));
    }
  }
}

void SelfTest(const JobConfig& job, Report& report, bool& failed) {
  const SuiteResult suites[] = {RunOracleSuite(job.seed),
                                RunTelescopicSuite(job.seed)};
  report.Field("seed", std::to_string(job.seed));
  Rows rows;
  Rows violations;
  for (const SuiteResult& r : suites) {
    rows.push_back({r.name, Str(static_cast<Value>(r.cases)),
                    Str(static_cast<Value>(r.symmetric_cases)),
                    Str(static_cast<Value>(r.checks)),
                    Str(static_cast<Value>(r.violations.size()))});
    for (const std::string& v : r.violations) violations.push_back({r.name, v});
    failed = failed || !r.ok();
  }
  report.Table({"suite", "cases", "symmetric", "checks", "violations"}, std::move(rows));
  if (!violations.empty()) report.Table({"suite", "violation"}, std::move(violations));
}

void Validate(const JobConfig& job) {
  const bool needs_curve = job.command == "curve analyze" ||
                           job.command == "weierstrass" ||
                           job.command == "lbasis" ||
                           job.command.rfind("code ", 0) == 0;
  if (needs_curve) {
    if (job.field_spec.empty()) throw InputError("--field is required");
    if (job.curve_text.empty() == job.curve_path.empty()) {
      throw InputError("exactly one of --curve and --curve-file is required");
    }
  }
  if (job.command == "weierstrass" && job.basis_path.empty()) {
    throw InputError("--integral-basis is required");
  }
  if ((job.command == "code syndrome") && job.word.empty()) {
    throw InputError("--word is required");
  }
}

}  // namespace

int Execute(const JobConfig& job, std::ostream& out, std::ostream& err) {
  Report report;
  bool failed = false;
  int code = 0;
  try {
    Validate(job);
    static const std::vector<std::pair<std::string, std::function<void(const JobConfig&, Report&)>>>
        kCommands = {
            {"curve analyze", CurveAnalyze},
            {"weierstrass", Weierstrass},
            {"lbasis", LBasis},
            {"code build", CodeBuild},
            {"code bounds", CodeBounds},
            {"code syndrome", CodeSyndrome},
            {"semigroup stats", SemigroupStats},
            {"semigroup apery", SemigroupApery},
            {"semigroup nu", SemigroupNu},
            {"semigroup fengrao", SemigroupFengRao},
            {"semigroup symmetric", SemigroupSymmetric},
            {"semigroup q0", SemigroupQ0},
        };
    if (job.command == "selftest") {
      SelfTest(job, report, failed);
    } else {
      const auto it = std::find_if(kCommands.begin(), kCommands.end(),
                                   [&](const auto& c) { return c.first == job.command; });
      if (it == kCommands.end()) throw InputError("unknown command '" + job.command + "'");
      it->second(job, report);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    code = 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = 3;
  }
  report.Write(out, job.format);
  if (code == 0 && failed) {
    err << "error: self-test found violations\n";
    code = 3;
  }
  return code;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  JobConfig job;
  CLI::App app{"Weierstrass semigroups, Feng-Rao distances and one-point codes",
               "weierstrass"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));

  auto add_curve = [&job](CLI::App* sub) {
    sub->add_option("--field", job.field_spec, "GF(p) or GF(p^k)");
    auto* text = sub->add_option("--curve", job.curve_text, "Curve polynomial F(X,Y)");
    auto* file = sub->add_option("--curve-file", job.curve_path, "File holding F(X,Y)");
    text->excludes(file);
  };
  auto add_basis = [&job](CLI::App* sub) {
    sub->add_option("--integral-basis", job.basis_path,
                    "One rational function per line; '#' starts a comment line");
    sub->add_option("--mode", job.mode, "Triangulation mode")
        ->check(CLI::IsMember({"fast", "sequential"}));
    sub->add_option("--basis-coords", job.basis_coords,
                    "Coordinates of the integral basis")
        ->check(CLI::IsMember({"model", "original"}));
  };
  std::string range_text;
  auto add_range = [&job, &range_text](CLI::App* sub) {
    auto* m = sub->add_option("--m", job.m, "A single m");
    auto* r = sub->add_option("--m-range", range_text, "LO:HI");
    m->excludes(r);
  };
  auto add_gens = [&job](CLI::App* sub) {
    sub->add_option("--gens", job.gens, "Generators, comma separated")
        ->required()
        ->delimiter(',');
    sub->add_option("--pivot", job.pivot, "Apery pivot (default: multiplicity)");
  };

  std::vector<std::pair<CLI::App*, std::string>> leaves;
  auto leaf = [&leaves](CLI::App* parent, const std::string& name,
                        const std::string& help, const std::string& command) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    leaves.emplace_back(sub, command);
    return sub;
  };

  CLI::App* curve = app.add_subcommand("curve", "Plane curve analysis");
  curve->fallthrough();
  curve->require_subcommand(1);
  add_curve(leaf(curve, "analyze",
                 "Degree normalization, approximate roots, criterion and S_P",
                 "curve analyze"));

  CLI::App* weier = leaf(&app, "weierstrass",
                         "Full pipeline: S_P, triangulation and Gamma_P", "weierstrass");
  add_curve(weier);
  add_basis(weier);

  CLI::App* sg = app.add_subcommand("semigroup", "Numerical semigroup computations");
  sg->fallthrough();
  sg->require_subcommand(1);
  for (const char* name : {"stats", "apery", "nu", "fengrao", "symmetric", "q0"}) {
    CLI::App* sub = leaf(sg, name, std::string("semigroup ") + name,
                         std::string("semigroup ") + name);
    add_gens(sub);
    if (std::string(name) == "nu" || std::string(name) == "fengrao") add_range(sub);
  }

  CLI::App* lb = leaf(&app, "lbasis", "Basis of L(mP)", "lbasis");
  add_curve(lb);
  add_basis(lb);
  lb->add_option("--m", job.m, "m")->required();

  CLI::App* code = app.add_subcommand("code", "One-point codes C(m)");
  code->fallthrough();
  code->require_subcommand(1);
  for (const char* name : {"build", "bounds", "syndrome"}) {
    CLI::App* sub = leaf(code, name, std::string("code ") + name,
                         std::string("code ") + name);
    add_curve(sub);
    add_basis(sub);
    if (std::string(name) == "bounds") {
      add_range(sub);
    } else {
      sub->add_option("--m", job.m, "m")->required();
      sub->add_option("--ext-degree", job.ext_degree,
                      "Evaluate over the degree-k extension of the curve field");
      sub->add_flag("--improved", job.improved, "Use only values in S_P");
    }
    if (std::string(name) == "build") {
      sub->add_flag("--show-matrix", job.show_matrix, "Print the evaluation matrix");
      sub->add_flag("--exact-distance", job.exact_distance,
                    "Enumerate codewords for the minimum distance");
    }
    if (std::string(name) == "syndrome") {
      sub->add_option("--word", job.word, "Received word, comma separated");
    }
  }

  CLI::App* self = leaf(&app, "selftest", "Seeded oracle-equivalence suites", "selftest");
  self->add_option("--seed", job.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }
  for (const auto& [sub, command] : leaves) {
    if (sub->parsed()) job.command = command;
  }
  job.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kText;
  try {
    if (!range_text.empty()) job.m_range = ParseRange(range_text);
    if (const char* env = std::getenv("WEIERSTRASS_PRECISION_CEILING")) {
      const Value ceiling = ParseValue(env, "WEIERSTRASS_PRECISION_CEILING");
      if (ceiling <= 0) throw InputError("WEIERSTRASS_PRECISION_CEILING must be positive");
      job.precision_ceiling = ceiling;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return Execute(job, out, err);
}

}  // namespace weierstrass::cli
