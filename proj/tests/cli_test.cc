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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.h"
#include "weierstrass/poly_text.h"
#include "weierstrass/semigroup.h"

namespace weierstrass::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> GoldenArgs(std::vector<std::string> head) {
  for (const char* s : {"--field", "GF(2)", "--curve-file"}) head.push_back(s);
  head.push_back(testing::DataPath("golden_curve.txt"));
  head.push_back("--integral-basis");
  head.push_back(testing::DataPath("golden_basis.txt"));
  return head;
}

bool Has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(CliTest, CurveAnalyzeGolden) {
  const Outcome r = RunCli({"curve", "analyze", "--field", "GF(2)", "--curve", "Y^8+Y^2+X^3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "k: 3\n"));
  EXPECT_TRUE(Has(r.out, "h: 2\n"));
  EXPECT_TRUE(Has(r.out, "delta: 9,3,8\n"));
  EXPECT_TRUE(Has(r.out, "F_2: Y^3 + Y^2 + Y + X + 1\n"));
  EXPECT_TRUE(Has(r.out, "one-branch: yes\n"));
  EXPECT_TRUE(Has(r.out, "S_P: <9,3,8>\n"));
}

TEST(CliTest, HypothesisHExitCode) {
  const Outcome r = RunCli({"curve", "analyze", "--field", "GF(2)", "--curve", "Y^8+Y+X^10+X^3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(Has(r.err, "hypothesis (H)"));
}

TEST(CliTest, TwoBranchesExitCode) {
  const Outcome r = RunCli({"curve", "analyze", "--field", "GF(5)", "--curve", "(Y-X)(Y-2X)+1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(Has(r.out, "one-branch: no\n"));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({"semigroup", "nu", "--gens", "3,8", "--bogus"}).code, 1);
  EXPECT_EQ(RunCli({"semigroup", "nu"}).code, 1);
  EXPECT_EQ(RunCli({}).code, 1);
  EXPECT_EQ(RunCli({"semigroup", "nu", "--gens", "3,8", "--m", "8", "--m-range", "0:9"}).code, 1);
  EXPECT_EQ(RunCli({"semigroup", "nu", "--gens", "3,8", "--m-range", "9:3"}).code, 1);
  EXPECT_EQ(RunCli({"semigroup", "nu", "--gens", "3,8", "--m", "5"}).code, 1);
  EXPECT_EQ(RunCli({"semigroup", "stats", "--gens", "4,6"}).code, 2);
  EXPECT_EQ(RunCli({"curve", "analyze", "--curve", "Y-X"}).code, 1);
  EXPECT_EQ(RunCli({"curve", "analyze", "--field", "GF(2)", "--curve", "Y^"}).code, 1);
  const Outcome missing = RunCli({"weierstrass", "--field", "GF(2)", "--curve", "Y^8+Y^2+X^3"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_TRUE(Has(missing.err, "--integral-basis"));
  const Outcome help = RunCli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_TRUE(Has(help.out, "semigroup"));
}

TEST(CliTest, FengRaoRowMatchesLibrary) {
  const Outcome r = RunCli({"semigroup", "fengrao", "--gens", "6,10,15", "--m", "30",
                            "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const NumericalSemigroup s = NumericalSemigroup::FromGenerators({6, 10, 15});
  const std::string row = "30," + std::to_string(nu(s, 30)) + "," +
                          std::to_string(feng_rao(s, 30)) + "," +
                          std::to_string(30 + 1 - 2 * s.genus()) + "," +
                          std::to_string(minimum_formula(s, 30)) + ",[@]," +
                          std::to_string(feng_rao_symmetric(s, 30)) + "\n";
  EXPECT_TRUE(Has(r.out, row)) << r.out;
}

TEST(CliTest, NuTableMatchesLibrary) {
  const Outcome r = RunCli({"semigroup", "nu", "--gens", "4,6,13", "--m-range", "0:40",
                            "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const NumericalSemigroup s = NumericalSemigroup::FromGenerators({4, 6, 13});
  std::string expected = "m,nu\n";
  for (Value m : s.elements_up_to(40)) {
    expected += std::to_string(m) + "," + std::to_string(nu(s, m)) + "\n";
  }
  EXPECT_EQ(r.out, expected);
}

TEST(CliTest, Q0Report) {
  const Outcome r = RunCli({"semigroup", "q0", "--gens", "8,10,12,13"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Has(r.out, "conductor: 28\n"));
  EXPECT_TRUE(Has(r.out, "q0: 25\n"));
  EXPECT_TRUE(Has(r.out, "m0: 29\n"));
  EXPECT_TRUE(Has(r.out, "threshold (oracle): 30\n"));
  EXPECT_TRUE(Has(r.out, "telescopic ordering: 8,12,10,13\n"));
  EXPECT_EQ(RunCli({"semigroup", "q0", "--gens", "3,4,5"}).code, 2);
}

TEST(CliTest, CsvQuotesLists) {
  const Outcome r = RunCli({"--format", "csv", "semigroup", "stats", "--gens", "9,3,8"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Has(r.out, "generators,\"9,3,8\"\n"));
  EXPECT_TRUE(Has(r.out, "genus,7\n"));
}

TEST(CliTest, WeierstrassPipeline) {
  for (const char* mode : {"fast", "sequential"}) {
    std::vector<std::string> args = GoldenArgs({"weierstrass"});
    args.push_back("--mode");
    args.push_back(mode);
    const Outcome r = RunCli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(Has(r.out, "added values: 13,7,10,4\n"));
    EXPECT_TRUE(Has(r.out, "Gamma_P: <3,4>\n"));
    EXPECT_TRUE(Has(r.out, "gaps: 1,2,5\n"));
    EXPECT_TRUE(Has(r.out, "genus: 3\n"));
  }
}

TEST(CliTest, BasisInOriginalCoordinates) {
  const PlaneModel model = testing::GoldenModel();
  const auto path = std::filesystem::temp_directory_path() / "weierstrass_original_basis.txt";
  {
    std::ofstream file(path);
    file << "# original coordinates\n\n";
    for (const RationalFunction& f : testing::GoldenBasis(model.field)) {
      file << "(" << FormatBiPoly(model.to_original(f.numerator())) << ") / ("
           << FormatBiPoly(model.to_original(f.denominator())) << ")\n";
    }
  }
  const Outcome r = RunCli({"weierstrass", "--field", "GF(2)", "--curve", "Y^8+Y^2+X^3",
                            "--integral-basis", path.string(), "--basis-coords", "original"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "added values: 13,7,10,4\n"));
}

TEST(CliTest, LBasisAndCodes) {
  std::vector<std::string> args = GoldenArgs({"lbasis"});
  args.insert(args.end(), {"--m", "10"});
  Outcome r = RunCli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "dimension: 8\n"));

  args = GoldenArgs({"code", "build"});
  args.insert(args.end(), {"--m", "5", "--ext-degree", "3", "--exact-distance"});
  r = RunCli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "n: 6\n"));
  EXPECT_TRUE(Has(r.out, "rank: 3\n"));
  EXPECT_TRUE(Has(r.out, "Feng-Rao bound: 3\n"));
  EXPECT_TRUE(Has(r.out, "minimum distance: 3\n"));

  args = GoldenArgs({"code", "syndrome"});
  args.insert(args.end(), {"--m", "5", "--ext-degree", "3", "--word", "1,0,0,0,0,0"});
  r = RunCli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "codeword: no\n"));

  args = GoldenArgs({"code", "bounds"});
  args.insert(args.end(), {"--m-range", "0:14", "--format", "csv"});
  r = RunCli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "10,5,6,1,2\n"));
}

TEST(CliTest, DeterministicOutput) {
  const std::vector<std::string> args = GoldenArgs({"weierstrass"});
  EXPECT_EQ(RunCli(args).out, RunCli(args).out);
  const std::vector<std::string> self = {"selftest", "--seed", "9"};
  const Outcome a = RunCli(self);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, RunCli(self).out);
}

TEST(CliTest, PrecisionCeilingFromEnvironment) {
  ::setenv("WEIERSTRASS_PRECISION_CEILING", "8", 1);
  const Outcome low = RunCli(GoldenArgs({"weierstrass"}));
  ::setenv("WEIERSTRASS_PRECISION_CEILING", "zero", 1);
  const Outcome bad = RunCli(GoldenArgs({"weierstrass"}));
  ::unsetenv("WEIERSTRASS_PRECISION_CEILING");
  EXPECT_EQ(low.code, 3) << low.err;
  EXPECT_EQ(bad.code, 1);
}

}  // namespace
}  // namespace weierstrass::cli
