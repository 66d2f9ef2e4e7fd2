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

#ifndef WEIERSTRASS_TOOLS_CLI_H_
#define WEIERSTRASS_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "report.h"
#include "weierstrass/semigroup.h"

namespace weierstrass::cli {

// Everything a subcommand needs, validated before any computation.
struct JobConfig {
  std::string command;  // e.g. "semigroup fengrao"
  OutputFormat format = OutputFormat::kText;

  std::string field_spec;
  std::string curve_text;
  std::string curve_path;
  std::string basis_path;
  std::string basis_coords = "model";
  std::string mode = "fast";

  std::vector<Value> gens;
  std::optional<Value> pivot;
  std::optional<Value> m;
  std::optional<std::pair<Value, Value>> m_range;

  int ext_degree = 1;
  bool improved = false;
  bool show_matrix = false;
  bool exact_distance = false;
  std::string word;

  std::uint64_t seed = 1;
  // From WEIERSTRASS_PRECISION_CEILING.
  std::optional<std::int64_t> precision_ceiling;
};

// Parses `args` (without the program name), runs the subcommand and writes
// the report to `out` and diagnostics to `err`. Returns 0 on success, 1 for
// usage and input errors, 2 for failed mathematical preconditions and 3 for
// internal inconsistencies.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Runs an already validated job.
int Execute(const JobConfig& job, std::ostream& out, std::ostream& err);

}  // namespace weierstrass::cli

#endif  // WEIERSTRASS_TOOLS_CLI_H_
