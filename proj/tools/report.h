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

#ifndef WEIERSTRASS_TOOLS_REPORT_H_
#define WEIERSTRASS_TOOLS_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

namespace weierstrass::cli {

enum class OutputFormat { kText, kCsv };

// Ordered key/value lines and tables. Text output aligns table columns;
// CSV output writes each block with a header row and separates blocks with
// a blank line.
class Report {
 public:
  void Field(std::string key, std::string value);
  void Table(std::vector<std::string> header,
             std::vector<std::vector<std::string>> rows);
  void Write(std::ostream& out, OutputFormat format) const;

 private:
  struct Block {
    bool is_table = false;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
  };
  Block& FieldBlock();

  std::vector<Block> blocks_;
};

std::string CsvEscape(const std::string& cell);

}  // namespace weierstrass::cli

#endif  // WEIERSTRASS_TOOLS_REPORT_H_
