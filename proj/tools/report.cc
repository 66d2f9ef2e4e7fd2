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

#include "report.h"

#include <algorithm>
#include <utility>

namespace weierstrass::cli {

std::string CsvEscape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

Report::Block& Report::FieldBlock() {
  if (blocks_.empty() || blocks_.back().is_table) {
    Block block;
    block.header = {"key", "value"};
    blocks_.push_back(std::move(block));
  }
  return blocks_.back();
}

void Report::Field(std::string key, std::string value) {
  FieldBlock().rows.push_back({std::move(key), std::move(value)});
}

void Report::Table(std::vector<std::string> header,
                   std::vector<std::vector<std::string>> rows) {
  Block block;
  block.is_table = true;
  block.header = std::move(header);
  block.rows = std::move(rows);
  blocks_.push_back(std::move(block));
}

void Report::Write(std::ostream& out, OutputFormat format) const {
  bool first = true;
  for (const Block& block : blocks_) {
    if (!first) out << '\n';
    first = false;
    if (format == OutputFormat::kCsv) {
      auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out << ',';
          out << CsvEscape(cells[i]);
        }
        out << '\n';
      };
      line(block.header);
      for (const auto& row : block.rows) line(row);
      continue;
    }
    if (!block.is_table) {
      for (const auto& row : block.rows) out << row[0] << ": " << row[1] << '\n';
      continue;
    }
    std::vector<std::size_t> width(block.header.size(), 0);
    auto measure = [&width](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], cells[i].size());
      }
    };
    measure(block.header);
    for (const auto& row : block.rows) measure(row);
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        text += cells[i];
        if (i + 1 < cells.size()) {
          text.append(width[i] - cells[i].size() + 2, ' ');
        }
      }
      out << text << '\n';
    };
    line(block.header);
    for (const auto& row : block.rows) line(row);
  }
}

}  // namespace weierstrass::cli
