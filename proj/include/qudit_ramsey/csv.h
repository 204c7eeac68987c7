// Copyright 2026 The qudit-ramsey Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

// Self-describing CSV: '#'-prefixed key=value header lines, one column-name
// line, then comma-separated rows. LF line endings, '.' decimal separator.

namespace qudit_ramsey::csv {

using Header = std::vector<std::pair<std::string, std::string>>;

/// Fixed-point with `decimals` digits after the point ("1.000000000").
std::string fixed(double value, int decimals = 9);
/// `digits` significant digits, shortest form ("3.58314178").
std::string significant(double value, int digits = 9);
/// Round-trip exact (17 significant digits); used for parameter echoes.
std::string exact(double value);

struct Table {
  Header header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Value of a header key, or empty if absent.
  std::string header_value(const std::string& key) const;
  /// Column index by name; throws std::out_of_range if absent.
  size_t column(const std::string& name) const;
  /// Parses rows[row][column(name)] as a double.
  double number(size_t row, const std::string& name) const;
};

void write(std::ostream& out, const Table& table);
/// Throws std::runtime_error on malformed input (ragged rows, missing
/// column line).
Table read(std::istream& in);

}  // namespace qudit_ramsey::csv
