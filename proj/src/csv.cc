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

#include "qudit_ramsey/csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qudit_ramsey::csv {

namespace {

std::string printf_double(const char* fmt, int precision, double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, fmt, precision, value);
  std::string s(buf, static_cast<size_t>(len));
  // Avoid "-0.000000000" for tiny negative round-off.
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string fixed(double value, int decimals) {
  return printf_double("%.*f", decimals, value);
}

std::string significant(double value, int digits) {
  return printf_double("%.*g", digits, value);
}

std::string exact(double value) { return printf_double("%.*g", 17, value); }

std::string Table::header_value(const std::string& key) const {
  for (const auto& [k, v] : header) {
    if (k == key) return v;
  }
  return {};
}

size_t Table::column(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no CSV column named '" + name + "'");
}

double Table::number(size_t row, const std::string& name) const {
  const std::string& cell = rows.at(row).at(column(name));
  if (cell == "nan") return std::nan("");
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw std::runtime_error("CSV cell '" + cell + "' is not a number");
  }
  return value;
}

void write(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.header) {
    out << "# " << key << '=' << value << '\n';
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

Table read(std::istream& in) {
  Table table;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (have_columns) throw std::runtime_error("CSV header line after data");
      std::string body = line.substr(1);
      if (body.starts_with(' ')) body.erase(0, 1);
      const size_t eq = body.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("CSV header line without key=value: " + line);
      }
      table.header.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    auto cells = split(line);
    if (!have_columns) {
      table.columns = std::move(cells);
      have_columns = true;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(cells.size()) +
                               " cells, expected " +
                               std::to_string(table.columns.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (!have_columns) throw std::runtime_error("CSV has no column line");
  return table;
}

}  // namespace qudit_ramsey::csv
