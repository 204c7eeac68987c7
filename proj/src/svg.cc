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

#include "qudit_ramsey/svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qudit_ramsey/csv.h"

namespace qudit_ramsey::svg {

namespace {

constexpr std::array<const char*, 6> kColors = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render(const std::vector<Series>& series, const PlotOptions& options) {
  if (series.empty()) throw std::invalid_argument("svg: nothing to plot");
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const Series& s : series) {
    if (s.x.size() != s.y.size() || s.x.size() < 2) {
      throw std::invalid_argument("svg: series '" + s.name +
                                  "' needs >= 2 points and matching x/y");
    }
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  y_lo = std::min(y_lo, 0.0);
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;

  const double left = 70, right = 20, top = 40, bottom = 60;
  const double pw = options.width - left - right;
  const double ph = options.height - top - bottom;
  auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width
      << ' ' << options.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << options.width / 2 << "\" y=\"22\" text-anchor=\"middle\""
        << " font-size=\"14\">" << escape(options.title) << "</text>\n";
  }
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Ticks at both ends of each axis and at x = 0 when inside the window.
  std::vector<double> x_ticks{x_lo, x_hi};
  if (x_lo < 0.0 && x_hi > 0.0) x_ticks.push_back(0.0);
  for (double t : x_ticks) {
    out << "<line x1=\"" << px(t) << "\" y1=\"" << top + ph << "\" x2=\"" << px(t)
        << "\" y2=\"" << top + ph + 5 << "\" stroke=\"black\"/>"
        << "<text x=\"" << px(t) << "\" y=\"" << top + ph + 18
        << "\" text-anchor=\"middle\">" << csv::significant(t, 4) << "</text>\n";
  }
  for (double t : {y_lo, y_hi}) {
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << py(t) << "\" x2=\"" << left
        << "\" y2=\"" << py(t) << "\" stroke=\"black\"/>"
        << "<text x=\"" << left - 8 << "\" y=\"" << py(t) + 4
        << "\" text-anchor=\"end\">" << csv::significant(t, 4) << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << options.height - 28
      << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 16 " << top + ph / 2 << ")\">"
      << escape(options.y_label) << "</text>\n";

  for (size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    out << "<polyline fill=\"none\" stroke-width=\"1.2\" stroke=\""
        << kColors[k % kColors.size()] << "\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    out << "\"/>\n";
  }

  // Legend: series names, then parameter lines.
  double ly = top + 14;
  for (size_t k = 0; k < series.size(); ++k, ly += 15) {
    out << "<text x=\"" << left + 8 << "\" y=\"" << ly << "\" fill=\""
        << kColors[k % kColors.size()] << "\">" << escape(series[k].name)
        << "</text>\n";
  }
  double by = options.height - 10;
  std::ostringstream params;
  for (size_t i = 0; i < options.legend.size(); ++i) {
    params << (i ? ", " : "") << options.legend[i];
  }
  if (!options.legend.empty()) {
    out << "<text x=\"" << left << "\" y=\"" << by << "\" fill=\"#444\">"
        << escape(params.str()) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qudit_ramsey::svg
