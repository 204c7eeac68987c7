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

#include <string>
#include <vector>

namespace qudit_ramsey::svg {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "detuning";
  std::string y_label = "probability";
  std::vector<std::string> legend;  // extra parameter lines
  int width = 720;
  int height = 440;
};

/// Static line plot: one polyline per series, axes with min/max ticks and a
/// text legend. Throws std::invalid_argument on empty or ragged series.
std::string render(const std::vector<Series>& series, const PlotOptions& options);

}  // namespace qudit_ramsey::svg
