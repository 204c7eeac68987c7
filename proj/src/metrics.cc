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

#include "qudit_ramsey/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qudit_ramsey {

namespace {

constexpr double kGridUniformity = 1e-12;
constexpr double kQfiClamp = -1e-8;

// Vertex of the parabola through (-1, left), (0, mid), (1, right), as an
// offset in grid steps and the value at the vertex.
std::pair<double, double> parabola_vertex(double left, double mid,
                                          double right) {
  const double curvature = left - 2.0 * mid + right;
  if (curvature == 0.0) return {0.0, mid};
  const double offset = 0.5 * (left - right) / curvature;
  return {offset, mid - 0.25 * (left - right) * offset};
}

ComplexVector final_state(const Protocol& protocol, const WmSystem& sys,
                          double tau, StateLabel prepared, double detuning) {
  WmSystem shifted = sys;
  shifted.detuning = detuning;
  return sequence(protocol, shifted, tau).col(prepared.index());
}

}  // namespace

void FringeSignal::validate() const {
  std::ostringstream msg;
  if (deltas.size() != probs.size()) {
    msg << "fringe signal has " << deltas.size() << " detunings but "
        << probs.size() << " probabilities";
    throw std::invalid_argument(msg.str());
  }
  if (deltas.size() < 3) {
    throw std::invalid_argument("fringe signal needs at least 3 points");
  }
  const double step = (deltas.back() - deltas.front()) /
                      static_cast<double>(deltas.size() - 1);
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("fringe grid must be strictly ascending");
  }
  for (size_t i = 0; i < deltas.size(); ++i) {
    if (i > 0) {
      const double gap = deltas[i] - deltas[i - 1];
      if (!(gap > 0.0)) {
        throw std::invalid_argument("fringe grid must be strictly ascending");
      }
      const double scale = std::max({std::abs(deltas[i]), std::abs(deltas[i - 1]), step});
      if (std::abs(gap - step) > kGridUniformity * scale) {
        msg << "fringe grid is not uniform at index " << i;
        throw std::invalid_argument(msg.str());
      }
    }
    const double p = probs[i];
    if (!std::isfinite(p) || p < -tolerance::kProbability ||
        p > 1.0 + tolerance::kProbability) {
      msg << "probability " << p << " at index " << i << " outside [0, 1]";
      throw std::invalid_argument(msg.str());
    }
  }
}

Extrema find_extrema(const FringeSignal& signal) {
  signal.validate();
  const auto& x = signal.deltas;
  const auto& y = signal.probs;
  const size_t n = y.size();
  const double step = (x.back() - x.front()) / static_cast<double>(n - 1);

  Extrema out;
  size_t i = 1;
  while (i + 1 < n) {
    // [i, j] is a run of equal samples.
    size_t j = i;
    while (j + 1 < n && y[j + 1] == y[i]) ++j;
    if (j + 1 >= n) break;  // run touches the right endpoint
    const double left = y[i - 1];
    const double right = y[j + 1];
    const bool is_max = y[i] > left && y[i] > right;
    const bool is_min = y[i] < left && y[i] < right;
    if (is_max || is_min) {
      Extremum e{};
      if (i == j) {
        const auto [offset, value] = parabola_vertex(left, y[i], right);
        e = {x[i] + offset * step, value};
      } else {
        e = {0.5 * (x[i] + x[j]), y[i]};
      }
      (is_max ? out.maxima : out.minima).push_back(e);
    }
    i = j + 1;
  }
  return out;
}

FringeMetrics fringe_metrics(const FringeSignal& signal,
                             const MetricsOptions& options) {
  const Extrema ext = find_extrema(signal);
  const auto& spacing_family =
      options.spacing == SpacingBasis::kMinima ? ext.minima : ext.maxima;
  const char* family_name =
      options.spacing == SpacingBasis::kMinima ? "minima" : "maxima";
  if (spacing_family.size() < 2) {
    throw UndefinedResolution("resolution undefined: found " +
                              std::to_string(spacing_family.size()) + " " +
                              family_name + " in the window (need >= 2)");
  }
  if (ext.maxima.empty()) {
    throw UndefinedResolution("contrast undefined: no maxima in the window");
  }

  FringeMetrics m;
  // Mean of successive spacings telescopes to (last - first) / (n - 1).
  const double mean_spacing =
      (spacing_family.back().location - spacing_family.front().location) /
      static_cast<double>(spacing_family.size() - 1);
  m.resolution = signal.window_width() / mean_spacing;

  const double edge_left = signal.probs.front();
  const double edge_right = signal.probs.back();
  double swing_sum = 0.0;
  for (const Extremum& peak : ext.maxima) {
    auto after = std::upper_bound(
        ext.minima.begin(), ext.minima.end(), peak.location,
        [](double loc, const Extremum& e) { return loc < e.location; });
    const double left =
        after == ext.minima.begin() ? edge_left : std::prev(after)->value;
    const double right = after == ext.minima.end() ? edge_right : after->value;
    swing_sum += peak.value - 0.5 * (left + right);
  }
  m.contrast = swing_sum / static_cast<double>(ext.maxima.size());
  m.rci = m.resolution * m.contrast;

  m.maxima.reserve(ext.maxima.size());
  for (const auto& e : ext.maxima) m.maxima.push_back(e.location);
  m.minima.reserve(ext.minima.size());
  for (const auto& e : ext.minima) m.minima.push_back(e.location);
  return m;
}

double qfi(const Protocol& protocol, const WmSystem& sys, double tau,
           double detuning, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("qfi: finite-difference step must be > 0");
  }
  const StateLabel prepared = signal_rule_for(protocol.dim, protocol.kind).prepared;
  auto state = [&](double d) {
    return final_state(protocol, sys, tau, prepared, d);
  };

  const ComplexVector psi = state(detuning);
  const ComplexVector coarse =
      (state(detuning + step) - state(detuning - step)) / (2.0 * step);
  const double half = 0.5 * step;
  const ComplexVector fine =
      (state(detuning + half) - state(detuning - half)) / (2.0 * half);
  const ComplexVector dpsi = (4.0 * fine - coarse) / 3.0;

  const double norm_sq = dpsi.squaredNorm();
  const double overlap = std::norm(psi.dot(dpsi));
  const double value = 4.0 * (norm_sq - overlap);
  if (value < 0.0) {
    if (value >= kQfiClamp) return 0.0;
    std::ostringstream msg;
    msg << "qfi: negative Fisher information " << value << " at detuning "
        << detuning;
    throw std::runtime_error(msg.str());
  }
  return value;
}

}  // namespace qudit_ramsey
