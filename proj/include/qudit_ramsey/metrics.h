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

#include <stdexcept>
#include <string>
#include <vector>

#include "qudit_ramsey/protocols.h"
#include "qudit_ramsey/wm_model.h"

namespace qudit_ramsey {

/// Parameters a signal was generated with. Informational only.
struct SignalMeta {
  Protocol protocol;
  double tau = defaults::kTau;
  double rabi = defaults::kRabi;
  double pulse_duration = defaults::kPulseDuration;
};

/// Ramsey signal sampled on a uniform, strictly ascending detuning grid.
struct FringeSignal {
  std::vector<double> deltas;
  std::vector<double> probs;
  SignalMeta meta;

  /// Throws std::invalid_argument unless there are >= 3 points, the grid is
  /// strictly ascending and uniform (1e-12 relative), and every probability
  /// lies in [-1e-9, 1 + 1e-9].
  void validate() const;
  double window_width() const { return deltas.back() - deltas.front(); }
};

struct Extremum {
  double location;  // detuning, refined by a local parabola
  double value;     // refined signal value
};

struct Extrema {
  std::vector<Extremum> maxima;
  std::vector<Extremum> minima;
};

/// Interior local extrema by three-point comparison. Runs of equal samples
/// collapse to their midpoint; the grid endpoints are never extrema.
Extrema find_extrema(const FringeSignal& signal);

/// Which extremum family sets the fringe spacing for the resolution.
enum class SpacingBasis {
  kMinima,  // default; see fringe_metrics
  kMaxima,
};

struct MetricsOptions {
  SpacingBasis spacing = SpacingBasis::kMinima;
};

struct FringeMetrics {
  double resolution = 0.0;  // cycles per window
  double contrast = 0.0;
  double rci = 0.0;         // resolution * contrast
  std::vector<double> maxima;
  std::vector<double> minima;
};

/// Thrown when a signal has too few extrema to define a fringe spacing.
class UndefinedResolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolution = window width / mean spacing of successive fringe extrema
/// (minima by default; the nodes of a fringe pattern are sharp and
/// unaffected by the small sub-peaks that some protocols produce between
/// main fringes).
///
/// Contrast = mean over maxima of peak value minus the mean of the two
/// flanking baselines. A baseline is the nearest minimum on that side or,
/// when the peak has no minimum on that side, the signal value at the
/// window edge.
///
/// Throws UndefinedResolution with fewer than two extrema of the spacing
/// family or no maxima.
FringeMetrics fringe_metrics(const FringeSignal& signal,
                             const MetricsOptions& options = {});

/// Default central-difference step for qfi.
inline constexpr double kQfiStep = 1e-5;

/// Quantum Fisher information of |psi(Delta)> = U(Delta)|prepared> with
/// respect to the detuning, 4 (<d psi|d psi> - |<psi|d psi>|^2). The state
/// derivative is a Richardson-extrapolated central difference with steps h
/// and h/2. Small negative round-off is clamped to zero.
double qfi(const Protocol& protocol, const WmSystem& sys, double tau,
           double detuning, double step = kQfiStep);

}  // namespace qudit_ramsey
