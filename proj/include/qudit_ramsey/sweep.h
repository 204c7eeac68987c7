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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qudit_ramsey/metrics.h"
#include "qudit_ramsey/protocols.h"

namespace qudit_ramsey {

inline constexpr int kDefaultSweepPoints = 4001;

struct SweepSpec {
  Protocol protocol;
  double tau = defaults::kTau;
  double pulse_duration = defaults::kPulseDuration;
  std::optional<double> rabi;  // unset: pi / (2T)
  double delta_min = defaults::kDeltaMin;
  double delta_max = defaults::kDeltaMax;
  int points = kDefaultSweepPoints;

  double effective_rabi() const;
  /// Throws std::invalid_argument on an inconsistent spec (delta_min >=
  /// delta_max, even or < 3 points, negative tau, bad system parameters).
  void validate() const;
};

/// How per-detuning evaluations are scheduled. Results are bit-identical
/// either way.
struct Execution {
  unsigned threads = 0;  // 0: hardware concurrency; 1: serial

  static Execution serial() { return {1}; }
  static Execution parallel(unsigned n = 0) { return {n}; }
};

/// `points` equally spaced detunings from lo to hi, endpoints exact. For odd
/// `points` and a symmetric window the centre sample is exactly zero.
std::vector<double> uniform_grid(double lo, double hi, int points);

/// Evaluates the protocol signal at every grid detuning. Any failing point
/// aborts the whole sweep.
FringeSignal run_sweep(const SweepSpec& spec, Execution exec = {});

struct MetricTableRow {
  std::string label;
  Protocol protocol;
  double resolution = 0.0;
  double contrast = 0.0;
  double rci = 0.0;
  std::string error;  // non-empty when the metrics are undefined

  bool ok() const { return error.empty(); }
};

struct ReferenceRow {
  const char* label;
  double resolution;
  double contrast;
  double rci;
};

/// Published resolution, contrast and RCI at tau = 10, Omega = pi/2, T = 1,
/// Delta in [-1, 1], in table order.
const std::array<ReferenceRow, 8>& table_one_reference();

/// Protocols of the RCI table in order: 2, sqrtX3, QFT3, 3, 4, 5, 6, 7.
std::array<Protocol, 8> table_one_protocols();

/// Sweeps every table protocol at the caption parameters and scores it.
/// Rows whose metrics are undefined carry an error message instead of being
/// dropped. Requires points >= 2001 (and odd).
std::vector<MetricTableRow> table_one(int points = kDefaultSweepPoints,
                                      Execution exec = {});

}  // namespace qudit_ramsey
