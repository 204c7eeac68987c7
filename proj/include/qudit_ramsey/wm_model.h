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

#include <numbers>

#include "qudit_ramsey/linalg.h"

namespace qudit_ramsey {

/// Physical state label |1>..|D>. Conversion to a matrix index happens
/// only through index().
struct StateLabel {
  int value = 1;

  constexpr Eigen::Index index() const { return value - 1; }
  friend constexpr bool operator==(StateLabel, StateLabel) = default;
  friend constexpr auto operator<=>(StateLabel, StateLabel) = default;
};

/// Caption parameters used throughout the fringe figures and the RCI table.
namespace defaults {
inline constexpr double kTau = 10.0;
inline constexpr double kPulseDuration = 1.0;
inline constexpr double kRabi = std::numbers::pi / 2.0;
inline constexpr double kDeltaMin = -1.0;
inline constexpr double kDeltaMax = 1.0;
inline constexpr int kMaxDim = 16;
}  // namespace defaults

/// A D-level system driven by a single square pulse with Wigner-Majorana
/// couplings. Angular frequencies are in inverse units of the times.
struct WmSystem {
  int dim = 2;
  double rabi = defaults::kRabi;
  double pulse_duration = defaults::kPulseDuration;
  double detuning = 0.0;

  /// Rabi frequency pi/(2T): each pulse is a pi/2 pulse on resonance.
  static constexpr double calibrated_rabi(double pulse_duration) {
    return std::numbers::pi / (2.0 * pulse_duration);
  }
  static WmSystem calibrated(int dim, double pulse_duration, double detuning);

  /// Throws std::invalid_argument when D < 2, D > kMaxDim, T <= 0 or a
  /// parameter is non-finite.
  void validate() const;
};

/// Tridiagonal spin-ladder Hamiltonian: diagonal (d - (D+1)/2) Delta,
/// couplings sqrt(d (D-d)) Omega / 2.
ComplexMatrix wm_hamiltonian(const WmSystem& sys);

/// Diagonal free evolution over interrogation time tau >= 0.
ComplexMatrix free_evolution(const WmSystem& sys, double tau);

/// R(T) = exp(-i H T).
ComplexMatrix pulse_propagator(const WmSystem& sys);

/// Closed-form qutrit pulse propagator. Uses the generalized Rabi frequency
/// W = sqrt(Delta^2 + Omega^2), pulse area A = W T and the complex
/// amplitude Delta - Delta cos A - i W sin A. Requires D = 3 and W > 0.
ComplexMatrix analytic_qutrit_propagator(const WmSystem& sys);

/// Closed-form survival probability of the central qutrit state after
/// pulse, free evolution over tau, pulse. Requires D = 3 and W > 0.
double analytic_qutrit_ramsey(const WmSystem& sys, double tau);

/// cos^2(Delta tau / 2): qubit fringe for ideal, instantaneous pi/2 pulses.
double ideal_qubit_fringe(double detuning, double tau);

/// |<to|U|from>|^2.
double transition_probability(const ComplexMatrix& u, StateLabel to,
                              StateLabel from);

}  // namespace qudit_ramsey
