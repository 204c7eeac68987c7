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

#include "qudit_ramsey/wm_model.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qudit_ramsey {

namespace {

void require_tau(double tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::invalid_argument("interrogation time tau must be finite and >= 0");
  }
}

void require_qutrit(const WmSystem& sys, const char* what) {
  sys.validate();
  if (sys.dim != 3) {
    throw std::invalid_argument(std::string(what) +
                                ": closed form exists only for D = 3, got D = " +
                                std::to_string(sys.dim));
  }
  if (sys.detuning == 0.0 && sys.rabi == 0.0) {
    throw std::invalid_argument(std::string(what) +
                                ": generalized Rabi frequency is zero");
  }
}

// Shared pieces of the closed-form qutrit expressions.
struct QutritTerms {
  double delta;
  double rabi;
  double w2;         // Delta^2 + Omega^2
  double cos_area;   // cos(W T)
  Complex amp;       // Delta - Delta cos A - i W sin A
};

QutritTerms qutrit_terms(const WmSystem& sys) {
  const double delta = sys.detuning;
  const double rabi = sys.rabi;
  const double w2 = delta * delta + rabi * rabi;
  const double w = std::sqrt(w2);
  const double area = w * sys.pulse_duration;
  const double c = std::cos(area);
  const double s = std::sin(area);
  return {delta, rabi, w2, c, Complex(delta - delta * c, -w * s)};
}

}  // namespace

WmSystem WmSystem::calibrated(int dim, double pulse_duration, double detuning) {
  WmSystem sys{dim, calibrated_rabi(pulse_duration), pulse_duration, detuning};
  sys.validate();
  return sys;
}

void WmSystem::validate() const {
  std::ostringstream msg;
  if (dim < 2 || dim > defaults::kMaxDim) {
    msg << "dimension must be in [2, " << defaults::kMaxDim << "], got " << dim;
  } else if (!std::isfinite(rabi)) {
    msg << "Rabi frequency must be finite";
  } else if (!std::isfinite(pulse_duration) || pulse_duration <= 0.0) {
    msg << "pulse duration must be finite and > 0, got " << pulse_duration;
  } else if (!std::isfinite(detuning)) {
    msg << "detuning must be finite";
  } else {
    return;
  }
  throw std::invalid_argument(msg.str());
}

ComplexMatrix wm_hamiltonian(const WmSystem& sys) {
  sys.validate();
  const int n = sys.dim;
  const double centre = 0.5 * (n + 1);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int d = 1; d <= n; ++d) {
    h(d - 1, d - 1) = (d - centre) * sys.detuning;
  }
  for (int d = 1; d < n; ++d) {
    const double coupling = 0.5 * std::sqrt(static_cast<double>(d * (n - d))) * sys.rabi;
    h(d, d - 1) = coupling;
    h(d - 1, d) = coupling;
  }
  return h;
}

ComplexMatrix free_evolution(const WmSystem& sys, double tau) {
  sys.validate();
  require_tau(tau);
  const int n = sys.dim;
  const double centre = 0.5 * (n + 1);
  ComplexMatrix f = ComplexMatrix::Zero(n, n);
  for (int d = 1; d <= n; ++d) {
    f(d - 1, d - 1) = std::polar(1.0, -tau * (d - centre) * sys.detuning);
  }
  return f;
}

ComplexMatrix pulse_propagator(const WmSystem& sys) {
  return unitary_exp(wm_hamiltonian(sys), sys.pulse_duration);
}

ComplexMatrix analytic_qutrit_propagator(const WmSystem& sys) {
  require_qutrit(sys, "analytic_qutrit_propagator");
  const auto [delta, rabi, w2, c, amp] = qutrit_terms(sys);
  const Complex amp_c = std::conj(amp);
  const double d2 = delta * delta;
  const double r2 = rabi * rabi;
  const double edge = rabi / std::numbers::sqrt2;

  ComplexMatrix r(3, 3);
  r(0, 0) = d2 - delta * amp + 0.5 * r2 * (1.0 + c);
  r(0, 1) = edge * amp;
  r(0, 2) = 0.5 * r2 * (c - 1.0);
  r(1, 0) = edge * amp;
  r(1, 1) = d2 + r2 * c;
  r(1, 2) = -edge * amp_c;
  r(2, 0) = 0.5 * r2 * (c - 1.0);
  r(2, 1) = -edge * amp_c;
  r(2, 2) = d2 - delta * amp_c + 0.5 * r2 * (1.0 + c);
  return r / w2;
}

double analytic_qutrit_ramsey(const WmSystem& sys, double tau) {
  require_qutrit(sys, "analytic_qutrit_ramsey");
  require_tau(tau);
  const auto [delta, rabi, w2, c, amp] = qutrit_terms(sys);
  const double r2 = rabi * rabi;
  const double centre = delta * delta + r2 * c;
  const Complex phase = std::polar(1.0, delta * tau);
  const Complex sum = 2.0 * centre * centre + phase * amp * amp * r2 +
                      std::conj(phase) * r2 * std::conj(amp) * std::conj(amp);
  return std::norm(sum) / (4.0 * w2 * w2 * w2 * w2);
}

double ideal_qubit_fringe(double detuning, double tau) {
  const double c = std::cos(0.5 * detuning * tau);
  return c * c;
}

double transition_probability(const ComplexMatrix& u, StateLabel to,
                              StateLabel from) {
  const auto n = u.rows();
  if (to.value < 1 || to.value > n || from.value < 1 || from.value > n) {
    throw std::out_of_range("state label outside |1>..|" + std::to_string(n) + ">");
  }
  return std::norm(u(to.index(), from.index()));
}

}  // namespace qudit_ramsey
