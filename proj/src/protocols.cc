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

#include "qudit_ramsey/protocols.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qudit_ramsey {

namespace {

void require_gate_dim(int dim) {
  if (dim < 2 || dim > defaults::kMaxDim) {
    throw std::invalid_argument("gate dimension must be in [2, " +
                                std::to_string(defaults::kMaxDim) + "], got " +
                                std::to_string(dim));
  }
}

// exp(i pi * numerator / dim), reduced mod 2 dim so large exponents keep
// full precision.
Complex root_of_unity_half_steps(long numerator, int dim) {
  const long period = 2L * dim;
  const long r = ((numerator % period) + period) % period;
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / dim);
}

}  // namespace

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kWmRamsey:
      return "wm";
    case ProtocolKind::kQft:
      return "qft";
    case ProtocolKind::kSqrtX:
      return "sqrtx";
  }
  return "unknown";
}

ProtocolKind parse_protocol_kind(std::string_view name) {
  if (name == "wm") return ProtocolKind::kWmRamsey;
  if (name == "qft") return ProtocolKind::kQft;
  if (name == "sqrtx" || name == "sqrt-x") return ProtocolKind::kSqrtX;
  throw std::invalid_argument("unknown protocol '" + std::string(name) +
                              "' (expected wm, qft or sqrtx)");
}

std::string Protocol::label() const {
  switch (kind) {
    case ProtocolKind::kWmRamsey:
      return std::to_string(dim);
    case ProtocolKind::kQft:
      return "QFT" + std::to_string(dim);
    case ProtocolKind::kSqrtX:
      return "sqrtX" + std::to_string(dim);
  }
  return "?";
}

SignalRule signal_rule_for(int dim, ProtocolKind kind) {
  if (dim < 2 || dim > defaults::kMaxDim) {
    throw std::invalid_argument("no signal rule for D = " + std::to_string(dim));
  }
  if (kind != ProtocolKind::kWmRamsey) {
    if (dim == 2) return {StateLabel{1}, {StateLabel{2}}};
    if (dim == 3) return {StateLabel{2}, {StateLabel{2}}};
    throw std::invalid_argument("protocol '" + std::string(to_string(kind)) +
                                "' has no signal rule for D = " +
                                std::to_string(dim) + " (supported: D = 2, 3)");
  }
  if (dim == 2) return {StateLabel{1}, {StateLabel{2}}};
  if (dim == 3) return {StateLabel{2}, {StateLabel{2}}};
  // Even D: the lower m = -1/2 state. Odd D: the central m = 0 state.
  const int prepared = dim % 2 == 0 ? dim / 2 : (dim + 1) / 2;
  return {StateLabel{prepared},
          {StateLabel{prepared - 1}, StateLabel{prepared + 1}}};
}

SignalRule mirrored(const SignalRule& rule, int dim) {
  auto flip = [dim](StateLabel s) { return StateLabel{dim + 1 - s.value}; };
  SignalRule out{flip(rule.prepared), {}};
  out.measured.reserve(rule.measured.size());
  for (StateLabel s : rule.measured) out.measured.push_back(flip(s));
  return out;
}

ComplexMatrix ramsey_sequence(const WmSystem& sys, double tau) {
  const ComplexMatrix pulse = pulse_propagator(sys);
  return pulse * free_evolution(sys, tau) * pulse;
}

ComplexMatrix qft_gate(int dim) {
  require_gate_dim(dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix g(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int k = 0; k < dim; ++k) {
      g(m, k) = norm * root_of_unity_half_steps(2L * m * k, dim);
    }
  }
  return g;
}

ComplexMatrix clock_gate(int dim) {
  require_gate_dim(dim);
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) z(k, k) = root_of_unity_half_steps(2L * k, dim);
  return z;
}

ComplexMatrix shift_gate(int dim) {
  const ComplexMatrix f = qft_gate(dim);
  return f * clock_gate(dim) * f.adjoint();
}

ComplexMatrix sqrt_x_gate(int dim) {
  const ComplexMatrix f = qft_gate(dim);
  ComplexMatrix root = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) root(k, k) = root_of_unity_half_steps(k, dim);
  return f * root * f.adjoint();
}

ComplexMatrix gate_sequence(ProtocolKind kind, int dim, double detuning,
                            double tau) {
  ComplexMatrix gate;
  switch (kind) {
    case ProtocolKind::kQft:
      gate = qft_gate(dim);
      break;
    case ProtocolKind::kSqrtX:
      gate = sqrt_x_gate(dim);
      break;
    case ProtocolKind::kWmRamsey:
      throw std::invalid_argument("gate_sequence: WM Ramsey is pulse based");
  }
  // Only the detuning enters the free evolution.
  const WmSystem sys{dim, 0.0, 1.0, detuning};
  return gate * free_evolution(sys, tau) * gate;
}

ComplexMatrix sequence(const Protocol& protocol, const WmSystem& sys,
                       double tau) {
  if (protocol.dim != sys.dim) {
    throw std::invalid_argument("protocol dimension " +
                                std::to_string(protocol.dim) +
                                " does not match system dimension " +
                                std::to_string(sys.dim));
  }
  if (protocol.kind == ProtocolKind::kWmRamsey) return ramsey_sequence(sys, tau);
  return gate_sequence(protocol.kind, protocol.dim, sys.detuning, tau);
}

double rule_signal(const ComplexMatrix& u, const SignalRule& rule) {
  double total = 0.0;
  for (StateLabel m : rule.measured) {
    total += transition_probability(u, m, rule.prepared);
  }
  return total;
}

double signal(const Protocol& protocol, const WmSystem& sys, double tau) {
  const SignalRule rule = signal_rule_for(protocol.dim, protocol.kind);
  return rule_signal(sequence(protocol, sys, tau), rule);
}

}  // namespace qudit_ramsey
