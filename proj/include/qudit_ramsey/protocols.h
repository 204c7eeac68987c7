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
#include <string_view>
#include <vector>

#include "qudit_ramsey/linalg.h"
#include "qudit_ramsey/wm_model.h"

namespace qudit_ramsey {

enum class ProtocolKind {
  kWmRamsey,  // pulse, free evolution, pulse
  kQft,       // QFT, free evolution, QFT
  kSqrtX,     // sqrt X, free evolution, sqrt X
};

/// Short names used on the command line and in CSV headers: "wm", "qft",
/// "sqrtx".
std::string_view to_string(ProtocolKind kind);
/// Inverse of to_string; also accepts "sqrt-x". Throws std::invalid_argument.
ProtocolKind parse_protocol_kind(std::string_view name);

struct Protocol {
  ProtocolKind kind = ProtocolKind::kWmRamsey;
  int dim = 2;

  /// Row label of the RCI table: "2".."7" for WM Ramsey, "QFT3", "sqrtX3".
  std::string label() const;
  friend bool operator==(const Protocol&, const Protocol&) = default;
};

/// Which state is prepared and which outgoing probabilities are summed into
/// the scalar Ramsey signal.
struct SignalRule {
  StateLabel prepared;
  std::vector<StateLabel> measured;

  friend bool operator==(const SignalRule&, const SignalRule&) = default;
};

/// WM Ramsey: D=2 |1> -> |2>; D=3 central survival; even D >= 4 prepared in
/// |D/2> and measured on its two neighbours; odd D >= 5 prepared in the
/// central state and measured on its two neighbours. Gate protocols are
/// defined for D in {2, 3} only. Other combinations throw
/// std::invalid_argument.
SignalRule signal_rule_for(int dim, ProtocolKind kind);

/// Reflects a rule through the ladder centre, |d> -> |D+1-d>.
SignalRule mirrored(const SignalRule& rule, int dim);

/// R(T) F(tau) R(T).
ComplexMatrix ramsey_sequence(const WmSystem& sys, double tau);

/// Element (m, k) = omega^(m k) / sqrt(D), omega = exp(2 pi i / D), with
/// 0-based m, k mapping to |m+1>, |k+1>.
ComplexMatrix qft_gate(int dim);

/// diag(1, omega, ..., omega^(D-1)).
ComplexMatrix clock_gate(int dim);

/// QFT Z QFT^dagger, the cyclic shift |k> -> |k-1 mod D> (0-based k).
ComplexMatrix shift_gate(int dim);

/// QFT sqrt(Z) QFT^dagger with the principal root omega^(k/2).
ComplexMatrix sqrt_x_gate(int dim);

/// G F(tau) G for an ideal instantaneous gate G. kind must be kQft or kSqrtX.
ComplexMatrix gate_sequence(ProtocolKind kind, int dim, double detuning,
                            double tau);

/// Full interrogation unitary for a protocol. sys.dim must equal
/// protocol.dim; gate protocols use only sys.detuning.
ComplexMatrix sequence(const Protocol& protocol, const WmSystem& sys,
                       double tau);

/// Sum of |<i|U|prepared>|^2 over the measured states.
double rule_signal(const ComplexMatrix& u, const SignalRule& rule);

/// Scalar Ramsey signal of a protocol.
double signal(const Protocol& protocol, const WmSystem& sys, double tau);

}  // namespace qudit_ramsey
