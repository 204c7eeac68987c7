# Copyright 2026 The qudit-ramsey Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Qudit Ramsey interferometry: Wigner-Majorana sequences, gate protocols,
fringe metrics and quantum Fisher information."""

from qudit_ramsey._core import (
    Protocol,
    ProtocolKind,
    WmSystem,
    analytic_qutrit_ramsey,
    fringe_metrics,
    free_evolution,
    gate_sequence,
    hermitian_eigen,
    pulse_propagator,
    qfi,
    qft_gate,
    ramsey_sequence,
    run_sweep,
    signal,
    sqrt_x_gate,
    table_one,
    unitary_exp,
    wm_hamiltonian,
)

__all__ = [
    "Protocol",
    "ProtocolKind",
    "WmSystem",
    "analytic_qutrit_ramsey",
    "fringe_metrics",
    "free_evolution",
    "gate_sequence",
    "hermitian_eigen",
    "pulse_propagator",
    "qfi",
    "qft_gate",
    "ramsey_sequence",
    "run_sweep",
    "signal",
    "sqrt_x_gate",
    "table_one",
    "unitary_exp",
    "wm_hamiltonian",
]
