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
#include <random>

#include "gtest/gtest.h"
#include "test_oracles.h"

using namespace qudit_ramsey;
using qudit_ramsey::oracle::max_diff;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

WmSystem default_system(int dim, double delta) { return {dim, kPi / 2, 1.0, delta}; }

double sqr(double x) { return x * x; }

}  // namespace

TEST(protocols, kind_names_round_trip) {
  for (auto kind : {ProtocolKind::kWmRamsey, ProtocolKind::kQft, ProtocolKind::kSqrtX}) {
    EXPECT_EQ(parse_protocol_kind(to_string(kind)), kind);
  }
  EXPECT_EQ(parse_protocol_kind("sqrt-x"), ProtocolKind::kSqrtX);
  EXPECT_THROW(parse_protocol_kind("hadamard"), std::invalid_argument);
  EXPECT_EQ((Protocol{ProtocolKind::kWmRamsey, 5}).label(), "5");
  EXPECT_EQ((Protocol{ProtocolKind::kQft, 3}).label(), "QFT3");
  EXPECT_EQ((Protocol{ProtocolKind::kSqrtX, 3}).label(), "sqrtX3");
}

TEST(protocols, ramsey_sequence_resonant_cases) {
  const ComplexMatrix u2 = ramsey_sequence(default_system(2, 0.0), 10.0);
  EXPECT_NEAR(transition_probability(u2, {2}, {1}), 1.0, 1e-12);
  const ComplexMatrix u3 = ramsey_sequence(default_system(3, 0.0), 10.0);
  EXPECT_NEAR(transition_probability(u3, {2}, {2}), 1.0, 1e-12);
  EXPECT_NEAR(analytic_qutrit_ramsey(default_system(3, 0.0), 10.0), 1.0, 1e-12);
}

TEST(protocols, ramsey_sequence_zero_tau_merges_pulses) {
  for (int dim = 2; dim <= 7; ++dim) {
    const WmSystem sys{dim, 1.1, 0.8, 0.37};
    EXPECT_LT(max_abs_diff(ramsey_sequence(sys, 0.0), unitary_exp(wm_hamiltonian(sys), 1.6)),
              1e-12);
  }
}

TEST(protocols, signal_rules_from_the_propagator_figures) {
  using K = ProtocolKind;
  EXPECT_EQ(signal_rule_for(2, K::kWmRamsey), (SignalRule{{1}, {{2}}}));
  EXPECT_EQ(signal_rule_for(3, K::kWmRamsey), (SignalRule{{2}, {{2}}}));
  EXPECT_EQ(signal_rule_for(4, K::kWmRamsey), (SignalRule{{2}, {{1}, {3}}}));
  EXPECT_EQ(signal_rule_for(5, K::kWmRamsey), (SignalRule{{3}, {{2}, {4}}}));
  EXPECT_EQ(signal_rule_for(6, K::kWmRamsey), (SignalRule{{3}, {{2}, {4}}}));
  EXPECT_EQ(signal_rule_for(7, K::kWmRamsey), (SignalRule{{4}, {{3}, {5}}}));
  EXPECT_EQ(signal_rule_for(2, K::kQft), (SignalRule{{1}, {{2}}}));
  EXPECT_EQ(signal_rule_for(3, K::kSqrtX), (SignalRule{{2}, {{2}}}));
}

TEST(protocols, signal_rule_rejects_unsupported) {
  EXPECT_THROW(signal_rule_for(4, ProtocolKind::kQft), std::invalid_argument);
  EXPECT_THROW(signal_rule_for(5, ProtocolKind::kSqrtX), std::invalid_argument);
  EXPECT_THROW(signal_rule_for(1, ProtocolKind::kWmRamsey), std::invalid_argument);
  try {
    signal_rule_for(6, ProtocolKind::kQft);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("D = 6"), std::string::npos);
  }
}

TEST(protocols, mirrored_rule) {
  const SignalRule m = mirrored(signal_rule_for(4, ProtocolKind::kWmRamsey), 4);
  EXPECT_EQ(m, (SignalRule{{3}, {{4}, {2}}}));
}

TEST(protocols, qft_gate_small_dimensions) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  EXPECT_LT(max_diff(qft_gate(2), h / std::sqrt(2.0)), 1e-15);

  const Complex w = std::polar(1.0, 2 * kPi / 3);
  ComplexMatrix f3(3, 3);
  f3 << 1, 1, 1, 1, w, w * w, 1, w * w, w;
  EXPECT_LT(max_diff(qft_gate(3), f3 / std::sqrt(3.0)), 1e-15);

  const ComplexMatrix f4 = qft_gate(4);
  const Complex row1[] = {0.5, 0.5 * kI, -0.5, -0.5 * kI};
  for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(f4(1, k) - row1[k]), 1e-15);
}

TEST(protocols, sqrt_x_qubit) {
  ComplexMatrix expected(2, 2);
  expected << Complex(1, 1), Complex(1, -1), Complex(1, -1), Complex(1, 1);
  expected *= 0.5;
  const ComplexMatrix s = sqrt_x_gate(2);
  EXPECT_LT(max_diff(s, expected), 1e-15);
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_LT(max_diff(s * s, x), 1e-15);
}

TEST(protocols, sqrt_x_squares_to_cyclic_shift) {
  for (int dim = 2; dim <= defaults::kMaxDim; ++dim) {
    const ComplexMatrix s = sqrt_x_gate(dim);
    const ComplexMatrix x = shift_gate(dim);
    EXPECT_LT(max_diff(s * s, x), 1e-10) << "D=" << dim;
    // x is a cyclic permutation: one unit entry per column, |k> -> |k-1>.
    ComplexMatrix perm = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) perm((k + dim - 1) % dim, k) = 1.0;
    EXPECT_LT(max_diff(x, perm), 1e-12) << "D=" << dim;
  }
}

TEST(protocols, property_gates_unitary) {
  for (int dim = 2; dim <= defaults::kMaxDim; ++dim) {
    EXPECT_TRUE(is_unitary(qft_gate(dim), tolerance::kGateUnitary)) << dim;
    EXPECT_TRUE(is_unitary(sqrt_x_gate(dim), tolerance::kGateUnitary)) << dim;
    EXPECT_TRUE(is_unitary(clock_gate(dim), tolerance::kGateUnitary)) << dim;
  }
  EXPECT_THROW(qft_gate(1), std::invalid_argument);
  EXPECT_THROW(sqrt_x_gate(17), std::invalid_argument);
}

TEST(protocols, qubit_gate_closed_forms) {
  for (double d = -1.0; d <= 1.0; d += 0.01) {
    const ComplexMatrix uq = gate_sequence(ProtocolKind::kQft, 2, d, 10.0);
    const ComplexMatrix us = gate_sequence(ProtocolKind::kSqrtX, 2, d, 10.0);
    const double pq = transition_probability(uq, {2}, {1});
    const double ps = transition_probability(us, {2}, {1});
    EXPECT_NEAR(pq, sqr(std::sin(5.0 * d)), 1e-12);
    EXPECT_NEAR(ps, sqr(std::cos(5.0 * d)), 1e-12);
    EXPECT_NEAR(pq + ps, 1.0, 1e-12);
  }
}

TEST(protocols, qutrit_gate_closed_forms) {
  const Complex w = std::polar(1.0, 2 * kPi / 3);
  const Complex root_w = std::polar(1.0, kPi / 3);  // principal branch
  const Protocol qft{ProtocolKind::kQft, 3};
  const Protocol sx{ProtocolKind::kSqrtX, 3};
  double peak = 0.0;
  for (double d = -1.0; d <= 1.0; d += 0.005) {
    const Complex e = std::polar(1.0, 10.0 * d);
    const double p_qft = std::norm(root_w - e - w * std::conj(e)) / 9.0;
    const double p_sx = 16.0 / 81.0 * sqr(1.0 - std::cos(10.0 * d));
    EXPECT_NEAR(signal(qft, default_system(3, d), 10.0), p_qft, 1e-9) << d;
    EXPECT_NEAR(signal(sx, default_system(3, d), 10.0), p_sx, 1e-9) << d;
    EXPECT_NEAR(std::norm(2.0 / 9.0 * std::conj(e) * (e - 1.0) * (e - 1.0)), p_sx, 1e-14);
    peak = std::max(peak, p_sx);
  }
  EXPECT_NEAR(peak, 64.0 / 81.0, 1e-3);
}

// The other square root of omega_3 does not reproduce the QFT3 fringe.
TEST(protocols, qutrit_qft_branch_is_principal) {
  const Complex w = std::polar(1.0, 2 * kPi / 3);
  const Complex other_root = -std::polar(1.0, kPi / 3);
  const Complex e = std::polar(1.0, 10.0 * 0.1);
  const double wrong = std::norm(other_root - e - w * std::conj(e)) / 9.0;
  EXPECT_GT(std::abs(signal({ProtocolKind::kQft, 3}, default_system(3, 0.1), 10.0) - wrong),
            1e-3);
}

TEST(protocols, wm_signal_values) {
  const Protocol p2{ProtocolKind::kWmRamsey, 2};
  EXPECT_NEAR(signal(p2, default_system(2, 0.0), 10.0), 1.0, 1e-12);

  // Arbitrary-precision references of the shoulder sums at tau = 10,
  // Omega = pi/2, T = 1.
  struct Case {
    int dim;
    double delta;
    double expected;
  };
  const Case cases[] = {
      {4, 0.0, 1.0},
      {4, 0.3, 0.096430850409165146},
      {5, 0.0, 0.0},
      {5, 0.3, 0.15957200930240812},
      {6, 0.0, 1.0},
      {6, 0.3, 0.21786069906370547},
      {7, 0.0, 0.0},
      {7, 0.3, 0.29222690504983231},
  };
  for (const Case& c : cases) {
    const Protocol p{ProtocolKind::kWmRamsey, c.dim};
    EXPECT_NEAR(signal(p, default_system(c.dim, c.delta), 10.0), c.expected, 1e-11)
        << "D=" << c.dim << " delta=" << c.delta;
    const ComplexMatrix brute = oracle::brute_force_ramsey(c.dim, c.delta, kPi / 2, 1.0, 10.0);
    EXPECT_NEAR(rule_signal(brute, signal_rule_for(c.dim, p.kind)), c.expected, 1e-11);
  }
}

TEST(protocols, sequence_dimension_mismatch) {
  EXPECT_THROW(sequence({ProtocolKind::kWmRamsey, 3}, default_system(4, 0.0), 1.0),
               std::invalid_argument);
  EXPECT_THROW(gate_sequence(ProtocolKind::kWmRamsey, 3, 0.0, 1.0), std::invalid_argument);
}

// Property: unitarity, probability conservation, detuning parity and the
// mirrored preparation for even D.
TEST(protocols, property_sequences_conserve_probability) {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> det(-5.0, 5.0), rabi(0.2, 3.0), pulse(0.2, 2.0),
      tau(0.0, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 2 + trial % 9;
    const WmSystem sys{dim, rabi(rng), pulse(rng), det(rng)};
    const double t = tau(rng);
    const ComplexMatrix u = ramsey_sequence(sys, t);
    ASSERT_TRUE(is_unitary(u, tolerance::kSequenceUnitary));
    const SignalRule rule = signal_rule_for(dim, ProtocolKind::kWmRamsey);
    double total = 0.0;
    for (int i = 1; i <= dim; ++i) total += transition_probability(u, {i}, rule.prepared);
    EXPECT_NEAR(total, 1.0, 1e-9);

    const Protocol p{ProtocolKind::kWmRamsey, dim};
    WmSystem flipped = sys;
    flipped.detuning = -sys.detuning;
    const double s = signal(p, sys, t);
    EXPECT_NEAR(s, signal(p, flipped, t), 1e-9) << "parity D=" << dim;
    EXPECT_GE(s, -tolerance::kProbability);
    EXPECT_LE(s, 1.0 + tolerance::kProbability);

    if (dim % 2 == 0) {
      EXPECT_NEAR(rule_signal(u, rule), rule_signal(u, mirrored(rule, dim)), 1e-9)
          << "mirror D=" << dim;
    }
  }
}

TEST(protocols, property_gate_sequences_unitary) {
  std::mt19937_64 rng(271);
  std::uniform_real_distribution<double> det(-5.0, 5.0), tau(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + trial % 15;
    for (auto kind : {ProtocolKind::kQft, ProtocolKind::kSqrtX}) {
      EXPECT_TRUE(is_unitary(gate_sequence(kind, dim, det(rng), tau(rng)),
                             tolerance::kSequenceUnitary));
    }
  }
}
