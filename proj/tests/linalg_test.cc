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

#include "qudit_ramsey/linalg.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qudit_ramsey/wm_model.h"
#include "test_oracles.h"

using namespace qudit_ramsey;
using qudit_ramsey::oracle::max_diff;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix diag_real(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST(linalg, hermitian_eigen_scalar) {
  ComplexMatrix m(1, 1);
  m(0, 0) = 5.0;
  const HermitianEigen e = hermitian_eigen(m);
  ASSERT_EQ(e.eigenvalues.size(), 1u);
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], 5.0);
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 0) - Complex(1.0)), 0.0, 1e-15);
}

TEST(linalg, hermitian_eigen_pauli_x) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  const HermitianEigen e = hermitian_eigen(m);
  EXPECT_NEAR(e.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-14);
}

TEST(linalg, hermitian_eigen_qutrit_ladder_matches_char_poly) {
  const ComplexMatrix h = wm_hamiltonian({3, kPi / 2, 1.0, 0.0});
  const HermitianEigen e = hermitian_eigen(h);
  ASSERT_EQ(e.eigenvalues.size(), 3u);
  EXPECT_NEAR(e.eigenvalues[0], -kPi / 2, 1e-12);
  EXPECT_NEAR(e.eigenvalues[1], 0.0, 1e-12);
  EXPECT_NEAR(e.eigenvalues[2], kPi / 2, 1e-12);

  const double c = kPi / 2 / std::numbers::sqrt2;
  for (double lambda : {-kPi / 2, 0.0, kPi / 2}) {
    EXPECT_NEAR(oracle::tridiagonal_char_poly({0, 0, 0}, {c, c}, lambda), 0.0, 1e-12);
  }
}

TEST(linalg, hermitian_eigen_reconstructs_and_is_unitary) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 16;
    const ComplexMatrix m = oracle::random_hermitian(rng, dim, 3.0);
    const HermitianEigen e = hermitian_eigen(m);
    const ComplexMatrix& v = e.eigenvectors;
    Eigen::VectorXd lambda(dim);
    for (int k = 0; k < dim; ++k) lambda(k) = e.eigenvalues[k];
    const ComplexMatrix rebuilt = v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LT(max_abs_diff(rebuilt, m), tolerance::kDecomposition);
    EXPECT_TRUE(is_unitary(v, tolerance::kDecomposition));
    for (int k = 1; k < dim; ++k) EXPECT_LE(e.eigenvalues[k - 1], e.eigenvalues[k]);
  }
}

TEST(linalg, eigenvector_phase_is_fixed) {
  std::mt19937_64 rng(11);
  const ComplexMatrix m = oracle::random_hermitian(rng, 5, 1.0);
  const HermitianEigen e = hermitian_eigen(m);
  for (Eigen::Index c = 0; c < 5; ++c) {
    Eigen::Index pivot = 0;
    e.eigenvectors.col(c).cwiseAbs().maxCoeff(&pivot);
    EXPECT_NEAR(e.eigenvectors(pivot, c).imag(), 0.0, 1e-15);
    EXPECT_GT(e.eigenvectors(pivot, c).real(), 0.0);
  }
  // Same input, same output bit for bit.
  const HermitianEigen again = hermitian_eigen(m);
  EXPECT_EQ(max_abs_diff(e.eigenvectors, again.eigenvectors), 0.0);
}

TEST(linalg, rejects_non_hermitian_with_asymmetry_in_message) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0.5, 0;
  try {
    hermitian_eigen(m);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("max asymmetry 5.000e-01"), std::string::npos)
        << e.what();
  }
}

TEST(linalg, symmetrizes_rounding_level_asymmetry) {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(2.0, 1e-14), Complex(2.0, -1e-14) + 1e-14, -1.0;
  EXPECT_NO_THROW(hermitian_eigen(m));
}

TEST(linalg, rejects_malformed_input) {
  EXPECT_THROW(hermitian_eigen(ComplexMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(hermitian_eigen(ComplexMatrix(0, 0)), std::invalid_argument);
  ComplexMatrix nan_matrix = ComplexMatrix::Zero(2, 2);
  nan_matrix(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(hermitian_eigen(nan_matrix), std::invalid_argument);
  EXPECT_THROW(unitary_exp(ComplexMatrix::Identity(2, 2), INFINITY), std::invalid_argument);
}

TEST(linalg, unitary_exp_zero_time_is_identity) {
  std::mt19937_64 rng(3);
  for (int dim : {1, 2, 5, 16}) {
    const ComplexMatrix h = oracle::random_hermitian(rng, dim, 4.0);
    EXPECT_LT(max_abs_diff(unitary_exp(h, 0.0), ComplexMatrix::Identity(dim, dim)),
              tolerance::kIdentity);
  }
}

TEST(linalg, unitary_exp_diagonal_matches_free_phase) {
  const double delta = 0.37, t = 4.2;
  const ComplexMatrix u = unitary_exp(diag_real({-delta / 2, delta / 2}), t);
  EXPECT_LT(std::abs(u(0, 0) - std::polar(1.0, delta * t / 2)), 1e-14);
  EXPECT_LT(std::abs(u(1, 1) - std::polar(1.0, -delta * t / 2)), 1e-14);
  EXPECT_EQ(u(0, 1), Complex(0.0));
}

TEST(linalg, unitary_exp_resonant_half_pi_rotation) {
  const ComplexMatrix h = wm_hamiltonian({2, kPi / 2, 1.0, 0.0});
  const ComplexMatrix u = unitary_exp(h, 1.0);
  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  ComplexMatrix expected(2, 2);
  expected << c, Complex(0, -s), Complex(0, -s), c;
  EXPECT_LT(max_diff(u, expected), 1e-14);
  EXPECT_LT(max_diff(oracle::taylor_exp(h, 1.0), expected), 1e-14);
}

TEST(linalg, unitary_exp_matches_taylor_oracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> time(-20.0, 20.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 7;
    const ComplexMatrix h = oracle::random_hermitian(rng, dim, 1.0);
    const double t = time(rng);
    EXPECT_LT(max_diff(unitary_exp(h, t), oracle::taylor_exp(h, t)), 1e-9);
  }
}

// Property: unitarity and the one-parameter group law for random Hermitian h.
TEST(linalg, property_unitarity_and_group_law) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 8;
    const ComplexMatrix h = oracle::random_hermitian(rng, dim, 1.0);
    const double t1 = time(rng), t2 = time(rng);
    const ComplexMatrix u1 = unitary_exp(h, t1);
    EXPECT_LT(max_abs_diff(u1.adjoint() * u1, ComplexMatrix::Identity(dim, dim)),
              tolerance::kUnitary);
    EXPECT_LT(max_abs_diff(unitary_exp(h, t1 + t2), u1 * unitary_exp(h, t2)), 1e-9)
        << "trial " << trial;
  }
}

// Property: the resonant ladder spectrum is (d - (D+1)/2) * Omega, checked
// against the characteristic polynomial and a Sturm count.
TEST(linalg, property_resonant_ladder_spectrum) {
  for (int dim = 2; dim <= 5; ++dim) {
    for (double rabi : {0.3, 1.0, kPi / 2, 2.5}) {
      const HermitianEigen e = hermitian_eigen(wm_hamiltonian({dim, rabi, 1.0, 0.0}));
      std::vector<double> diag(dim, 0.0), off;
      for (int d = 1; d < dim; ++d) off.push_back(0.5 * std::sqrt(double(d) * (dim - d)) * rabi);
      for (int k = 0; k < dim; ++k) {
        const double expected = (k - 0.5 * (dim - 1)) * rabi;
        EXPECT_NEAR(e.eigenvalues[k], expected, 1e-12);
        EXPECT_NEAR(e.eigenvalues[k], -e.eigenvalues[dim - 1 - k], 1e-12);
        EXPECT_EQ(oracle::tridiagonal_count_below(diag, off, expected + 0.1 * rabi), k + 1);
        const double scale = std::pow(std::max(1.0, rabi * dim), dim);
        EXPECT_NEAR(oracle::tridiagonal_char_poly(diag, off, expected) / scale, 0.0, 1e-12);
      }
    }
  }
}

TEST(linalg, predicates) {
  ComplexMatrix m(2, 2);
  m << 1, Complex(0, 1), Complex(0, -1), 2;
  EXPECT_TRUE(is_hermitian(m, 1e-12));
  EXPECT_FALSE(is_unitary(m, 1e-6));
  EXPECT_TRUE(is_unitary(ComplexMatrix::Identity(3, 3), 0.0));
  m(0, 1) = Complex(0, 2);
  EXPECT_FALSE(is_hermitian(m, 1e-12));
  EXPECT_NEAR(max_asymmetry(m), 1.0, 1e-15);
  EXPECT_FALSE(is_hermitian(ComplexMatrix(2, 3), 1.0));
}
