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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qudit_ramsey {

using Complex = std::complex<double>;

/// Dense square matrix of complex amplitudes. Carries Hamiltonians,
/// propagators and gates. Storage is 0-based; see StateLabel for the
/// 1-based physical state labels used at the API surface.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tolerance {
/// Largest |H - H^dagger| entry accepted by hermitian_eigen.
inline constexpr double kHermitianInput = 1e-12;
/// Reconstruction error of V diag(lambda) V^dagger.
inline constexpr double kDecomposition = 1e-10;
/// Unitarity of evolution operators from unitary_exp.
inline constexpr double kUnitary = 1e-10;
/// Zero-time evolution must reproduce the identity this closely.
inline constexpr double kIdentity = 1e-12;
/// Unitarity of assembled interrogation sequences.
inline constexpr double kSequenceUnitary = 1e-9;
/// Ideal gates (QFT, sqrt X) are built from exact phases.
inline constexpr double kGateUnitary = 1e-11;
/// Probabilities may overshoot [0, 1] by rounding at most this much.
inline constexpr double kProbability = 1e-9;
}  // namespace tolerance

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns; largest component real positive
};

/// Largest entry-wise |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry-wise |m - m^dagger|.
double max_asymmetry(const ComplexMatrix& m);

bool is_square(const ComplexMatrix& m);
bool is_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized,
/// (m + m^dagger)/2, before decomposition; asymmetry above
/// tolerance::kHermitianInput (relative to max(1, |m|_max)) is rejected with
/// std::invalid_argument.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// exp(-i h t) for Hermitian h, via the spectral decomposition.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t);

}  // namespace qudit_ramsey
