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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qudit_ramsey {

namespace {

void require_valid(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || !is_square(m)) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << m.rows()
        << "x" << m.cols();
    throw std::invalid_argument(msg.str());
  }
  if (!is_finite(m)) {
    throw std::invalid_argument(std::string(what) +
                                ": matrix has non-finite entries");
  }
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs_entry(a - b);
}

double max_asymmetry(const ComplexMatrix& m) {
  if (!is_square(m)) {
    throw std::invalid_argument("max_asymmetry: matrix is not square");
  }
  return max_abs_entry(m - m.adjoint());
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols(); }

bool is_finite(const ComplexMatrix& m) {
  return m.array().real().isFinite().all() &&
         m.array().imag().isFinite().all();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return is_square(m) && is_finite(m) && max_asymmetry(m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!is_square(m) || !is_finite(m)) return false;
  const auto id = ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs_diff(m.adjoint() * m, id) <= tol &&
         max_abs_diff(m * m.adjoint(), id) <= tol;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_valid(m, "hermitian_eigen");
  const double asym = max_asymmetry(m);
  const double scale = std::max(1.0, max_abs_entry(m));
  if (asym > tolerance::kHermitianInput * scale) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "hermitian_eigen: matrix is not Hermitian (max asymmetry "
        << std::scientific << asym << ")";
    throw std::invalid_argument(msg.str());
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigensolver did not converge");
  }

  HermitianEigen out;
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  out.eigenvectors = solver.eigenvectors();

  // Fix the free phase of each eigenvector: the largest-magnitude component
  // (first one on ties) is made real and positive.
  for (Eigen::Index col = 0; col < out.eigenvectors.cols(); ++col) {
    auto v = out.eigenvectors.col(col);
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index row = 0; row < v.size(); ++row) {
      const double mag = std::abs(v(row));
      if (mag > best * (1.0 + 1e-12)) {
        best = mag;
        pivot = row;
      }
    }
    if (best > 0.0) v *= std::conj(v(pivot)) / best;
  }
  return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("unitary_exp: time must be finite");
  }
  const HermitianEigen eig = hermitian_eigen(h);
  const auto n = static_cast<Eigen::Index>(eig.eigenvalues.size());
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -eig.eigenvalues[static_cast<size_t>(k)] * t);
  }
  const ComplexMatrix& v = eig.eigenvectors;
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace qudit_ramsey
