// Copyright 2026 The mubwit Authors
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

#include "mubwit/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mubwit {

void DensityMatrix::validate(double tol) const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (matrix.rows() != n || matrix.cols() != n)
    throw std::invalid_argument("DensityMatrix: matrix must be d^2 x d^2");
  const double herm = hermiticity_defect(matrix);
  if (herm > 1e-10) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian, defect " << herm;
    throw std::invalid_argument(msg.str());
  }
  const double tr_err = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (tr_err > 1e-10) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace differs from 1 by " << tr_err;
    throw std::invalid_argument(msg.str());
  }
  const double lam = min_eigenvalue(matrix);
  if (lam < -tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite, min eigenvalue " << lam;
    throw std::invalid_argument(msg.str());
  }
}

Matrix weyl_operator(int d, int k, int l) {
  if (k < 0 || k >= d || l < 0 || l >= d)
    throw std::out_of_range("weyl_operator: indices must lie in [0, d)");
  Matrix w = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const double angle = 2.0 * M_PI * static_cast<double>((j * k) % d) / d;
    w(j, (j + l) % d) = Complex(std::cos(angle), std::sin(angle));
  }
  return w;
}

DensityMatrix bell_state(int d, int k, int l) {
  Vector phi = Vector::Zero(d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int s = 0; s < d; ++s) phi(s * d + s) = norm;
  // The Weyl operator acts on the second subsystem.
  const Matrix w = weyl_operator(d, k, l);
  Vector psi = Vector::Zero(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) psi(a * d + b) += w(b, c) * phi(a * d + c);
  DensityMatrix rho;
  rho.dim = d;
  rho.matrix = psi * psi.adjoint();
  return rho;
}

DensityMatrix maximally_mixed(int d) {
  DensityMatrix rho;
  rho.dim = d;
  rho.matrix = Matrix::Identity(d * d, d * d) / static_cast<double>(d * d);
  return rho;
}

DensityMatrix magic_simplex_state(int d, double alpha, double beta) {
  DensityMatrix rho;
  rho.dim = d;
  rho.matrix = (1.0 - alpha - beta) * Matrix::Identity(d * d, d * d) / static_cast<double>(d * d) +
               alpha * bell_state(d, 0, 0).matrix + beta * bell_state(d, 0, 1).matrix;
  const double lam = min_eigenvalue(rho.matrix);
  if (lam < -1e-9) {
    std::ostringstream msg;
    msg << "magic_simplex_state: (alpha, beta) = (" << alpha << ", " << beta
        << ") is not a physical state, min eigenvalue " << lam;
    throw std::invalid_argument(msg.str());
  }
  return rho;
}

DensityMatrix werner_state(int d, double phi) {
  if (phi < -1.0 || phi > 1.0)
    throw std::invalid_argument("werner_state: phi must lie in [-1, 1]");
  DensityMatrix rho;
  rho.dim = d;
  rho.matrix = (Matrix::Identity(d * d, d * d) - phi * swap_operator(d)) /
               (static_cast<double>(d) * d - phi * d);
  return rho;
}

PptResult is_ppt(const DensityMatrix& rho, double tol) {
  const double lam = min_eigenvalue(partial_transpose(rho.matrix, rho.dim));
  return {lam >= -tol, lam};
}

DensityMatrix product_state(const Vector& a, const Vector& b) {
  const int d = static_cast<int>(a.size());
  if (b.size() != d) throw std::invalid_argument("product_state: dimension mismatch");
  Vector ab(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) ab(i * d + j) = a(i) * b(j);
  DensityMatrix rho;
  rho.dim = d;
  rho.matrix = ab * ab.adjoint();
  return rho;
}

}  // namespace mubwit
