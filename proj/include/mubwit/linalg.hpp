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

#ifndef MUBWIT_LINALG_HPP
#define MUBWIT_LINALG_HPP

#include <complex>

#include <Eigen/Dense>
#include <json.hpp>

namespace mubwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tensor product with the first factor as the most significant index:
// (A (x) B)[(i*q + k), (j*r + l)] = A(i,j) * B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

// max_ij |A - A^dag|
double hermiticity_defect(const Matrix& a);

// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized
// before solving; an asymmetry beyond tol raises std::invalid_argument naming
// the defect.
RealVector hermitian_eigenvalues(const Matrix& a, double tol = 1e-10);

struct Eigensystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};
Eigensystem hermitian_eigensystem(const Matrix& a, double tol = 1e-10);

double min_eigenvalue(const Matrix& a, double tol = 1e-10);

// Transposes the second tensor factor of a (d^2 x d^2) operator.
Matrix partial_transpose(const Matrix& rho, int dim);

// Flip operator F|a,b> = |b,a> on C^d (x) C^d.
Matrix swap_operator(int d);

// JSON form {rows, cols, entries: [[re, im], ...]} (row-major). Doubles
// round-trip exactly.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace mubwit

#endif  // MUBWIT_LINALG_HPP
