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

#include "mubwit/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace mubwit {

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index p = a.rows(), q = a.cols();
  const Eigen::Index r = b.rows(), s = b.cols();
  Matrix out(p * r, q * s);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < q; ++j) out.block(i * r, j * s, r, s) = a(i, j) * b;
  return out;
}

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

namespace {
Matrix symmetrized_or_throw(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian eigensolver: matrix not square");
  const double defect = hermiticity_defect(a);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "hermitian eigensolver: input is not Hermitian, max asymmetry " << defect;
    throw std::invalid_argument(msg.str());
  }
  return 0.5 * (a + a.adjoint());
}
}  // namespace

RealVector hermitian_eigenvalues(const Matrix& a, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrized_or_throw(a, tol),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigensystem hermitian_eigensystem(const Matrix& a, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrized_or_throw(a, tol));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Matrix& a, double tol) {
  return hermitian_eigenvalues(a, tol)(0);
}

Matrix partial_transpose(const Matrix& rho, int dim) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (rho.rows() != n || rho.cols() != n)
    throw std::invalid_argument("partial_transpose: expected a d^2 x d^2 matrix");
  Matrix out(n, n);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int e = 0; e < dim; ++e)
          out(a * dim + b, c * dim + e) = rho(a * dim + e, c * dim + b);
  return out;
}

Matrix swap_operator(int d) {
  Matrix f = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) f(b * d + a, a * d + b) = 1.0;
  return f;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: entry count does not match rows*cols");
  Matrix m(rows, cols);
  Eigen::Index t = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++t)
      m(i, j2) = Complex(entries[t][0].get<double>(), entries[t][1].get<double>());
  return m;
}

}  // namespace mubwit
