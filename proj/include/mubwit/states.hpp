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

#ifndef MUBWIT_STATES_HPP
#define MUBWIT_STATES_HPP

#include "mubwit/linalg.hpp"

namespace mubwit {

// Bipartite state on C^d (x) C^d.
struct DensityMatrix {
  int dim = 0;     // local dimension d
  Matrix matrix;   // d^2 x d^2

  // Hermitian within 1e-10, unit trace within 1e-10, min eigenvalue >= -tol.
  // Throws std::invalid_argument describing the violated property.
  void validate(double tol = 1e-9) const;
};

// W_(k,l) = sum_j w_d^(jk) |j><j+l| (index mod d).
Matrix weyl_operator(int d, int k, int l);

// P_(k,l) = (I (x) W_(k,l)) P_(0,0) (I (x) W_(k,l))^dag with
// P_(0,0) = (1/d) sum_st |ss><tt|.
DensityMatrix bell_state(int d, int k, int l);

DensityMatrix maximally_mixed(int d);

// rho_(a,b) = (1-a-b) I/d^2 + a P_(0,0) + b P_(0,1). Rejects parameters that
// break positivity (the error reports the offending minimum eigenvalue).
DensityMatrix magic_simplex_state(int d, double alpha, double beta);

// rho_W(phi) = (I - phi Swap) / (d^2 - phi d), phi in [-1, 1]. Invariant
// under U (x) U; entangled exactly when phi > 1/d.
DensityMatrix werner_state(int d, double phi);

struct PptResult {
  bool ppt = false;
  double min_eigenvalue = 0.0;  // of the partial transpose
};

// Positivity of the partial transpose; ppt <=> min eigenvalue >= -tol.
PptResult is_ppt(const DensityMatrix& rho, double tol = 1e-9);

// Pure product state |a><a| (x) |b><b|.
DensityMatrix product_state(const Vector& a, const Vector& b);

}  // namespace mubwit

#endif  // MUBWIT_STATES_HPP
