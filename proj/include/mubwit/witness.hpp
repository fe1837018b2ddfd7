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

#ifndef MUBWIT_WITNESS_HPP
#define MUBWIT_WITNESS_HPP

#include <vector>

#include "mubwit/mub.hpp"
#include "mubwit/states.hpp"

namespace mubwit {

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

// U_m = 1 + (m-1)/d, the separable-state maximum of M_m. Exact rational.
// Requires d >= 2 and 1 <= m <= d+1.
Rational upper_bound(int d, int m);

// P(i,i | B,B) = tr(|i><i| (x) |i><i| rho) for the i-th vector of the basis.
// Clamped into [0,1] by at most 1e-12; an imaginary residue above 1e-10
// raises a Hermiticity diagnostic.
double joint_probability(const DensityMatrix& rho, const Basis& basis, int i);

struct WitnessResult {
  double value = 0.0;              // M_m
  std::vector<double> per_basis;   // sum_i P(i,i|B_k,B_k) per basis
  int m = 0;
  int d = 0;
};

// M_m(rho) = sum_k sum_i P(i,i|B_k,B_k): both parties measure the same basis
// and compare identical outcomes.
WitnessResult witness_value(const DensityMatrix& rho, const MubSet& set);

// M_m on the pure product |a><a| (x) |b><b|, evaluated as
// sum_k sum_i |<i_k|a>|^2 |<i_k|b>|^2 without forming the d^2 x d^2 matrix.
// Inputs must be normalized within 1e-9.
double witness_value_product(const Vector& a, const Vector& b, const MubSet& set);

}  // namespace mubwit

#endif  // MUBWIT_WITNESS_HPP
