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

#include "mubwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mubwit {

Rational upper_bound(int d, int m) {
  if (d < 2) throw std::invalid_argument("upper_bound: d must be >= 2");
  if (m < 1 || m > d + 1) throw std::invalid_argument("upper_bound: need 1 <= m <= d+1");
  // 1 + (m-1)/d = (d + m - 1)/d
  return Rational{static_cast<long long>(d + m - 1), static_cast<long long>(d)};
}

double joint_probability(const DensityMatrix& rho, const Basis& basis, int i) {
  const int d = basis.dim();
  if (rho.dim != d || rho.matrix.rows() != static_cast<Eigen::Index>(d) * d)
    throw std::invalid_argument("joint_probability: dimension mismatch");
  if (i < 0 || i >= d) throw std::out_of_range("joint_probability: outcome index");
  const Vector v = basis.vector(i);
  // tr(|v><v| (x) |v><v| rho) = <v (x) v| rho |v (x) v>
  Vector vv(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) vv(a * d + b) = v(a) * v(b);
  const Complex val = vv.adjoint() * rho.matrix * vv;
  if (std::abs(val.imag()) > 1e-10) {
    std::ostringstream msg;
    msg << "joint_probability: imaginary residue " << val.imag()
        << " (state is not Hermitian enough)";
    throw std::runtime_error(msg.str());
  }
  return std::clamp(val.real(), 0.0, 1.0);
}

WitnessResult witness_value(const DensityMatrix& rho, const MubSet& set) {
  WitnessResult result;
  result.d = set.dim;
  result.m = set.size();
  result.per_basis.reserve(set.size());
  for (const Basis& basis : set.bases) {
    double sum = 0.0;
    for (int i = 0; i < set.dim; ++i) sum += joint_probability(rho, basis, i);
    result.per_basis.push_back(sum);
    result.value += sum;
  }
  return result;
}

double witness_value_product(const Vector& a, const Vector& b, const MubSet& set) {
  const int d = set.dim;
  if (a.size() != d || b.size() != d)
    throw std::invalid_argument("witness_value_product: dimension mismatch");
  if (std::abs(a.norm() - 1.0) > 1e-9 || std::abs(b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("witness_value_product: states must be normalized");
  double total = 0.0;
  for (const Basis& basis : set.bases) {
    const Vector pa = basis.matrix.adjoint() * a;
    const Vector pb = basis.matrix.adjoint() * b;
    for (int i = 0; i < d; ++i) total += std::norm(pa(i)) * std::norm(pb(i));
  }
  return total;
}

}  // namespace mubwit
