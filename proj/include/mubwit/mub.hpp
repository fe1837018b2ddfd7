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

#ifndef MUBWIT_MUB_HPP
#define MUBWIT_MUB_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mubwit/linalg.hpp"

namespace mubwit {

// An orthonormal basis of C^d stored as the columns of a unitary matrix.
struct Basis {
  Matrix matrix;
  std::string label;
  int dim() const { return static_cast<int>(matrix.rows()); }
  Vector vector(int i) const { return matrix.col(i); }
};

struct MubSet {
  int dim = 0;
  std::string provenance;
  std::vector<Basis> bases;

  int size() const { return static_cast<int>(bases.size()); }
  // New set holding bases[indices] in the given order.
  MubSet subset(const std::vector<int>& indices) const;
};

Basis standard_basis(int d);
// F_d with entries exp(2*pi*i*j*k/d)/sqrt(d).
Basis fourier_basis(int d);

// Complete sets of d+1 bases for prime d in {2,3,5,7}. The set is
// {I, F, D^k F} with D = diag(w^(l^2)) (D = diag(1, i) for d = 2) and the
// bases are ordered by the phase-operator sequence Z, X, XZ, XZ^2, ...,
// i.e. basis s+2 uses k = s*(p+1)/2 mod p. This is the labelling under which
// subset classes split the way the reference tables list them.
MubSet hw_prime_set(int p);

// d = p^n for odd p: |j_k> = d^(-1/2) sum_l w_p^(tr(k l^2 + j l)) |l>, with
// k, j, l running over GF(d) in index order. Only (p, n) = (3, 2) is built.
MubSet hw_odd_prime_power_set(int p, int n);

// d = 2^n via GR(4, n): |j_k> = d^(-1/2) sum_l i^(tr((k + 2j) l)) |l>, with
// k, j, l over the Teichmuller set in index order. n in {2, 3}.
MubSet hw_even_prime_power_set(int n);

// Dispatcher: prime and prime-power complete sets for d in {2,3,4,5,7,8,9},
// and for d = 6 the triple {I, F6, D6 F6} with D6 = diag(exp(i pi l^2 / 6))
// (the Z, X, XZ eigenbases; no fourth unbiased basis is known).
MubSet hw_set(int d);

// One-parameter Fourier family in d = 4; unbiased to the standard basis for
// every x.
Basis fourier_family_d4(double x);

// Two-parameter Hadamard family in d = 4; {I, F(x), H(y,z)} is a triple of
// MUBs for all parameters and coincides with the Heisenberg-Weyl triple at
// x = y = z = pi/2.
Basis h_family_d4(double y, double z);

MubSet unextendible_triple_d4(double x, double y, double z);

// The 6x6 symmetric Hadamard matrix with entries in {1, w3, w3^2}/sqrt(6);
// {I, S6} is the unextendible pair in d = 6.
Basis tao_matrix();

// The 7x7 circulant-pattern Hadamard with alpha = (-3 + i sqrt(7))/4;
// {I, F7, A7} is an unextendible triple.
Basis a7_matrix();
MubSet a7_triple();

struct MubVerifyReport {
  bool ok = false;
  double max_deviation = 0.0;  // worst |<i|i'>|^2 error against the target
  int worst_k1 = -1, worst_k2 = -1;  // basis pair of the worst deviation (-1,k = within basis k)
  bool duplicate_pair = false;       // worst pair is the same basis up to column phases/permutation
  std::string detail;
};

// Diagnostic check of orthonormality within bases and |overlap|^2 = 1/d
// across bases. Never throws.
MubVerifyReport verify_mub_set(const MubSet& set, double tol);

// True when the two bases define the same set of rank-1 projectors, ignoring
// column order and phases.
bool bases_match_as_projectors(const Basis& a, const Basis& b, double tol = 1e-8);

nlohmann::json mub_set_to_json(const MubSet& set);
MubSet mub_set_from_json(const nlohmann::json& j);

}  // namespace mubwit

#endif  // MUBWIT_MUB_HPP
