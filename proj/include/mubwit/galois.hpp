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

#ifndef MUBWIT_GALOIS_HPP
#define MUBWIT_GALOIS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mubwit {

// Elements are polynomial residues in coefficient form, low degree first.
// Sizes here are tiny (q <= 64), so everything is computed directly; no
// log/antilog tables.

struct FieldElement {
  std::vector<int> coeffs;  // length n, values in [0, p)
  bool operator==(const FieldElement&) const = default;
};

// GF(p^n) = F_p[x] / (modulus), modulus monic of degree n, coefficients low
// degree first (length n+1, last entry 1).
class GaloisField {
 public:
  GaloisField(int p, int n, std::vector<int> modulus);

  int characteristic() const { return p_; }
  int degree() const { return n_; }
  int size() const { return q_; }

  // Enumeration: element(i) has coefficients given by the base-p digits of i,
  // so for GF(9) over x^2+1 the order is 0, 1, 2, x, x+1, x+2, 2x, ...
  FieldElement element(int index) const;
  int index(const FieldElement& a) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  FieldElement inverse(const FieldElement& a) const;

  // tr(a) = a + a^p + ... + a^(p^(n-1)), an element of F_p.
  int trace(const FieldElement& a) const;

 private:
  int p_, n_, q_;
  std::vector<int> modulus_;
};

struct RingElement {
  std::vector<int> coeffs;  // length n, values in [0, 4)
  bool operator==(const RingElement&) const = default;
};

// GR(4, n) = Z4[x] / (modulus) for a monic basic irreducible modulus (its
// mod-2 reduction must be irreducible over F_2).
class GaloisRing4 {
 public:
  GaloisRing4(int n, std::vector<int> modulus);

  int degree() const { return n_; }
  int size() const { return size_; }

  RingElement element(int index) const;  // base-4 digits of index
  int index(const RingElement& a) const;
  RingElement zero() const { return element(0); }
  RingElement one() const { return element(1); }

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, std::uint64_t e) const;

  // The Teichmuller set T_n = {y : y^(2^n) = y}: zero together with the cyclic
  // group of order 2^n - 1. Sorted by element index. Throws std::runtime_error
  // if the set has the wrong size or its units are not cyclic, which signals a
  // modulus whose mod-2 reduction is not irreducible.
  const std::vector<RingElement>& teichmuller_set() const;

  // Unique 2-adic decomposition x = k + 2j with k, j Teichmuller. Throws
  // std::runtime_error when no decomposition exists.
  std::pair<RingElement, RingElement> teichmuller_decompose(const RingElement& x) const;

  // Frobenius lift sigma(k + 2j) = k^2 + 2 j^2.
  RingElement frobenius(const RingElement& x) const;

  // tr(x) = sum_t sigma^t(x), an element of Z/4Z.
  int trace(const RingElement& x) const;

 private:
  int n_, size_;
  std::vector<int> modulus_;
  // Tables are built once at construction (immutable afterwards, so the type
  // is safe to share across threads). A modulus that fails the Teichmuller
  // validation leaves table_error_ set; the dependent operations throw it.
  std::vector<RingElement> teichmuller_;
  std::vector<std::pair<int, int>> decomposition_;  // index -> (k, j) indices
  std::string table_error_;
  void build_tables();
  void require_tables() const;
};

// The moduli used by the basis constructions: GF(4): x^2+x+1, GF(8): x^3+x+1,
// GF(9): x^2+1, GR(4,2): x^2+x+1, GR(4,3): x^3+x+1 over Z4.
GaloisField standard_field(int p, int n);
GaloisRing4 standard_ring(int n);

}  // namespace mubwit

#endif  // MUBWIT_GALOIS_HPP
