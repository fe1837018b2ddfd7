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

#include "mubwit/galois.hpp"

#include <stdexcept>
#include <string>

namespace mubwit {
namespace {

// Multiply two residues of degree < n and reduce by a monic modulus, all
// coefficients mod q.
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, int n, int q) {
  std::vector<int> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  }
  for (int deg = 2 * n - 2; deg >= n; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < n; ++i) {
      prod[deg - n + i] = ((prod[deg - n + i] - c * modulus[i]) % q + q * q) % q;
    }
  }
  prod.resize(n);
  return prod;
}

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

GaloisField::GaloisField(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), q_(ipow(p, n)), modulus_(std::move(modulus)) {
  if (p_ < 2 || n_ < 1) throw std::invalid_argument("GaloisField: need p >= 2, n >= 1");
  if (static_cast<int>(modulus_.size()) != n_ + 1 || modulus_[n_] != 1)
    throw std::invalid_argument("GaloisField: modulus must be monic of degree n");
  for (int& c : modulus_) c = ((c % p_) + p_) % p_;
}

FieldElement GaloisField::element(int index) const {
  if (index < 0 || index >= q_) throw std::out_of_range("GaloisField::element index");
  FieldElement e;
  e.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) {
    e.coeffs[i] = index % p_;
    index /= p_;
  }
  return e;
}

int GaloisField::index(const FieldElement& a) const {
  int idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[i];
  return idx;
}

FieldElement GaloisField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  r.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement GaloisField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  r.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) r.coeffs[i] = ((a.coeffs[i] - b.coeffs[i]) % p_ + p_) % p_;
  return r;
}

FieldElement GaloisField::mul(const FieldElement& a, const FieldElement& b) const {
  return FieldElement{polymul_mod(a.coeffs, b.coeffs, modulus_, n_, p_)};
}

FieldElement GaloisField::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement r = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement GaloisField::inverse(const FieldElement& a) const {
  if (a == zero()) throw std::domain_error("GaloisField::inverse of zero");
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

int GaloisField::trace(const FieldElement& a) const {
  FieldElement acc = a;
  FieldElement sum = a;
  for (int t = 1; t < n_; ++t) {
    acc = pow(acc, static_cast<std::uint64_t>(p_));
    sum = add(sum, acc);
  }
  for (int i = 1; i < n_; ++i) {
    if (sum.coeffs[i] != 0)
      throw std::logic_error("GaloisField::trace did not land in the prime field");
  }
  return sum.coeffs[0];
}

GaloisRing4::GaloisRing4(int n, std::vector<int> modulus)
    : n_(n), size_(ipow(4, n)), modulus_(std::move(modulus)) {
  if (n_ < 1) throw std::invalid_argument("GaloisRing4: need n >= 1");
  if (static_cast<int>(modulus_.size()) != n_ + 1 || (modulus_[n_] % 4 + 4) % 4 != 1)
    throw std::invalid_argument("GaloisRing4: modulus must be monic of degree n");
  for (int& c : modulus_) c = ((c % 4) + 4) % 4;
  build_tables();
}

RingElement GaloisRing4::element(int index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("GaloisRing4::element index");
  RingElement e;
  e.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) {
    e.coeffs[i] = index % 4;
    index /= 4;
  }
  return e;
}

int GaloisRing4::index(const RingElement& a) const {
  int idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * 4 + a.coeffs[i];
  return idx;
}

RingElement GaloisRing4::add(const RingElement& a, const RingElement& b) const {
  RingElement r;
  r.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % 4;
  return r;
}

RingElement GaloisRing4::sub(const RingElement& a, const RingElement& b) const {
  RingElement r;
  r.coeffs.resize(n_);
  for (int i = 0; i < n_; ++i) r.coeffs[i] = ((a.coeffs[i] - b.coeffs[i]) % 4 + 4) % 4;
  return r;
}

RingElement GaloisRing4::mul(const RingElement& a, const RingElement& b) const {
  return RingElement{polymul_mod(a.coeffs, b.coeffs, modulus_, n_, 4)};
}

RingElement GaloisRing4::pow(const RingElement& a, std::uint64_t e) const {
  RingElement r = one();
  RingElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void GaloisRing4::build_tables() {
  const int target = 1 << n_;  // 2^n
  std::vector<RingElement> t;
  for (int i = 0; i < size_; ++i) {
    const RingElement x = element(i);
    if (pow(x, static_cast<std::uint64_t>(target)) == x) t.push_back(x);
  }
  if (static_cast<int>(t.size()) != target) {
    table_error_ = "GaloisRing4: Teichmuller set has size " + std::to_string(t.size()) +
                   ", expected " + std::to_string(target) +
                   " (modulus is not basic irreducible)";
    return;
  }
  // The nonzero part must be cyclic of order 2^n - 1: some element generates
  // all of it.
  bool has_generator = false;
  for (const RingElement& g : t) {
    if (g == zero()) continue;
    int order = 1;
    RingElement acc = g;
    while (!(acc == one()) && order <= target) {
      acc = mul(acc, g);
      ++order;
    }
    if (order == target - 1) {
      has_generator = true;
      break;
    }
  }
  if (!has_generator && target > 2) {
    table_error_ = "GaloisRing4: no element of order 2^n - 1 found";
    return;
  }
  teichmuller_ = std::move(t);

  decomposition_.assign(size_, {-1, -1});
  for (const RingElement& k : teichmuller_) {
    for (const RingElement& j : teichmuller_) {
      const RingElement two_j = add(j, j);
      const int idx = index(add(k, two_j));
      decomposition_[idx] = {index(k), index(j)};
    }
  }
  for (const auto& [ki, ji] : decomposition_) {
    if (ki < 0) {
      table_error_ = "GaloisRing4: 2-adic decomposition incomplete";
      teichmuller_.clear();
      return;
    }
  }
}

void GaloisRing4::require_tables() const {
  if (!table_error_.empty()) throw std::runtime_error(table_error_);
}

const std::vector<RingElement>& GaloisRing4::teichmuller_set() const {
  require_tables();
  return teichmuller_;
}

std::pair<RingElement, RingElement> GaloisRing4::teichmuller_decompose(const RingElement& x) const {
  require_tables();
  const auto& [ki, ji] = decomposition_[index(x)];
  if (ki < 0) throw std::runtime_error("GaloisRing4: element has no Teichmuller decomposition");
  return {element(ki), element(ji)};
}

RingElement GaloisRing4::frobenius(const RingElement& x) const {
  const auto [k, j] = teichmuller_decompose(x);
  const RingElement j2 = mul(j, j);
  return add(mul(k, k), add(j2, j2));
}

int GaloisRing4::trace(const RingElement& x) const {
  RingElement acc = x;
  RingElement sum = x;
  for (int t = 1; t < n_; ++t) {
    acc = frobenius(acc);
    sum = add(sum, acc);
  }
  for (int i = 1; i < n_; ++i) {
    if (sum.coeffs[i] != 0) throw std::runtime_error("GaloisRing4::trace did not land in Z4");
  }
  return sum.coeffs[0];
}

GaloisField standard_field(int p, int n) {
  if (p == 2 && n == 2) return GaloisField(2, 2, {1, 1, 1});     // x^2+x+1
  if (p == 2 && n == 3) return GaloisField(2, 3, {1, 1, 0, 1});  // x^3+x+1
  if (p == 3 && n == 2) return GaloisField(3, 2, {1, 0, 1});     // x^2+1
  if (n == 1) return GaloisField(p, 1, {0, 1});
  throw std::invalid_argument("standard_field: no modulus registered for this (p, n)");
}

GaloisRing4 standard_ring(int n) {
  if (n == 1) return GaloisRing4(1, {0, 1});
  if (n == 2) return GaloisRing4(2, {1, 1, 1});     // x^2+x+1 over Z4
  if (n == 3) return GaloisRing4(3, {1, 1, 0, 1});  // x^3+x+1 over Z4
  throw std::invalid_argument("standard_ring: n must be 1, 2 or 3");
}

}  // namespace mubwit
