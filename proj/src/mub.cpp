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

#include "mubwit/mub.hpp"

#include <cmath>
#include <stdexcept>

#include "mubwit/galois.hpp"

namespace mubwit {
namespace {

Complex unit_phase(double angle) { return Complex(std::cos(angle), std::sin(angle)); }

// w_n^k for integer k, computed from the reduced angle so constructions are
// bit-reproducible.
Complex root_of_unity(int n, long long k) {
  const long long r = ((k % n) + n) % n;
  return unit_phase(2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

MubSet MubSet::subset(const std::vector<int>& indices) const {
  MubSet out;
  out.dim = dim;
  out.provenance = provenance + " subset[";
  for (size_t t = 0; t < indices.size(); ++t) {
    const int i = indices[t];
    if (i < 0 || i >= size()) throw std::out_of_range("MubSet::subset index");
    out.bases.push_back(bases[i]);
    out.provenance += (t ? "," : "") + std::to_string(i);
  }
  out.provenance += "]";
  return out;
}

Basis standard_basis(int d) {
  return {Matrix::Identity(d, d), "standard"};
}

Basis fourier_basis(int d) {
  Matrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) f(j, k) = norm * root_of_unity(d, static_cast<long long>(j) * k);
  return {f, "F" + std::to_string(d)};
}

MubSet hw_prime_set(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("hw_prime_set: p must be one of 2, 3, 5, 7");
  const Basis fourier = fourier_basis(p);
  Matrix diag = Matrix::Zero(p, p);
  if (p == 2) {
    diag(0, 0) = 1.0;
    diag(1, 1) = Complex(0.0, 1.0);
  } else {
    for (int l = 0; l < p; ++l) diag(l, l) = root_of_unity(p, static_cast<long long>(l) * l);
  }
  MubSet set;
  set.dim = p;
  set.provenance = "HW-prime d=" + std::to_string(p) + " (Z,X,XZ,XZ^2,... eigenbasis order)";
  set.bases.push_back(standard_basis(p));
  set.bases.push_back(fourier);
  if (p == 2) {
    set.bases.push_back({diag * fourier.matrix, "D F2"});
    return set;
  }
  // Basis s+2 is the XZ^s eigenbasis D^k F with k = s (p+1)/2 mod p.
  const int inv2 = (p + 1) / 2;
  Matrix power = Matrix::Identity(p, p);
  std::vector<Matrix> diag_powers(p, Matrix());
  for (int k = 0; k < p; ++k) {
    diag_powers[k] = power;
    power = diag * power;
  }
  for (int s = 1; s < p; ++s) {
    const int k = static_cast<int>((static_cast<long long>(s) * inv2) % p);
    set.bases.push_back({diag_powers[k] * fourier.matrix, "D^" + std::to_string(k) + " F" + std::to_string(p)});
  }
  return set;
}

MubSet hw_odd_prime_power_set(int p, int n) {
  if (p != 3 || n != 2)
    throw std::invalid_argument("hw_odd_prime_power_set: only (p, n) = (3, 2) is built");
  const GaloisField field = standard_field(p, n);
  const int d = field.size();
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  MubSet set;
  set.dim = d;
  set.provenance =
      "HW-odd-prime-power d=9 (GF(9) over x^2+1, elements a+bx indexed a+3b; "
      "bases: standard, then k = 0..8 in index order)";
  set.bases.push_back(standard_basis(d));
  for (int ki = 0; ki < d; ++ki) {
    const FieldElement k = field.element(ki);
    Matrix b(d, d);
    for (int ji = 0; ji < d; ++ji) {
      const FieldElement j = field.element(ji);
      for (int li = 0; li < d; ++li) {
        const FieldElement l = field.element(li);
        const FieldElement arg = field.add(field.mul(k, field.mul(l, l)), field.mul(j, l));
        b(li, ji) = norm * root_of_unity(p, field.trace(arg));
      }
    }
    set.bases.push_back({std::move(b), "k=" + std::to_string(ki)});
  }
  return set;
}

MubSet hw_even_prime_power_set(int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("hw_even_prime_power_set: n must be 2 or 3");
  const GaloisRing4 ring = standard_ring(n);
  const std::vector<RingElement>& teich = ring.teichmuller_set();  // sorted by index
  const int d = 1 << n;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  MubSet set;
  set.dim = d;
  set.provenance = "HW-even-prime-power d=" + std::to_string(d) +
                   " (GR(4," + std::to_string(n) +
                   "); bases: standard, then k over the Teichmuller set in index order)";
  set.bases.push_back(standard_basis(d));
  for (int ki = 0; ki < d; ++ki) {
    const RingElement& k = teich[ki];
    Matrix b(d, d);
    for (int ji = 0; ji < d; ++ji) {
      const RingElement two_j = ring.add(teich[ji], teich[ji]);
      const RingElement kp2j = ring.add(k, two_j);
      for (int li = 0; li < d; ++li) {
        const int t = ring.trace(ring.mul(kp2j, teich[li]));
        b(li, ji) = norm * root_of_unity(4, t);  // i^t
      }
    }
    set.bases.push_back({std::move(b), "k=T" + std::to_string(ki)});
  }
  return set;
}

MubSet hw_set(int d) {
  switch (d) {
    case 2:
    case 3:
    case 5:
    case 7:
      return hw_prime_set(d);
    case 4:
      return hw_even_prime_power_set(2);
    case 8:
      return hw_even_prime_power_set(3);
    case 9:
      return hw_odd_prime_power_set(3, 2);
    case 6: {
      // Z, X and XZ eigenbases; the only triple this construction yields.
      const Basis fourier = fourier_basis(6);
      Matrix diag = Matrix::Zero(6, 6);
      for (int l = 0; l < 6; ++l) diag(l, l) = unit_phase(M_PI * l * l / 6.0);
      MubSet set;
      set.dim = 6;
      set.provenance = "HW d=6 triple (Z, X, XZ eigenbases)";
      set.bases.push_back(standard_basis(6));
      set.bases.push_back(fourier);
      set.bases.push_back({diag * fourier.matrix, "D6 F6"});
      return set;
    }
    default:
      throw std::invalid_argument("hw_set: d must be in {2,...,9}");
  }
}

Basis fourier_family_d4(double x) {
  const Complex e = Complex(0, 1) * unit_phase(x);
  Matrix f(4, 4);
  f << 1, 1, 1, 1,
       1, 1, -1, -1,
       1, -1, e, -e,
       1, -1, -e, e;
  f *= 0.5;
  return {f, "F(x=" + std::to_string(x) + ")"};
}

Basis h_family_d4(double y, double z) {
  const Complex ey = unit_phase(y), ez = unit_phase(z);
  Matrix h(4, 4);
  h << 1, 1, 1, 1,
       1, 1, -1, -1,
       -ey, ey, ez, -ez,
       ey, -ey, ez, -ez;
  h *= 0.5;
  return {h, "H(y=" + std::to_string(y) + ",z=" + std::to_string(z) + ")"};
}

MubSet unextendible_triple_d4(double x, double y, double z) {
  MubSet set;
  set.dim = 4;
  set.provenance = "d=4 triple {I, F(x), H(y,z)} x=" + std::to_string(x) +
                   " y=" + std::to_string(y) + " z=" + std::to_string(z);
  set.bases = {standard_basis(4), fourier_family_d4(x), h_family_d4(y, z)};
  return set;
}

Basis tao_matrix() {
  const Complex w = root_of_unity(3, 1);
  const Complex w2 = root_of_unity(3, 2);
  Matrix s(6, 6);
  s << 1, 1, 1, 1, 1, 1,
       1, 1, w, w, w2, w2,
       1, w, 1, w2, w2, w,
       1, w, w2, 1, w, w2,
       1, w2, w2, w, 1, w,
       1, w2, w, w2, w, 1;
  s /= std::sqrt(6.0);
  return {s, "S6"};
}

Basis a7_matrix() {
  const Complex alpha(-3.0 / 4.0, std::sqrt(7.0) / 4.0);
  // 'a' marks an alpha entry, '1' a unit entry.
  const char* pattern[7] = {"aaa1a11", "1aaa1a1", "11aaa1a", "a11aaa1",
                            "1a11aaa", "a1a11aa", "aa1a11a"};
  Matrix m(7, 7);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) m(r, c) = pattern[r][c] == 'a' ? alpha : Complex(1.0, 0.0);
  m /= std::sqrt(7.0);
  return {m, "A7"};
}

MubSet a7_triple() {
  MubSet set;
  set.dim = 7;
  set.provenance = "d=7 unextendible triple {I, F7, A7}";
  set.bases = {standard_basis(7), fourier_basis(7), a7_matrix()};
  return set;
}

bool bases_match_as_projectors(const Basis& a, const Basis& b, double tol) {
  if (a.dim() != b.dim()) return false;
  const int d = a.dim();
  // Same projector sets <=> every |<a_i|b_j>| is 0 or 1 and the overlap
  // pattern is a permutation.
  std::vector<bool> used(d, false);
  for (int i = 0; i < d; ++i) {
    bool found = false;
    for (int j = 0; j < d && !found; ++j) {
      if (used[j]) continue;
      if (std::abs(std::abs(Complex(a.matrix.col(i).adjoint() * b.matrix.col(j))) - 1.0) < tol) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

MubVerifyReport verify_mub_set(const MubSet& set, double tol) {
  MubVerifyReport report;
  const int d = set.dim;
  const int n = set.size();
  if (d < 2 || n < 1) {
    report.detail = "set is empty or has dim < 2";
    return report;
  }
  for (int k = 0; k < n; ++k) {
    if (set.bases[k].matrix.rows() != d || set.bases[k].matrix.cols() != d) {
      report.worst_k2 = k;
      report.detail = "basis " + std::to_string(k) + " has the wrong shape";
      return report;
    }
  }
  const double inv_d = 1.0 / static_cast<double>(d);
  double worst = 0.0;
  int wk1 = -1, wk2 = -1;
  for (int k = 0; k < n; ++k) {
    const Matrix gram = set.bases[k].matrix.adjoint() * set.bases[k].matrix;
    const double dev = (gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > worst) {
      worst = dev;
      wk1 = -1;
      wk2 = k;
    }
  }
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = k1 + 1; k2 < n; ++k2) {
      const Matrix overlaps = set.bases[k1].matrix.adjoint() * set.bases[k2].matrix;
      const double dev = (overlaps.cwiseAbs2().array() - inv_d).abs().maxCoeff();
      if (dev > worst) {
        worst = dev;
        wk1 = k1;
        wk2 = k2;
      }
    }
  }
  report.max_deviation = worst;
  report.ok = worst <= tol;
  report.worst_k1 = wk1;
  report.worst_k2 = wk2;
  if (!report.ok && wk1 >= 0) {
    report.duplicate_pair = bases_match_as_projectors(set.bases[wk1], set.bases[wk2]);
    report.detail = report.duplicate_pair
                        ? "bases " + std::to_string(wk1) + " and " + std::to_string(wk2) +
                              " are the same basis up to column phases/permutation"
                        : "worst overlap deviation between bases " + std::to_string(wk1) + " and " +
                              std::to_string(wk2);
  } else if (!report.ok) {
    report.detail = "basis " + std::to_string(wk2) + " is not orthonormal";
  }
  return report;
}

nlohmann::json mub_set_to_json(const MubSet& set) {
  nlohmann::json bases = nlohmann::json::array();
  for (const Basis& b : set.bases) {
    nlohmann::json jb = matrix_to_json(b.matrix);
    jb["label"] = b.label;
    bases.push_back(std::move(jb));
  }
  return {{"dim", set.dim}, {"provenance", set.provenance}, {"bases", std::move(bases)}};
}

MubSet mub_set_from_json(const nlohmann::json& j) {
  MubSet set;
  set.dim = j.at("dim").get<int>();
  set.provenance = j.at("provenance").get<std::string>();
  for (const auto& jb : j.at("bases")) {
    Basis b;
    b.matrix = matrix_from_json(jb);
    b.label = jb.value("label", "");
    set.bases.push_back(std::move(b));
  }
  return set;
}

}  // namespace mubwit
