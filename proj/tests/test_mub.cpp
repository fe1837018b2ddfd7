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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mubwit/mub.hpp"
#include "mubwit/rng.hpp"

using namespace mubwit;

namespace {
constexpr double kPi = 3.14159265358979323846;

Complex w(int n, int k) {
  return Complex(std::cos(2 * kPi * k / n), std::sin(2 * kPi * k / n));
}
}  // namespace

TEST_CASE("every constructed set verifies at 1e-10") {
  for (int d : {2, 3, 4, 5, 6, 7, 8, 9}) {
    const MubSet set = hw_set(d);
    CHECK(set.dim == d);
    CHECK(set.size() == (d == 6 ? 3 : d + 1));
    const MubVerifyReport report = verify_mub_set(set, 1e-10);
    INFO("d = ", d, ", deviation ", report.max_deviation);
    CHECK(report.ok);
  }
  Rng rng(2);
  for (int rep = 0; rep < 5; ++rep) {
    const double x = rng.uniform() * kPi, y = rng.uniform() * kPi, z = rng.uniform() * kPi;
    CHECK(verify_mub_set(unextendible_triple_d4(x, y, z), 1e-10).ok);
  }
  MubSet tao_pair{6, "tao pair", {standard_basis(6), tao_matrix()}};
  CHECK(verify_mub_set(tao_pair, 1e-10).ok);
  CHECK(verify_mub_set(a7_triple(), 1e-10).ok);
}

TEST_CASE("constructors are deterministic (bit-identical matrices)") {
  for (int d : {3, 4, 9}) {
    const MubSet s1 = hw_set(d), s2 = hw_set(d);
    for (int k = 0; k < s1.size(); ++k) {
      CHECK(s1.bases[k].matrix == s2.bases[k].matrix);
    }
  }
}

TEST_CASE("printed diagonal phases for d=5 and d=7") {
  // D = diag(w^(l^2)); the third basis of the set is D^k F with k = (p+1)/2.
  for (int p : {5, 7}) {
    const MubSet set = hw_prime_set(p);
    // recover D from the k=1 power: it appears at position s with s*(p+1)/2 = 1 mod p,
    // i.e. s = 2: bases[3] = D F.
    const Matrix d1 = set.bases[3].matrix * set.bases[1].matrix.adjoint();
    if (p == 5) {
      const int expect[] = {0, 1, 4, 4, 1};
      for (int l = 0; l < 5; ++l) CHECK(std::abs(d1(l, l) - w(5, expect[l])) < 1e-12);
    } else {
      const int expect[] = {0, 1, 4, 2, 2, 4, 1};
      for (int l = 0; l < 7; ++l) CHECK(std::abs(d1(l, l) - w(7, expect[l])) < 1e-12);
    }
  }
}

TEST_CASE("d=2 third basis is fixed by unbiasedness: D2 = diag(1, i)") {
  const MubSet set = hw_prime_set(2);
  REQUIRE(set.size() == 3);
  const Matrix d2 = set.bases[2].matrix * set.bases[1].matrix.adjoint();
  CHECK(std::abs(d2(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(d2(1, 1) - Complex(0, 1)) < 1e-12);
}

TEST_CASE("prime-state formula cross-check: w^(k l^2 + j l) bases against the set") {
  for (int p : {2, 3, 5, 7}) {
    const MubSet set = hw_prime_set(p);
    for (int k = 0; k < p; ++k) {
      Basis formula;
      formula.matrix.resize(p, p);
      for (int j = 0; j < p; ++j)
        for (int l = 0; l < p; ++l) {
          Complex phase;
          if (p == 2) {
            // Galois-ring form for the even prime: i^((k + 2j) l)
            const int t = ((k + 2 * j) * l) % 4;
            phase = Complex(std::cos(kPi * t / 2), std::sin(kPi * t / 2));
          } else {
            phase = w(p, (k * l * l + j * l) % p);
          }
          formula.matrix(l, j) = phase / std::sqrt(static_cast<double>(p));
        }
      // each formula basis matches exactly one member of the set (up to
      // phases/permutation) and is unbiased to all the others
      int duplicates = 0;
      for (const Basis& member : set.bases) {
        MubSet pair{p, "pair", {formula, member}};
        if (bases_match_as_projectors(formula, member)) {
          ++duplicates;
        } else {
          CHECK(verify_mub_set(pair, 1e-10).ok);
        }
      }
      CHECK(duplicates == 1);
    }
  }
}

TEST_CASE("F(x) family: printed patterns and unitarity for any x") {
  const Basis f0 = fourier_family_d4(0.0);
  // third row at x = 0: (1, -1, i, -i)/2
  CHECK(std::abs(f0.matrix(2, 2) - Complex(0, 0.5)) < 1e-12);
  CHECK(std::abs(f0.matrix(2, 3) - Complex(0, -0.5)) < 1e-12);
  CHECK(std::abs(f0.matrix(3, 2) - Complex(0, -0.5)) < 1e-12);

  const Basis fh = fourier_family_d4(kPi / 2);
  // i e^(i pi/2) = -1: the matrix becomes the real Hadamard
  CHECK(std::abs(fh.matrix(2, 2) - Complex(-0.5, 0)) < 1e-12);
  CHECK(std::abs(fh.matrix(2, 3) - Complex(0.5, 0)) < 1e-12);

  Rng rng(4);
  for (int rep = 0; rep < 8; ++rep) {
    const Basis f = fourier_family_d4(rng.uniform() * kPi);
    CHECK((f.matrix.adjoint() * f.matrix - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.matrix.cwiseAbs().array() - 0.5).abs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("H(y,z) family: unitary, Hadamard-form, triple with F(x) verifies") {
  Rng rng(6);
  for (int rep = 0; rep < 8; ++rep) {
    const double y = rng.uniform() * kPi, z = rng.uniform() * kPi;
    const Basis h = h_family_d4(y, z);
    CHECK((h.matrix.adjoint() * h.matrix - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h.matrix.cwiseAbs().array() - 0.5).abs().maxCoeff() < 1e-12);
  }
  CHECK(verify_mub_set(unextendible_triple_d4(0.3, 1.1, 2.0), 1e-10).ok);
}

TEST_CASE("x=y=z=pi/2 reproduces the Heisenberg-Weyl triple (projector match)") {
  const MubSet hw = unextendible_triple_d4(kPi / 2, kPi / 2, kPi / 2);
  CHECK(verify_mub_set(hw, 1e-10).ok);
  // F(pi/2) and H(pi/2,pi/2) are real Hadamards; the d=4 ring set's own bases
  // are related by an overall equivalence, which the bound fingerprints
  // confirm (see optimizer tests); here: the triple itself is a valid MUB set
  // and all its entries have modulus 1/2 off the standard basis.
  for (int k = 1; k < 3; ++k)
    CHECK((hw.bases[k].matrix.cwiseAbs().array() - 0.5).abs().maxCoeff() < 1e-12);
}

TEST_CASE("Tao matrix: entries, orthonormality, pair verification") {
  const Basis s6 = tao_matrix();
  CHECK((s6.matrix.cwiseAbs2().array() - 1.0 / 6).abs().maxCoeff() < 1e-12);
  CHECK((s6.matrix.adjoint() * s6.matrix - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
  MubSet pair{6, "tao pair", {standard_basis(6), s6}};
  CHECK(verify_mub_set(pair, 1e-10).ok);
}

TEST_CASE("A7: alpha has unit modulus and the triple verifies") {
  const Basis a7 = a7_matrix();
  const Complex alpha = a7.matrix(0, 0) * std::sqrt(7.0);
  CHECK(std::abs(alpha - Complex(-0.75, std::sqrt(7.0) / 4)) < 1e-12);
  CHECK(std::abs(std::abs(alpha) - 1.0) < 1e-12);
  CHECK((a7.matrix.cwiseAbs2().array() - 1.0 / 7).abs().maxCoeff() < 1e-12);
  CHECK(verify_mub_set(a7_triple(), 1e-10).ok);
}

TEST_CASE("verify rejects a duplicated basis and flags it as a duplicate") {
  MubSet dup{2, "dup", {standard_basis(2), fourier_basis(2), standard_basis(2)}};
  const MubVerifyReport report = verify_mub_set(dup, 1e-10);
  CHECK(!report.ok);
  CHECK(report.duplicate_pair);
  CHECK(report.worst_k1 == 0);
  CHECK(report.worst_k2 == 2);
}

TEST_CASE("verify is invariant under a global unitary") {
  Rng rng(8);
  for (int d : {3, 5}) {
    MubSet set = hw_set(d);
    const Matrix u = rng.haar_unitary(d);
    for (Basis& b : set.bases) b.matrix = u * b.matrix;
    CHECK(verify_mub_set(set, 1e-9).ok);
  }
}

TEST_CASE("MubSet JSON round trip preserves matrices exactly") {
  const MubSet set = hw_set(5);
  const MubSet back = mub_set_from_json(nlohmann::json::parse(mub_set_to_json(set).dump()));
  CHECK(back.dim == set.dim);
  CHECK(back.provenance == set.provenance);
  REQUIRE(back.size() == set.size());
  for (int k = 0; k < set.size(); ++k) CHECK(back.bases[k].matrix == set.bases[k].matrix);
}

TEST_CASE("subset extraction keeps order and provenance") {
  const MubSet set = hw_set(5);
  const MubSet sub = set.subset({0, 1, 3});
  REQUIRE(sub.size() == 3);
  CHECK(sub.bases[2].matrix == set.bases[3].matrix);
  CHECK(sub.provenance.find("subset[0,1,3]") != std::string::npos);
  CHECK_THROWS_AS(set.subset({0, 6}), std::out_of_range);
}

TEST_CASE("unsupported dimensions are rejected") {
  CHECK_THROWS_AS(hw_prime_set(11), std::invalid_argument);
  CHECK_THROWS_AS(hw_set(10), std::invalid_argument);
  CHECK_THROWS_AS(hw_odd_prime_power_set(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(hw_even_prime_power_set(4), std::invalid_argument);
}
