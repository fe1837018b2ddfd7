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

#include "mubwit/linalg.hpp"
#include "mubwit/rng.hpp"
#include "mubwit/states.hpp"

using namespace mubwit;

namespace {
Matrix random_complex(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return m;
}

Matrix random_hermitian(int n, Rng& rng) {
  const Matrix m = random_complex(n, n, rng);
  return 0.5 * (m + m.adjoint());
}

// Roots of the characteristic polynomial of a 3x3 Hermitian matrix, via the
// trigonometric solution of the depressed cubic. Independent of the
// eigensolver path.
RealVector char_poly_roots_3x3(const Matrix& a) {
  const double tr = a.trace().real();
  const double tr2 = (a * a).trace().real();
  const double det = a.determinant().real();
  // lambda^3 - c2 lambda^2 + c1 lambda - c0
  const double c2 = tr;
  const double c1 = 0.5 * (tr * tr - tr2);
  const double c0 = det;
  // depressed: t^3 + p t + q with lambda = t + c2/3
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
  const double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
  const double arg = std::clamp(3.0 * (-q) / (std::max(1e-300, -p) * m), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  RealVector roots(3);
  for (int k = 0; k < 3; ++k) roots(k) = m * std::cos(phi - 2.0 * M_PI * k / 3.0) + c2 / 3.0;
  std::sort(roots.data(), roots.data() + 3);
  return roots;
}
}  // namespace

TEST_CASE("kron basics") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((kron(i2, i2) - Matrix::Identity(4, 4)).norm() == 0.0);

  // X (x) Z for qubits: +/-1 entries in anti-diagonal blocks
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  Matrix expect(4, 4);
  expect << 0, 0, 1, 0,
            0, 0, 0, -1,
            1, 0, 0, 0,
            0, -1, 0, 0;
  CHECK((kron(x, z) - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron mixed-product identity on random 3x3 inputs") {
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = random_complex(3, 3, rng), b = random_complex(3, 3, rng);
    const Matrix c = random_complex(3, 3, rng), d = random_complex(3, 3, rng);
    CHECK((kron(a, b) * kron(c, d) - kron(a * c, b * d)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hermitian eigenvalues on fixed inputs") {
  const RealVector ones = hermitian_eigenvalues(Matrix::Identity(5, 5));
  for (int i = 0; i < 5; ++i) CHECK(ones(i) == doctest::Approx(1.0));

  Matrix diag = Matrix::Zero(3, 3);
  diag(0, 0) = 3;
  diag(1, 1) = 1;
  diag(2, 2) = 2;
  const RealVector sorted = hermitian_eigenvalues(diag);
  CHECK(sorted(0) == doctest::Approx(1.0));
  CHECK(sorted(1) == doctest::Approx(2.0));
  CHECK(sorted(2) == doctest::Approx(3.0));
}

TEST_CASE("partial transpose of the d=2 Bell state has spectrum (-1/2, 1/2, 1/2, 1/2)") {
  const DensityMatrix bell = bell_state(2, 0, 0);
  const RealVector ev = hermitian_eigenvalues(partial_transpose(bell.matrix, 2));
  CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("eigensystem: trace identity, reconstruction, unitary invariance") {
  Rng rng(77);
  for (int n : {3, 6, 9}) {
    const Matrix a = random_hermitian(n, rng);
    const Eigensystem es = hermitian_eigensystem(a);
    CHECK(std::abs(es.values.sum() - a.trace().real()) < 1e-9);
    Matrix rebuilt = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      rebuilt += es.values(i) * (es.vectors.col(i) * es.vectors.col(i).adjoint());
    CHECK((rebuilt - a).cwiseAbs().maxCoeff() < 1e-9);

    const Matrix u = rng.haar_unitary(n);
    const RealVector rotated = hermitian_eigenvalues(u * a * u.adjoint());
    CHECK((rotated - es.values).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("eigenvalues match characteristic-polynomial roots for 3x3 blocks") {
  Rng rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix a = random_hermitian(3, rng);
    const RealVector ev = hermitian_eigenvalues(a);
    const RealVector roots = char_poly_roots_3x3(a);
    CHECK((ev - roots).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("non-Hermitian input is rejected with the asymmetry named") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_WITH_AS(hermitian_eigenvalues(a), doctest::Contains("asymmetry"),
                       std::invalid_argument);
}

TEST_CASE("partial transpose: fixed point, involution, trace, hermiticity") {
  const int d = 3;
  const Matrix mm = Matrix::Identity(d * d, d * d) / static_cast<double>(d * d);
  CHECK((partial_transpose(mm, d) - mm).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(3);
  const Matrix h = random_hermitian(d * d, rng);
  const Matrix pt = partial_transpose(h, d);
  CHECK((partial_transpose(pt, d) - h).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(pt.trace().real() - h.trace().real()) < 1e-12);
  CHECK(hermiticity_defect(pt) < 1e-12);
  CHECK_THROWS_AS(partial_transpose(h, 2), std::invalid_argument);
}

TEST_CASE("partial transpose of P(0,0) in d=3 has min eigenvalue -1/3") {
  const DensityMatrix bell = bell_state(3, 0, 0);
  // P^Gamma = Swap/d, whose spectrum is +/- 1/d.
  const Matrix expect = swap_operator(3) / 3.0;
  CHECK((partial_transpose(bell.matrix, 3) - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(min_eigenvalue(partial_transpose(bell.matrix, 3)) == doctest::Approx(-1.0 / 3));
}

TEST_CASE("trace linearity and cyclicity on random inputs") {
  Rng rng(11);
  const Matrix a = random_complex(4, 4, rng), b = random_complex(4, 4, rng);
  const Complex lhs = (a * b).trace(), rhs = (b * a).trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
  const Complex lin = (a + 2.0 * b).trace();
  CHECK(std::abs(lin - (a.trace() + 2.0 * b.trace())) < 1e-12);
}

TEST_CASE("matrix JSON round-trips exactly at double precision") {
  Rng rng(19);
  const Matrix a = random_complex(5, 3, rng);
  const nlohmann::json j = matrix_to_json(a);
  const Matrix back = matrix_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(back.rows() == a.rows());
  REQUIRE(back.cols() == a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      CHECK(back(i, k).real() == a(i, k).real());
      CHECK(back(i, k).imag() == a(i, k).imag());
    }
}

TEST_CASE("swap operator flips the factors") {
  const int d = 3;
  Rng rng(23);
  const Matrix f = swap_operator(d);
  Vector a(d), b(d);
  for (int i = 0; i < d; ++i) {
    a(i) = Complex(rng.gaussian(), rng.gaussian());
    b(i) = Complex(rng.gaussian(), rng.gaussian());
  }
  Vector ab(d * d), ba(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ab(i * d + j) = a(i) * b(j);
      ba(i * d + j) = b(i) * a(j);
    }
  CHECK((f * ab - ba).norm() < 1e-12);
}
