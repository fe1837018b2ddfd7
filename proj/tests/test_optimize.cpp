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
#include "mubwit/optimize.hpp"
#include "mubwit/rng.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

using namespace mubwit;

namespace {
constexpr double kPi = 3.14159265358979323846;

OptimizerConfig quick(int restarts, std::uint64_t seed = 0) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}
}  // namespace

TEST_CASE("decode: gauge examples") {
  RealVector zero = RealVector::Zero(4);
  const Vector e0 = decode_pure_state(zero, 3);
  CHECK(std::abs(e0(0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(e0(1)) < 1e-12);

  RealVector t(2);
  t << kPi / 2, 0.0;
  const Vector e1 = decode_pure_state(t, 2);
  CHECK(std::abs(e1(1) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(e1(0)) < 1e-12);

  CHECK_THROWS_AS(decode_pure_state(zero, 4), std::invalid_argument);
}

TEST_CASE("encode/decode round trip reproduces the physical state") {
  Rng rng(9);
  for (int d : {2, 3, 5, 9}) {
    for (int rep = 0; rep < 50; ++rep) {
      const Vector v = rng.haar_state(d);
      const Vector back = decode_pure_state(encode_pure_state(v), d);
      CHECK(std::abs(back.norm() - 1.0) < 1e-12);
      CHECK(std::abs(std::abs(Complex(v.adjoint() * back)) - 1.0) < 1e-12);
    }
  }
  // decoding random angle vectors yields unit vectors (surjectivity side)
  for (int rep = 0; rep < 50; ++rep) {
    RealVector theta(8);
    for (int i = 0; i < 8; ++i) theta(i) = (rng.uniform() - 0.5) * 8 * kPi;
    CHECK(std::abs(decode_pure_state(theta, 5).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("gradient_check: quadratic objective") {
  auto f = [](const RealVector& x) { return 0.5 * x.squaredNorm() + 3.0 * x(0); };
  auto g = [](const RealVector& x) {
    RealVector out = x;
    out(0) += 3.0;
    return out;
  };
  RealVector x(4);
  x << 0.3, -1.2, 0.7, 2.0;
  CHECK(gradient_check(f, g, x) < 1e-7);
  // smoothness probe without an analytic gradient stays finite and small
  CHECK(gradient_check(f, nullptr, x) < 1e-4);
}

TEST_CASE("gradient_check: witness product objective at random points") {
  Rng rng(21);
  const MubSet set = hw_set(4);
  const ProductObjective objective(set);
  auto f = [&](const RealVector& x) { return objective.value_packed(x); };
  auto g = [&](const RealVector& x) { return objective.gradient_packed(x); };
  for (int rep = 0; rep < 10; ++rep) {
    RealVector x(16);
    for (int i = 0; i < 16; ++i) x(i) = rng.gaussian();
    CHECK(gradient_check(f, g, x) < 1e-5);
  }
}

TEST_CASE("at a converged minimum the gradient vanishes") {
  const MubSet set = hw_set(3).subset({0, 1});
  const BoundEstimate est = lower_bound(set, quick(40));
  const ProductObjective objective(set);
  RealVector x(12);
  for (int i = 0; i < 3; ++i) {
    x(i) = est.state_a(i).real();
    x(3 + i) = est.state_a(i).imag();
    x(6 + i) = est.state_b(i).real();
    x(9 + i) = est.state_b(i).imag();
  }
  CHECK(objective.gradient_packed(x).norm() < 1e-6);
}

TEST_CASE("lower bounds reproduce the small reference values") {
  CHECK(lower_bound(hw_set(2).subset({0, 1}), quick(40)).value == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(lower_bound(hw_set(3).subset({0, 1}), quick(40)).value ==
        doctest::Approx(0.21132).epsilon(2e-3));
  CHECK(lower_bound(hw_set(4).subset({0, 1, 2}), quick(60)).value ==
        doctest::Approx(0.25).epsilon(2e-3));
  CHECK(lower_bound(unextendible_triple_d4(kPi / 2, 0, 0), quick(60)).value ==
        doctest::Approx(0.5).epsilon(2e-3));
  CHECK(lower_bound(hw_set(5).subset({0, 1, 2}), quick(60)).value ==
        doctest::Approx(0.2764).epsilon(2e-3));
  CHECK(lower_bound(hw_set(5).subset({0, 1, 3}), quick(60)).value ==
        doctest::Approx(0.1273).epsilon(2e-3));
}

TEST_CASE("generic d=4 triples stay within (1/4, 1/2]") {
  Rng rng(33);
  for (int rep = 0; rep < 3; ++rep) {
    const double x = rng.uniform() * kPi, y = rng.uniform() * kPi, z = rng.uniform() * kPi;
    const double value = lower_bound(unextendible_triple_d4(x, y, z), quick(60)).value;
    CHECK(value > 0.25 - 2e-3);
    CHECK(value < 0.5 + 2e-3);
  }
}

TEST_CASE("estimates are deterministic and thread-count independent") {
  const MubSet set = hw_set(5).subset({0, 1, 3});
  OptimizerConfig serial = quick(24, 1234);
  serial.threads = 1;
  OptimizerConfig parallel = serial;
  parallel.threads = 0;
  const BoundEstimate a = lower_bound(set, serial);
  const BoundEstimate b = lower_bound(set, serial);
  const BoundEstimate c = lower_bound(set, parallel);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.best_restart_index == c.best_restart_index);
  CHECK(a.argmin.theta_a == b.argmin.theta_a);
  CHECK(a.restart_values == c.restart_values);
  // different seed, different starts
  const BoundEstimate d2 = lower_bound(set, quick(24, 99));
  CHECK(d2.restart_values != a.restart_values);
}

TEST_CASE("estimate invariants: argmin consistency and restart bookkeeping") {
  const MubSet set = hw_set(3).subset({0, 1, 2});
  const BoundEstimate est = lower_bound(set, quick(32, 5));
  CHECK(std::abs(est.value - witness_value_product(est.state_a, est.state_b, set)) < 1e-10);
  CHECK(est.restart_values.size() == 32);
  for (double rv : est.restart_values) CHECK(est.value <= rv + 1e-12);
  CHECK(est.best_restart_index >= 0);
  CHECK(est.converged_fraction >= 0.0);
  CHECK(est.converged_fraction <= 1.0);
  CHECK(est.second_best >= est.value - 1e-12);
  const nlohmann::json j = bound_estimate_to_json(est);
  CHECK(j.at("value").get<double>() == est.value);
  CHECK(j.at("config").at("restarts").get<int>() == 32);
}

TEST_CASE("L_m is invariant under the equivalence transformations") {
  Rng rng(55);
  const MubSet set = hw_set(3).subset({0, 1, 2});
  const double base = lower_bound(set, quick(60)).value;

  MubSet rotated = set;
  const Matrix u = rng.haar_unitary(3);
  for (Basis& b : rotated.bases) b.matrix = u * b.matrix;
  CHECK(std::abs(lower_bound(rotated, quick(60)).value - base) < 2e-3);

  MubSet permuted = set.subset({2, 0, 1});
  CHECK(std::abs(lower_bound(permuted, quick(60)).value - base) < 2e-3);

  MubSet rephased = set;
  Matrix perm = Matrix::Zero(3, 3);  // column permutation + phases
  perm(0, 1) = Complex(std::cos(0.4), std::sin(0.4));
  perm(1, 2) = Complex(std::cos(-1.1), std::sin(-1.1));
  perm(2, 0) = Complex(0, 1);
  rephased.bases[1].matrix = rephased.bases[1].matrix * perm;
  CHECK(std::abs(lower_bound(rephased, quick(60)).value - base) < 2e-3);
}

TEST_CASE("random separable mixtures never dip below the bound") {
  Rng rng(77);
  const MubSet set = hw_set(3).subset({0, 1});
  const double lower = lower_bound(set, quick(60)).value;
  for (int rep = 0; rep < 20; ++rep) {
    // mixture of a few random product states
    double value = 0.0, weight_sum = 0.0;
    double weights[4];
    for (double& w : weights) weight_sum += (w = rng.uniform());
    for (double w : weights)
      value += w / weight_sum *
               witness_value_product(rng.haar_state(3), rng.haar_state(3), set);
    CHECK(value >= lower - 1e-9);
  }
}

TEST_CASE("sampled floor never undercuts the optimized bound") {
  const MubSet set = hw_set(4).subset({0, 1, 2});
  const double lower = lower_bound(set, quick(60)).value;
  const double floor = sampled_product_minimum(set, 20000, 3);
  CHECK(floor >= lower - 1e-9);
  // and the two parallel modes agree bitwise
  CHECK(sampled_product_minimum(set, 20000, 3, 1) == sampled_product_minimum(set, 20000, 3, 0));
}

TEST_CASE("local-unitary maximization: invariant state, Bell state, monotonicity") {
  OptimizerConfig cfg = quick(4, 7);
  cfg.max_iterations = 300;

  const MubSet set2 = hw_set(2);
  const DensityMatrix mm = maximally_mixed(2);
  const LocalUnitaryOptimum mm_opt = maximize_over_local_unitaries(mm, set2, cfg);
  CHECK(mm_opt.value == doctest::Approx(3.0 / 2).epsilon(1e-9));

  const DensityMatrix bell = bell_state(2, 0, 0);
  const LocalUnitaryOptimum bell_opt = maximize_over_local_unitaries(bell, set2, cfg);
  CHECK(bell_opt.value == doctest::Approx(2.0).epsilon(1e-6));

  const DensityMatrix w = werner_state(2, 0.5);
  const double raw = witness_value(w, set2).value;
  CHECK(maximize_over_local_unitaries(w, set2, cfg).value >= raw - 1e-12);
  CHECK(minimize_over_local_unitaries(w, set2, cfg).value <= raw + 1e-12);
}

TEST_CASE("optimizer configs serialize and honor dimension defaults") {
  CHECK(default_config_for_dim(5).restarts == 200);
  CHECK(default_config_for_dim(8).restarts == 1000);
  OptimizerConfig cfg;
  cfg.restarts = 77;
  cfg.seed = 5;
  cfg.gradient_tolerance = 1e-8;
  const OptimizerConfig back = optimizer_config_from_json(optimizer_config_to_json(cfg));
  CHECK(back.restarts == 77);
  CHECK(back.seed == 5);
  CHECK(back.gradient_tolerance == 1e-8);
  CHECK(back.step_policy == cfg.step_policy);
}
