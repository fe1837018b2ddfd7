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

#ifndef MUBWIT_OPTIMIZE_HPP
#define MUBWIT_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mubwit/mub.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

namespace mubwit {

struct OptimizerConfig {
  int restarts = 200;
  int max_iterations = 2000;
  double gradient_tolerance = 1e-9;
  // Restarts alternate exact minimizations over the two product factors (each
  // step solves a d x d Hermitian eigenproblem); this descriptor is recorded
  // in outputs for reproducibility.
  std::string step_policy = "block-eigen";
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware default, 1 = serial reference path
};

// 200 restarts up to d = 7, 1000 from d = 8 on, where the landscape gets
// noticeably rougher.
OptimizerConfig default_config_for_dim(int d);

nlohmann::json optimizer_config_to_json(const OptimizerConfig& cfg);
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j);

// A pure state in C^d up to global phase, parameterized by 2(d-1) reals:
// d-1 hyperspherical magnitude angles followed by d-1 relative phases.
struct ProductParams {
  RealVector theta_a;
  RealVector theta_b;
};

// decode(0) = |0>. The decoded vector is normalized and gauge-fixed so its
// first nonvanishing amplitude is real non-negative. Throws on wrong length.
Vector decode_pure_state(const RealVector& theta, int d);
// Left inverse up to global phase: |<decode(encode(v)), v>| = 1.
RealVector encode_pure_state(const Vector& v);

struct BoundEstimate {
  double value = 0.0;
  ProductParams argmin;
  Vector state_a, state_b;   // decoded argmin
  int restarts = 0;
  double converged_fraction = 0.0;  // restarts whose final gradient met the tolerance
  int best_restart_index = -1;
  double second_best = 0.0;         // best value over the other restarts
  std::uint64_t seed = 0;
  OptimizerConfig config;
  std::vector<double> restart_values;  // final value per restart
};

nlohmann::json bound_estimate_to_json(const BoundEstimate& e);

// L_m = min over pure product states of M_m. Minimizing over pure products
// suffices: M_m is linear in rho and those are the extreme points of the
// separable set. Multi-start local minimization; restarts draw Haar-uniform
// starts from streams keyed by (seed, restart), so the result does not depend
// on thread count. Ties break toward the lowest restart index.
BoundEstimate lower_bound(const MubSet& set, const OptimizerConfig& cfg);

// Objective sum_k,i |<i_k|a>|^2 |<i_k|b>|^2 over unnormalized complex vectors
// (normalization happens inside), with its analytic gradient. The packed real
// layout is [Re a, Im a, Re b, Im b].
class ProductObjective {
 public:
  explicit ProductObjective(const MubSet& set);
  int dim() const { return d_; }
  int bases() const { return m_; }

  double value(const Vector& a, const Vector& b) const;
  // Returns the value; grad_a / grad_b receive d complex entries which are the
  // Wirtinger derivatives d f / d conj(a_j) (gradients in the packed real
  // layout are 2*Re and 2*Im of these).
  double value_and_gradient(const Vector& a, const Vector& b, Vector* grad_a, Vector* grad_b) const;

  double value_packed(const RealVector& x) const;
  RealVector gradient_packed(const RealVector& x) const;

 private:
  int d_, m_;
  Matrix vectors_;  // (m*d) x d, row t = basis vector t (conjugated on use)
};

// Max relative deviation between an analytic gradient and central finite
// differences with the given step. Pass an empty function to instead compare
// one-sided against central differences (a smoothness probe).
double gradient_check(const std::function<double(const RealVector&)>& f,
                      const std::function<RealVector(const RealVector&)>& grad,
                      const RealVector& theta, double step = 1e-6);

struct LocalUnitaryOptimum {
  double value = 0.0;
  Matrix u, v;                  // optimizing rotation (U (x) V) rho (U (x) V)^dag
  bool conjugate_pair = false;  // true when the reported optimum has V = conj(U)
  int best_restart_index = -1;
};

// max over U, V of M_m((U (x) V) rho (U (x) V)^dag), searching both the
// constrained family V = conj(U) and free pairs; the larger wins. Restart 0
// starts from the identity, so the result is never below M_m(rho).
LocalUnitaryOptimum maximize_over_local_unitaries(const DensityMatrix& rho, const MubSet& set,
                                                  const OptimizerConfig& cfg);
// Same search minimizing; values below the separable lower bound certify
// entanglement just as values above the upper bound do.
LocalUnitaryOptimum minimize_over_local_unitaries(const DensityMatrix& rho, const MubSet& set,
                                                  const OptimizerConfig& cfg);

// Minimum of witness_value_product over `samples` Haar-random product states.
// A cheap statistical floor: it can never undercut the true L_m.
double sampled_product_minimum(const MubSet& set, std::int64_t samples, std::uint64_t seed,
                               int threads = 0);

}  // namespace mubwit

#endif  // MUBWIT_OPTIMIZE_HPP
