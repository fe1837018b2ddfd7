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

#ifndef MUBWIT_RNG_HPP
#define MUBWIT_RNG_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace mubwit {

// Deterministic random stream. The gaussian is hand-rolled (Box-Muller on top
// of mt19937_64) so sequences do not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Independent stream for one restart of a multi-start search. Streams are a
  // pure function of (seed, index), so restarts may run in any order on any
  // number of threads and still produce identical results.
  static Rng for_restart(std::uint64_t seed, int index);

  double uniform();   // [0, 1)
  double gaussian();  // N(0, 1)

  // Haar-uniform pure state in C^d.
  Eigen::VectorXcd haar_state(int d);
  // Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
  Eigen::MatrixXcd haar_unitary(int d);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mubwit

#endif  // MUBWIT_RNG_HPP
