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
//
// Times the serial reference path (threads = 1) against the OpenMP path for
// the two hot kernels: the multi-start lower bound and the random product
// sampling sweep. The OpenMP path must produce bit-identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "mubwit/mub.hpp"
#include "mubwit/optimize.hpp"
#include "mubwit/parallel.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const int d = argc > 1 ? std::atoi(argv[1]) : 5;
  const int restarts = argc > 2 ? std::atoi(argv[2]) : 400;
  const long long samples = argc > 3 ? std::atoll(argv[3]) : 1000000;

  const mubwit::MubSet set = mubwit::hw_set(d);
  std::printf("benchmark: d=%d, %d bases, %d restarts, %lld samples, %d threads available\n", d,
              set.size(), restarts, samples, mubwit::resolve_threads(0));

  mubwit::OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = 42;

  cfg.threads = 1;
  auto t0 = Clock::now();
  const mubwit::BoundEstimate serial = mubwit::lower_bound(set, cfg);
  const double t_serial = seconds_since(t0);

  cfg.threads = 0;
  t0 = Clock::now();
  const mubwit::BoundEstimate parallel = mubwit::lower_bound(set, cfg);
  const double t_parallel = seconds_since(t0);

  const bool identical = serial.value == parallel.value &&
                         serial.best_restart_index == parallel.best_restart_index;
  std::printf("lower_bound   serial %8.3fs   openmp %8.3fs   speedup %.2fx   identical: %s\n",
              t_serial, t_parallel, t_serial / t_parallel, identical ? "yes" : "NO");

  t0 = Clock::now();
  const double floor_serial = mubwit::sampled_product_minimum(set, samples, 7, 1);
  const double ts2 = seconds_since(t0);
  t0 = Clock::now();
  const double floor_parallel = mubwit::sampled_product_minimum(set, samples, 7, 0);
  const double tp2 = seconds_since(t0);
  std::printf("sampling      serial %8.3fs   openmp %8.3fs   speedup %.2fx   identical: %s\n", ts2,
              tp2, ts2 / tp2, floor_serial == floor_parallel ? "yes" : "NO");
  std::printf("L = %.6f (sampled floor %.6f)\n", serial.value, floor_serial);
  return identical && floor_serial == floor_parallel ? 0 : 1;
}
