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

#ifndef MUBWIT_PARALLEL_HPP
#define MUBWIT_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mubwit {

// threads == 0 picks the hardware default, threads == 1 forces the serial
// reference path (no OpenMP region at all).
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  if (requested <= 0) return omp_get_max_threads();
  return requested;
#else
  (void)requested;
  return 1;
#endif
}

// Runs fn(i) for i in [0, n). Iterations must be independent; results keyed
// by i so the merge is deterministic regardless of scheduling.
template <typename F>
void parallel_for(int n, int threads, F&& fn) {
  const int t = resolve_threads(threads);
  if (t <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(t)
  for (int i = 0; i < n; ++i) fn(i);
#else
  for (int i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace mubwit

#endif  // MUBWIT_PARALLEL_HPP
