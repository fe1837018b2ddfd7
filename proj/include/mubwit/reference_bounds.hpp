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

#ifndef MUBWIT_REFERENCE_BOUNDS_HPP
#define MUBWIT_REFERENCE_BOUNDS_HPP

#include <string>
#include <vector>

#include "mubwit/mub.hpp"

namespace mubwit {

// The published bound values this tool reproduces, with the tolerance each
// comparison uses. Kept in one place so the tolerance policy is auditable.

struct ReferenceBound {
  std::string target;    // reproduce target this row belongs to
  int d = 0;
  std::string label;     // subset label as the tables print it
  std::string family;    // "hw" | "a7" | "fh" | "fpair" | "tao"
  double x = 0, y = 0, z = 0;  // family parameters where applicable
  std::vector<int> subset;     // indices into the family set; empty = whole set
  double lower = 0.0;          // published L
  double tol = 2e-3;
};

struct ReferenceUpper {
  std::string target;
  int d = 0;
  int m = 0;
  long long num = 0, den = 1;  // published U as an exact fraction
};

const std::vector<ReferenceBound>& reference_bounds();
const std::vector<ReferenceUpper>& reference_uppers();

// Builds the measurement set a ReferenceBound row refers to (before taking
// row.subset).
MubSet reference_family_set(const ReferenceBound& row);

}  // namespace mubwit

#endif  // MUBWIT_REFERENCE_BOUNDS_HPP
