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

#ifndef MUBWIT_CLASSIFY_HPP
#define MUBWIT_CLASSIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mubwit/mub.hpp"
#include "mubwit/optimize.hpp"

namespace mubwit {

// All C(n_bases, m) index subsets in lexicographic order.
std::vector<std::vector<int>> enumerate_subsets(int n_bases, int m);

struct SubsetFingerprint {
  std::vector<int> subset;  // strictly increasing basis indices
  double lower = 0.0;       // optimized L_m
  BoundEstimate estimate;
};

struct SubsetClass {
  double representative = 0.0;  // smallest member value
  double min_value = 0.0, max_value = 0.0;
  std::vector<std::vector<int>> members;
  int multiplicity = 0;
};

struct ClassificationReport {
  int d = 0, m = 0;
  double cluster_tol = 0.0;
  int restarts_per_subset = 0;
  std::vector<SubsetClass> classes;             // sorted by representative, ascending
  std::vector<SubsetFingerprint> fingerprints;  // lexicographic subset order
};

// Fingerprints every m-subset by its lower bound and groups values closer
// than cluster_tol. Distinct classes certify inequivalent subsets; equal
// values are only "indistinguishable by this criterion". For scans over more
// than 50 subsets the per-subset restart budget is scaled down
// proportionally (never below 24) unless cfg.restarts was chosen explicitly
// via restarts_override.
ClassificationReport classify_subsets(const MubSet& set, int m, const OptimizerConfig& cfg,
                                      double cluster_tol = 5e-3, bool restarts_override = false);

nlohmann::json classification_report_to_json(const ClassificationReport& r);
// Text table in the layout of the reference tables (columns m, subset, L, U).
std::string render_classification_table(const ClassificationReport& r);

}  // namespace mubwit

#endif  // MUBWIT_CLASSIFY_HPP
