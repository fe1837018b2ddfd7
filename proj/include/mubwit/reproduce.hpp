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

#ifndef MUBWIT_REPRODUCE_HPP
#define MUBWIT_REPRODUCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mubwit/optimize.hpp"

namespace mubwit {

struct ReproduceRow {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct ReproduceOutcome {
  std::string target;
  std::vector<ReproduceRow> rows;
  bool all_pass = false;
  std::string csv;  // fig1 emits its scan data here
};

// Valid targets: uppers, table1, table2, table3, d6, d8, d9, fig1.
// `full` uses the default restart budgets; otherwise a reduced smoke budget
// runs (for table3 the row tolerance widens to 5e-3 in smoke mode). Progress
// lines go to `log` when non-null.
ReproduceOutcome run_reproduce_target(const std::string& target, OptimizerConfig base_cfg,
                                      bool full, std::ostream* log = nullptr);

std::vector<std::string> reproduce_targets();

std::string render_reproduce_table(const ReproduceOutcome& o);

}  // namespace mubwit

#endif  // MUBWIT_REPRODUCE_HPP
