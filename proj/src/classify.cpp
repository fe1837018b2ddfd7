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

#include "mubwit/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "mubwit/parallel.hpp"
#include "mubwit/witness.hpp"

namespace mubwit {

std::vector<std::vector<int>> enumerate_subsets(int n_bases, int m) {
  if (m < 1 || m > n_bases) throw std::invalid_argument("enumerate_subsets: need 1 <= m <= N");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == n_bases - m + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

ClassificationReport classify_subsets(const MubSet& set, int m, const OptimizerConfig& cfg,
                                      double cluster_tol, bool restarts_override) {
  const auto subsets = enumerate_subsets(set.size(), m);
  const int count = static_cast<int>(subsets.size());

  OptimizerConfig per_subset = cfg;
  per_subset.threads = 1;  // the scan itself is the parallel loop
  if (!restarts_override && count > 50)
    per_subset.restarts = std::max(24, static_cast<int>(
        static_cast<long long>(cfg.restarts) * 50 / count));

  ClassificationReport report;
  report.d = set.dim;
  report.m = m;
  report.cluster_tol = cluster_tol;
  report.restarts_per_subset = per_subset.restarts;
  report.fingerprints.resize(count);

  parallel_for(count, cfg.threads, [&](int s) {
    SubsetFingerprint& fp = report.fingerprints[s];
    fp.subset = subsets[s];
    fp.estimate = lower_bound(set.subset(subsets[s]), per_subset);
    fp.lower = fp.estimate.value;
  });

  // Cluster by value: sort, then break a class whenever the gap to the class
  // floor exceeds cluster_tol.
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (report.fingerprints[x].lower != report.fingerprints[y].lower)
      return report.fingerprints[x].lower < report.fingerprints[y].lower;
    return report.fingerprints[x].subset < report.fingerprints[y].subset;
  });
  for (int idx : order) {
    const SubsetFingerprint& fp = report.fingerprints[idx];
    if (report.classes.empty() || fp.lower - report.classes.back().representative > cluster_tol) {
      SubsetClass cls;
      cls.representative = fp.lower;
      cls.min_value = cls.max_value = fp.lower;
      report.classes.push_back(std::move(cls));
    }
    SubsetClass& cls = report.classes.back();
    cls.members.push_back(fp.subset);
    cls.max_value = std::max(cls.max_value, fp.lower);
    cls.min_value = std::min(cls.min_value, fp.lower);
    ++cls.multiplicity;
  }
  return report;
}

nlohmann::json classification_report_to_json(const ClassificationReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const SubsetClass& c : r.classes) {
    classes.push_back({{"representative_L", c.representative},
                       {"min_L", c.min_value},
                       {"max_L", c.max_value},
                       {"multiplicity", c.multiplicity},
                       {"members", c.members}});
  }
  nlohmann::json fingerprints = nlohmann::json::array();
  for (const SubsetFingerprint& fp : r.fingerprints)
    fingerprints.push_back({{"subset", fp.subset}, {"L", fp.lower}});
  return {{"d", r.d},
          {"m", r.m},
          {"cluster_tol", r.cluster_tol},
          {"restarts_per_subset", r.restarts_per_subset},
          {"classes", std::move(classes)},
          {"fingerprints", std::move(fingerprints)}};
}

std::string render_classification_table(const ClassificationReport& r) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "d=%d m=%d  (%zu classes, cluster tol %g, %d restarts/subset)\n",
                r.d, r.m, r.classes.size(), r.cluster_tol, r.restarts_per_subset);
  out += line;
  out += "  m  subset                 L          U\n";
  const Rational u = upper_bound(r.d, r.m);
  for (const SubsetClass& c : r.classes) {
    std::string subset_str;
    for (size_t i = 0; i < c.members.front().size(); ++i)
      subset_str += (i ? " B" : "B") + std::to_string(c.members.front()[i] + 1);
    std::snprintf(line, sizeof line, "  %-2d %-22s %-10.5g %lld/%lld  [%d times]\n", r.m,
                  subset_str.c_str(), c.representative, u.num, u.den, c.multiplicity);
    out += line;
  }
  return out;
}

}  // namespace mubwit
