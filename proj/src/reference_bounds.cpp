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

#include "mubwit/reference_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace mubwit {
namespace {

constexpr double kPi = 3.14159265358979323846;

// All published lower bounds, keyed by the subset labels the tables use.
// Heisenberg-Weyl bases are indexed in the Z, X, XZ, XZ^2, ... order produced
// by hw_set, which is the labelling under which the printed subset rows carry
// the printed values. Tolerance is 2e-3 except for d = 9 (5e-3), whose values
// are numerically delicate.
std::vector<ReferenceBound> make_bounds() {
  std::vector<ReferenceBound> rows;
  auto hw = [&](const char* target, int d, const char* label, std::vector<int> subset, double lower,
                double tol = 2e-3) {
    rows.push_back({target, d, label, "hw", 0, 0, 0, std::move(subset), lower, tol});
  };

  // --- Table 1: d = 2, 3, 4 ---
  hw("table1", 2, "B1B2", {0, 1}, 0.5);
  hw("table1", 2, "B1B2B3", {0, 1, 2}, 1.0);
  hw("table1", 3, "B1B2", {0, 1}, 0.211);
  hw("table1", 3, "B1B2B3", {0, 1, 2}, 0.5);
  hw("table1", 3, "B1B2B3B4", {0, 1, 2, 3}, 1.0);
  hw("table1", 4, "B1B2 (ext)", {0, 1}, 0.0);
  hw("table1", 4, "B1B2B3 (ext)", {0, 1, 2}, 0.25);
  hw("table1", 4, "B1B2B3B4 (ext)", {0, 1, 2, 3}, 0.5);
  hw("table1", 4, "B1..B5 (ext)", {0, 1, 2, 3, 4}, 1.0);
  rows.push_back({"table1", 4, "I F(pi/2) H(0,0)", "fh", kPi / 2, 0, 0, {}, 0.5, 2e-3});
  rows.push_back({"table1", 4, "I F(pi/2) H(pi/2,pi/2)", "fh", kPi / 2, kPi / 2, kPi / 2, {}, 0.25, 2e-3});
  rows.push_back({"table1", 4, "I F(0.6) pair", "fpair", 0.6, 0, 0, {}, 0.0, 2e-3});
  rows.push_back({"table1", 4, "I F(2.2) pair", "fpair", 2.2, 0, 0, {}, 0.0, 2e-3});

  // --- Table 2: d = 5 ---
  hw("table2", 5, "B1B2", {0, 1}, 0.0297);
  hw("table2", 5, "B1B2B3", {0, 1, 2}, 0.2764);
  hw("table2", 5, "B1B2B4", {0, 1, 3}, 0.1273);
  hw("table2", 5, "B1B2B3B4", {0, 1, 2, 3}, 0.3350);
  hw("table2", 5, "B1..B5", {0, 1, 2, 3, 4}, 0.5);
  hw("table2", 5, "B1..B6", {0, 1, 2, 3, 4, 5}, 1.0);

  // --- Table 3: d = 7 ---
  hw("table3", 7, "B1B2", {0, 1}, 0.0034);
  hw("table3", 7, "B1B2B3", {0, 1, 2}, 0.0698);
  rows.push_back({"table3", 7, "B1B2A7", "a7", 0, 0, 0, {}, 0.0557, 2e-3});
  hw("table3", 7, "B1B2B3B4", {0, 1, 2, 3}, 0.1514);
  hw("table3", 7, "B1B2B3B5", {0, 1, 2, 4}, 0.20101);
  hw("table3", 7, "B1..B5", {0, 1, 2, 3, 4}, 0.2750);
  hw("table3", 7, "B1..B6", {0, 1, 2, 3, 4, 5}, 0.3896);
  hw("table3", 7, "B1..B7", {0, 1, 2, 3, 4, 5, 6}, 0.5);
  hw("table3", 7, "B1..B8", {0, 1, 2, 3, 4, 5, 6, 7}, 1.0);

  // --- d = 6 ---
  rows.push_back({"d6", 6, "I S6 pair", "tao", 0, 0, 0, {}, 0.0, 2e-3});
  hw("d6", 6, "HW triple", {0, 1, 2}, 0.1056);

  // --- d = 8 ---
  hw("d8", 8, "m=2", {0, 1}, 0.0);
  hw("d8", 8, "m=3", {0, 1, 2}, 0.0);
  hw("d8", 8, "m=4", {0, 1, 2, 3}, 0.0);
  hw("d8", 8, "m=5", {0, 1, 2, 3, 4}, 1.0 / 8);
  hw("d8", 8, "m=6", {0, 1, 2, 3, 4, 5}, 2.0 / 8);
  hw("d8", 8, "m=7", {0, 1, 2, 3, 4, 5, 6}, 3.0 / 8);
  hw("d8", 8, "m=8", {0, 1, 2, 3, 4, 5, 6, 7}, 0.5);
  hw("d8", 8, "m=9", {0, 1, 2, 3, 4, 5, 6, 7, 8}, 1.0);

  // --- d = 9 spot-check representatives, one per published class value ---
  const double t9 = 5e-3;
  hw("d9", 9, "m=2", {0, 1}, 0.0, t9);
  hw("d9", 9, "m=3", {0, 1, 2}, 0.0, t9);
  hw("d9", 9, "m=4 class 0", {0, 1, 5, 9}, 0.0, t9);
  hw("d9", 9, "m=4 class 0.077", {0, 1, 2, 4}, 0.077, t9);
  hw("d9", 9, "m=4 class 1/6", {0, 1, 2, 3}, 1.0 / 6, t9);
  hw("d9", 9, "m=5 class 0.140", {0, 1, 2, 4, 5}, 0.140, t9);
  hw("d9", 9, "m=5 class 0.198", {0, 1, 2, 3, 4}, 0.198, t9);
  hw("d9", 9, "m=6 class 2/11", {0, 1, 2, 4, 5, 9}, 2.0 / 11, t9);
  hw("d9", 9, "m=6 class 0.259", {0, 1, 2, 3, 4, 5}, 0.259, t9);
  hw("d9", 9, "m=6 class 1/3", {0, 1, 2, 3, 4, 7}, 1.0 / 3, t9);
  hw("d9", 9, "m=7 class 0.331", {0, 1, 2, 3, 4, 5, 6}, 0.331, t9);
  hw("d9", 9, "m=7 class 1/3", {0, 1, 2, 3, 4, 5, 7}, 1.0 / 3, t9);
  hw("d9", 9, "m=8", {0, 1, 2, 3, 4, 5, 6, 7}, 0.418, t9);
  hw("d9", 9, "m=9", {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.5, t9);
  hw("d9", 9, "m=10", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 1.0, t9);
  return rows;
}

std::vector<ReferenceUpper> make_uppers() {
  std::vector<ReferenceUpper> rows;
  auto add = [&](const char* target, int d, int m, long long num, long long den) {
    rows.push_back({target, d, m, num, den});
  };
  add("table1", 2, 2, 3, 2);
  add("table1", 2, 3, 2, 1);
  add("table1", 3, 2, 4, 3);
  add("table1", 3, 3, 5, 3);
  add("table1", 3, 4, 2, 1);
  add("table1", 4, 2, 5, 4);
  add("table1", 4, 3, 6, 4);
  add("table1", 4, 4, 7, 4);
  add("table1", 4, 5, 2, 1);
  add("table2", 5, 2, 6, 5);
  add("table2", 5, 3, 7, 5);
  add("table2", 5, 4, 8, 5);
  add("table2", 5, 5, 9, 5);
  add("table2", 5, 6, 2, 1);
  add("table3", 7, 2, 8, 7);
  add("table3", 7, 3, 9, 7);
  add("table3", 7, 4, 10, 7);
  add("table3", 7, 5, 11, 7);
  add("table3", 7, 6, 12, 7);
  add("table3", 7, 7, 13, 7);
  add("table3", 7, 8, 2, 1);
  return rows;
}

}  // namespace

const std::vector<ReferenceBound>& reference_bounds() {
  static const std::vector<ReferenceBound> rows = make_bounds();
  return rows;
}

const std::vector<ReferenceUpper>& reference_uppers() {
  static const std::vector<ReferenceUpper> rows = make_uppers();
  return rows;
}

MubSet reference_family_set(const ReferenceBound& row) {
  if (row.family == "hw") return hw_set(row.d);
  if (row.family == "a7") return a7_triple();
  if (row.family == "fh") return unextendible_triple_d4(row.x, row.y, row.z);
  if (row.family == "tao") {
    MubSet set;
    set.dim = 6;
    set.provenance = "d=6 unextendible pair {I, S6}";
    set.bases = {standard_basis(6), tao_matrix()};
    return set;
  }
  if (row.family == "fpair") {
    MubSet set;
    set.dim = 4;
    set.provenance = "d=4 pair {I, F(x)} x=" + std::to_string(row.x);
    set.bases = {standard_basis(4), fourier_family_d4(row.x)};
    return set;
  }
  throw std::invalid_argument("reference_family_set: unknown family " + row.family);
}

}  // namespace mubwit
