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
// Command-line front end: build measurement sets, evaluate witness bounds,
// sweep state families, classify subsets and rerun the published results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mubwit/classify.hpp"
#include "mubwit/manifest.hpp"
#include "mubwit/mub.hpp"
#include "mubwit/optimize.hpp"
#include "mubwit/reference_bounds.hpp"
#include "mubwit/reproduce.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kExitFailure = 1;  // tolerance or verification failure
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string config_path;
  std::string out_path;
  std::string manifest_path;
  std::string format = "json";
  int restarts = -1;  // -1: dimension default
  long long seed = 0;
  int threads = 0;
  double tol = 1e-10;  // verification tolerance
};

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += " ";
    s += argv[i];
  }
  return s;
}

mubwit::OptimizerConfig make_config(const GlobalOptions& g, int d) {
  mubwit::OptimizerConfig cfg = mubwit::default_config_for_dim(d);
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config_path);
    nlohmann::json j;
    in >> j;
    cfg = mubwit::optimizer_config_from_json(j);
  }
  if (g.restarts > 0) cfg.restarts = g.restarts;
  cfg.seed = static_cast<std::uint64_t>(g.seed);
  cfg.threads = g.threads;
  return cfg;
}

// Writes output (file or stdout) and the accompanying manifest.
void emit(const GlobalOptions& g, const std::string& payload, const nlohmann::json& config_snapshot,
          double wall_seconds) {
  if (g.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + g.out_path);
    out << payload;
  }
  mubwit::RunManifest manifest;
  manifest.command_line = config_snapshot.value("command_line", "");
  manifest.config_snapshot = config_snapshot;
  manifest.seed = static_cast<std::uint64_t>(g.seed);
  manifest.wall_seconds = wall_seconds;
  manifest.output_digest = mubwit::digest_hex(payload);
  const std::string path =
      g.manifest_path.empty() ? (g.out_path.empty() ? std::string("mubwit") : g.out_path) +
                                    ".manifest.json"
                              : g.manifest_path;
  mubwit::write_manifest(path, manifest);
}

mubwit::MubSet build_family(const std::string& family, int d, double x, double y, double z) {
  if (family == "hw") return mubwit::hw_set(d);
  if (family == "fourier4") {
    mubwit::MubSet set;
    set.dim = 4;
    set.provenance = "d=4 pair {I, F(x)} x=" + std::to_string(x);
    set.bases = {mubwit::standard_basis(4), mubwit::fourier_family_d4(x)};
    return set;
  }
  if (family == "h4") return mubwit::unextendible_triple_d4(x, y, z);
  if (family == "tao6") {
    mubwit::MubSet set;
    set.dim = 6;
    set.provenance = "d=6 unextendible pair {I, S6}";
    set.bases = {mubwit::standard_basis(6), mubwit::tao_matrix()};
    return set;
  }
  if (family == "a7") return mubwit::a7_triple();
  throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

mubwit::MubSet load_or_build(const std::string& set_path, const std::string& family, int d,
                             double x, double y, double z, double verify_tol) {
  mubwit::MubSet set;
  if (!set_path.empty()) {
    std::ifstream in(set_path);
    if (!in) throw std::runtime_error("cannot open set file " + set_path);
    nlohmann::json j;
    in >> j;
    set = mubwit::mub_set_from_json(j);
  } else {
    set = build_family(family, d, x, y, z);
  }
  const mubwit::MubVerifyReport report = mubwit::verify_mub_set(set, verify_tol);
  if (!report.ok)
    throw std::runtime_error("set failed verification: max deviation " +
                             std::to_string(report.max_deviation) + " (" + report.detail + ")");
  return set;
}

std::vector<int> parse_subset(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mubwit: entanglement witness bounds from mutually unbiased bases"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_version_flag("--version", mubwit::kVersion);

  GlobalOptions g;
  app.add_option("--out", g.out_path, "Output file (default: stdout)");
  app.add_option("--manifest", g.manifest_path, "Manifest path (default: <out>.manifest.json)");
  app.add_option("--config", g.config_path, "Optimizer config JSON file");
  app.add_option("--restarts", g.restarts, "Optimizer restarts (default: 200, 1000 for d >= 8)");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--threads", g.threads, "Worker threads (0 = all, 1 = serial)");
  app.add_option("--tol", g.tol, "Unbiasedness verification tolerance");
  app.add_option("--format", g.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  int d = 0;
  std::string family = "hw";
  std::string set_path, subset_csv, state_family = "magic", target;
  double x = kPi / 2, y = kPi / 2, z = kPi / 2;
  double alpha_min = 0.0, alpha_max = 0.25, phi_min = 0.0, phi_max = 1.0;
  int steps = 11, m = 0, kk = 0, ll = 0, lu_restarts = 8;
  double alpha = 0.0, beta = 0.0, phi = 0.0, cluster_tol = 5e-3;
  bool full = false;

  CLI::App* cmd_build = app.add_subcommand("build", "Construct and verify a MUB set file");
  cmd_build->add_option("--d", d, "Dimension")->required();
  cmd_build->add_option("--family", family, "hw | fourier4 | h4 | tao6 | a7");
  cmd_build->add_option("--x", x, "F(x) angle (fourier4, h4; default pi/2)");
  cmd_build->add_option("--y", y, "H(y,z) angle y (h4)");
  cmd_build->add_option("--z", z, "H(y,z) angle z (h4)");

  CLI::App* cmd_bounds = app.add_subcommand("bounds", "Lower/upper witness bounds for a set");
  cmd_bounds->add_option("--set", set_path, "MubSet JSON file (else --d/--family)");
  cmd_bounds->add_option("--d", d, "Dimension");
  cmd_bounds->add_option("--family", family, "hw | fourier4 | h4 | tao6 | a7");
  cmd_bounds->add_option("--x", x, "family angle x");
  cmd_bounds->add_option("--y", y, "family angle y");
  cmd_bounds->add_option("--z", z, "family angle z");
  cmd_bounds->add_option("--subset", subset_csv, "Comma-separated basis indices (default: all)");

  CLI::App* cmd_scan = app.add_subcommand("scan", "Sweep a state family against a set (CSV)");
  cmd_scan->add_option("--family", state_family, "magic | werner")->required();
  cmd_scan->add_option("--d", d, "Dimension")->required();
  cmd_scan->add_option("--set", set_path, "MubSet JSON file (else hw set)");
  cmd_scan->add_option("--subset", subset_csv, "Basis indices into the set");
  cmd_scan->add_option("--alpha-min", alpha_min, "Magic family: first alpha (= beta)");
  cmd_scan->add_option("--alpha-max", alpha_max, "Magic family: last alpha");
  cmd_scan->add_option("--phi-min", phi_min, "Werner family: first phi");
  cmd_scan->add_option("--phi-max", phi_max, "Werner family: last phi");
  cmd_scan->add_option("--steps", steps, "Grid points");
  cmd_scan->add_option("--lu-restarts", lu_restarts, "Restarts for the local-unitary search");

  CLI::App* cmd_classify = app.add_subcommand("classify", "Group m-subsets by lower bound");
  cmd_classify->add_option("--d", d, "Dimension")->required();
  cmd_classify->add_option("--m", m, "Subset size")->required();
  cmd_classify->add_option("--set", set_path, "MubSet JSON file (else hw set)");
  cmd_classify->add_option("--cluster-tol", cluster_tol, "Clustering tolerance");

  CLI::App* cmd_reproduce =
      app.add_subcommand("reproduce", "Rerun a published result and diff against it");
  cmd_reproduce->add_option("target", target, "uppers | table1 | table2 | table3 | d6 | d8 | d9 | fig1")
      ->required();
  cmd_reproduce->add_flag("--full", full, "Use full (slower) restart budgets");

  CLI::App* cmd_state = app.add_subcommand("state", "Export a state family member as JSON");
  cmd_state->add_option("--family", state_family, "bell | magic | werner")->required();
  cmd_state->add_option("--d", d, "Dimension")->required();
  cmd_state->add_option("--k", kk, "Bell index k");
  cmd_state->add_option("--l", ll, "Bell index l");
  cmd_state->add_option("--alpha", alpha, "Magic weight on P(0,0)");
  cmd_state->add_option("--beta", beta, "Magic weight on P(0,1)");
  cmd_state->add_option("--phi", phi, "Werner parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    nlohmann::json snapshot;
    snapshot["command_line"] = join_args(argc, argv);
    snapshot["version"] = mubwit::kVersion;

    if (cmd_build->parsed()) {
      const mubwit::MubSet set = build_family(family, d, x, y, z);
      const mubwit::MubVerifyReport report = mubwit::verify_mub_set(set, g.tol);
      if (!report.ok) {
        std::cerr << "verification failed: " << report.detail << " (deviation "
                  << report.max_deviation << ")\n";
        return kExitFailure;
      }
      snapshot["verify_max_deviation"] = report.max_deviation;
      emit(g, mubwit::mub_set_to_json(set).dump(2) + "\n", snapshot, elapsed());
      return 0;
    }

    if (cmd_bounds->parsed()) {
      mubwit::MubSet set = load_or_build(set_path, family, d, x, y, z, g.tol);
      if (!subset_csv.empty()) set = set.subset(parse_subset(subset_csv));
      const mubwit::OptimizerConfig cfg = make_config(g, set.dim);
      snapshot["config"] = mubwit::optimizer_config_to_json(cfg);
      const mubwit::BoundEstimate estimate = mubwit::lower_bound(set, cfg);
      const mubwit::Rational u = mubwit::upper_bound(set.dim, set.size());
      nlohmann::json out;
      out["L"] = estimate.value;
      out["U"] = u.value();
      out["U_fraction"] = std::to_string(u.num) + "/" + std::to_string(u.den);
      out["d"] = set.dim;
      out["m"] = set.size();
      out["provenance"] = set.provenance;
      out["estimate"] = mubwit::bound_estimate_to_json(estimate);
      std::string payload;
      if (g.format == "table") {
        char line[160];
        std::snprintf(line, sizeof line, "d=%d m=%d  L=%.6g  U=%lld/%lld\n", set.dim, set.size(),
                      estimate.value, u.num, u.den);
        payload = line;
      } else {
        payload = out.dump(2) + "\n";
      }
      emit(g, payload, snapshot, elapsed());
      return 0;
    }

    if (cmd_scan->parsed()) {
      mubwit::MubSet set = load_or_build(set_path, set_path.empty() ? "hw" : family, d, x, y, z, g.tol);
      if (!subset_csv.empty()) set = set.subset(parse_subset(subset_csv));
      mubwit::OptimizerConfig cfg = make_config(g, set.dim);
      snapshot["config"] = mubwit::optimizer_config_to_json(cfg);
      const mubwit::BoundEstimate lb = mubwit::lower_bound(set, cfg);
      const double uv = mubwit::upper_bound(set.dim, set.size()).value();
      mubwit::OptimizerConfig lu_cfg = cfg;
      lu_cfg.restarts = lu_restarts;
      lu_cfg.max_iterations = 400;

      std::string csv =
          "status,param,beta_or_phi,ppt_min_eigenvalue,ppt,m_raw,m_max_lu,m_min_lu,lower,upper,"
          "violation,detected\n";
      if (state_family != "magic" && state_family != "werner")
        throw CLI::ValidationError("--family", "scan family must be magic or werner");
      for (int s = 0; s < steps; ++s) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(s) / (steps - 1);
        const double p1 = state_family == "magic" ? alpha_min + t * (alpha_max - alpha_min)
                                                  : phi_min + t * (phi_max - phi_min);
        const double p2 = p1;
        char line[512];
        try {
          mubwit::DensityMatrix rho;
          if (state_family == "magic") {
            rho = mubwit::magic_simplex_state(set.dim, p1, p2);
          } else {
            rho = mubwit::werner_state(set.dim, p1);
          }
          const mubwit::PptResult ppt = mubwit::is_ppt(rho);
          const double raw = mubwit::witness_value(rho, set).value;
          const double mx = mubwit::maximize_over_local_unitaries(rho, set, lu_cfg).value;
          const double mn = mubwit::minimize_over_local_unitaries(rho, set, lu_cfg).value;
          const char* violation = mx > uv + 1e-6 ? "upper" : (mn < lb.value - 1e-6 ? "lower" : "none");
          const bool detected = mx > uv + 1e-6 || mn < lb.value - 1e-6;
          std::snprintf(line, sizeof line, "ok,%.9g,%.9g,%.9g,%d,%.9g,%.9g,%.9g,%.9g,%.9g,%s,%d\n",
                        p1, p2, ppt.min_eigenvalue, ppt.ppt ? 1 : 0, raw, mx, mn, lb.value, uv,
                        violation, detected ? 1 : 0);
        } catch (const std::invalid_argument& err) {
          // non-physical grid point: keep the row as a warning
          std::snprintf(line, sizeof line, "nonphysical,%.9g,,,,,,,,,,\n", p1);
        }
        csv += line;
      }
      emit(g, csv, snapshot, elapsed());
      return 0;
    }

    if (cmd_classify->parsed()) {
      const mubwit::MubSet set = load_or_build(set_path, "hw", d, x, y, z, g.tol);
      const mubwit::OptimizerConfig cfg = make_config(g, set.dim);
      snapshot["config"] = mubwit::optimizer_config_to_json(cfg);
      snapshot["cluster_tol"] = cluster_tol;
      const mubwit::ClassificationReport report =
          mubwit::classify_subsets(set, m, cfg, cluster_tol, g.restarts > 0);
      const std::string payload = g.format == "table"
                                      ? mubwit::render_classification_table(report)
                                      : mubwit::classification_report_to_json(report).dump(2) + "\n";
      emit(g, payload, snapshot, elapsed());
      return 0;
    }

    if (cmd_reproduce->parsed()) {
      mubwit::OptimizerConfig base;
      base.seed = static_cast<std::uint64_t>(g.seed);
      base.threads = g.threads;
      snapshot["target"] = target;
      snapshot["full"] = full;
      const mubwit::ReproduceOutcome outcome =
          mubwit::run_reproduce_target(target, base, full, &std::cerr);
      std::string payload = mubwit::render_reproduce_table(outcome);
      if (!outcome.csv.empty()) payload += outcome.csv;
      emit(g, payload, snapshot, elapsed());
      return outcome.all_pass ? 0 : kExitFailure;
    }

    if (cmd_state->parsed()) {
      mubwit::DensityMatrix rho;
      if (state_family == "bell") {
        rho = mubwit::bell_state(d, kk, ll);
      } else if (state_family == "magic") {
        rho = mubwit::magic_simplex_state(d, alpha, beta);
      } else if (state_family == "werner") {
        rho = mubwit::werner_state(d, phi);
      } else {
        throw CLI::ValidationError("--family", "state family must be bell, magic or werner");
      }
      rho.validate();
      nlohmann::json out = mubwit::matrix_to_json(rho.matrix);
      out["dim"] = rho.dim;
      emit(g, out.dump(2) + "\n", snapshot, elapsed());
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
