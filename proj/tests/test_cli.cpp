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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MUBWIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kTmp = "/tmp/mubwit_cli_test";

}  // namespace

TEST_CASE("build writes a verified set file plus manifest") {
  REQUIRE(std::system(("mkdir -p " + kTmp).c_str()) == 0);
  const std::string out = kTmp + "/d5.json";
  const RunResult r = run("build --d 5 --family hw --out " + out);
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("dim") == 5);
  CHECK(j.at("bases").size() == 6);
  const nlohmann::json manifest = nlohmann::json::parse(slurp(out + ".manifest.json"));
  CHECK(manifest.at("version") == "0.1.0");
  CHECK(manifest.at("command_line").get<std::string>().find("build") != std::string::npos);
  CHECK(!manifest.at("output_digest").get<std::string>().empty());
}

TEST_CASE("build families: h4 and tao6") {
  const RunResult h = run("build --d 4 --family h4 --y 0 --z 0 --out " + kTmp + "/h00.json");
  CHECK(h.exit_code == 0);
  CHECK(nlohmann::json::parse(slurp(kTmp + "/h00.json")).at("bases").size() == 3);
  const RunResult t = run("build --d 6 --family tao6 --out " + kTmp + "/tao.json");
  CHECK(t.exit_code == 0);
  CHECK(nlohmann::json::parse(slurp(kTmp + "/tao.json")).at("bases").size() == 2);
}

TEST_CASE("unknown family is a usage error (exit 2)") {
  const RunResult r = run("build --d 5 --family nonsense --out " + kTmp + "/x.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bounds on the d=2 pair and d=3 complete set") {
  const RunResult pair = run("bounds --d 2 --family hw --subset 0,1 --restarts 40 --out " + kTmp +
                             "/b2.json");
  CHECK(pair.exit_code == 0);
  const nlohmann::json j2 = nlohmann::json::parse(slurp(kTmp + "/b2.json"));
  CHECK(std::abs(j2.at("L").get<double>() - 0.5) < 2e-3);
  CHECK(j2.at("U_fraction") == "3/2");

  const RunResult complete = run("bounds --d 3 --family hw --restarts 40 --out " + kTmp +
                                 "/b3.json");
  CHECK(complete.exit_code == 0);
  const nlohmann::json j3 = nlohmann::json::parse(slurp(kTmp + "/b3.json"));
  CHECK(std::abs(j3.at("L").get<double>() - 1.0) < 2e-3);
  CHECK(j3.at("U").get<double>() == 2.0);
}

TEST_CASE("bounds rereads the set it built (file round trip)") {
  const std::string set = kTmp + "/d5.json";
  run("build --d 5 --family hw --out " + set);
  const RunResult r =
      run("bounds --set " + set + " --subset 0,1,2 --restarts 40 --out " + kTmp + "/b5.json");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(slurp(kTmp + "/b5.json")).at("L").get<double>() - 0.2764) <
        2e-3);
}

TEST_CASE("reruns with the same seed produce byte-identical output") {
  const std::string a = kTmp + "/rep_a.json", b = kTmp + "/rep_b.json";
  CHECK(run("bounds --d 3 --family hw --subset 0,1 --restarts 30 --seed 11 --out " + a).exit_code == 0);
  CHECK(run("bounds --d 3 --family hw --subset 0,1 --restarts 30 --seed 11 --threads 1 --out " + b)
            .exit_code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("a corrupted set file fails verification with exit 1") {
  const std::string set = kTmp + "/bad.json";
  run("build --d 2 --family hw --out " + set);
  nlohmann::json j = nlohmann::json::parse(slurp(set));
  j["bases"][1]["entries"][0][0] = 0.9;  // break unitarity
  std::ofstream(set) << j.dump();
  const RunResult r = run("bounds --set " + set + " --restarts 10 --out " + kTmp + "/ignored.json");
  CHECK(r.exit_code == 1);
}

TEST_CASE("classify d=2 m=2 reports one class") {
  const std::string out = kTmp + "/cls.json";
  const RunResult r = run("classify --d 2 --m 2 --restarts 30 --out " + out);
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("classes").size() == 1);
  CHECK(j.at("classes")[0].at("multiplicity") == 3);
}

TEST_CASE("scan emits the documented CSV header and rows") {
  const std::string out = kTmp + "/scan.csv";
  const RunResult r = run(
      "scan --family werner --d 2 --phi-min 0 --phi-max 0.8 --steps 3 --restarts 30 "
      "--lu-restarts 2 --out " + out);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("status,param,beta_or_phi,ppt_min_eigenvalue,ppt,m_raw,m_max_lu,m_min_lu,lower,"
                 "upper,violation,detected") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("state export: bell state matrix") {
  const std::string out = kTmp + "/bell.json";
  const RunResult r = run("state --family bell --d 2 --k 0 --l 0 --out " + out);
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("rows") == 4);
  CHECK(j.at("entries")[0][0].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("reproduce uppers passes instantly") {
  const RunResult r = run("reproduce uppers --out " + kTmp + "/uppers.txt");
  CHECK(r.exit_code == 0);
  CHECK(slurp(kTmp + "/uppers.txt").find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("build").exit_code == 2);  // missing --d
}
