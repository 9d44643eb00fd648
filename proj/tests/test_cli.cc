// Copyright 2026 The qpfu Authors
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
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = QPFU_CLI_PATH;
const std::string kFixtures = QPFU_FIXTURE_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

nlohmann::json parse_report(const std::string& text) {
  return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("payoff command") {
  const RunResult r = run("payoff --u1 H --u2 I --u3 H");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("payoffs (1, -1)") != std::string::npos);

  const RunResult rz = run("payoff --u1 H --u2 'Rz(pi)' --u3 H");
  CHECK(rz.exit_code == 0);
  CHECK(rz.output.find("payoffs (-1, 1)") != std::string::npos);

  const RunResult id = run("payoff");
  CHECK(id.exit_code == 0);
  CHECK(id.output.find("payoffs (1, -1)") != std::string::npos);

  const RunResult bad = run("payoff --u1 'Rz(' --u2 I --u3 I");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("solve command on example 1") {
  const RunResult r =
      run("solve " + kFixtures + "/example1.family --format json");
  REQUIRE(r.exit_code == 0);
  const auto report = parse_report(r.output);
  CHECK(report["schema"] == "report/v1");
  CHECK(report["results"]["count"].get<int>() >= 1);
  bool found = false;
  for (const auto& entry : report["results"]["equilibria"]) {
    const auto& views = entry["profile"]["views"];
    if (!views.contains("")) continue;
    const auto& modeler = views[""];
    const bool a3 = modeler["player1"].contains("a3") &&
                    modeler["player1"]["a3"].get<double>() > 1.0 - 1e-9;
    const bool b1 = modeler["player2"].contains("b1") &&
                    modeler["player2"]["b1"].get<double>() > 1.0 - 1e-9;
    const auto payoff = entry["modeler_payoff"];
    found |= a3 && b1 && std::abs(payoff[0].get<double>() - 4.0) < 1e-9 &&
             std::abs(payoff[1].get<double>()) < 1e-9;
  }
  CHECK(found);
}

TEST_CASE("solve command on example 3") {
  const RunResult r =
      run("solve " + kFixtures + "/example3.family --format json");
  REQUIRE(r.exit_code == 0);
  const auto report = parse_report(r.output);
  bool found = false;
  for (const auto& entry : report["results"]["equilibria"]) {
    const auto& modeler = entry["profile"]["views"][""];
    const bool hh = modeler["player1"].contains("HH");
    const bool z = modeler["player2"].contains("Z");
    found |= hh && z &&
             std::abs(entry["modeler_payoff"][0].get<double>() + 1.0) < 1e-9;
  }
  CHECK(found);
}

TEST_CASE("solve exit codes") {
  const RunResult parse_fail = run("solve /nonexistent.family");
  CHECK(parse_fail.exit_code == 2);

  // A zero cap leaves the solution set empty: the no-solution exit path.
  const RunResult none = run("solve " + kFixtures +
                             "/example1.family --max-solutions 0");
  CHECK(none.exit_code == 3);
}

TEST_CASE("validate command flags a corrupted family") {
  const std::string path = "/tmp/qpfu_corrupted.family";
  {
    std::ofstream out(path);
    out << R"({
      "players": 2, "depth": 1,
      "views": [{"view": "", "game": {"preset": "gamma2"}},
                {"view": "1", "game": {"preset": "gamma1"}}],
      "otherwise": {"preset": "gamma2"}
    })";
  }
  const RunResult r = run("validate " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("property 2") != std::string::npos);
  std::remove(path.c_str());

  const RunResult ok = run("validate " + kFixtures + "/example3.family");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("valid") != std::string::npos);
}

TEST_CASE("reduce command") {
  const RunResult r =
      run("reduce " + kFixtures + "/fig1.extensive --format json");
  REQUIRE(r.exit_code == 0);
  const auto report = parse_report(r.output);
  CHECK(report["results"]["strategic"]["strategies"][0].size() == 8);
  CHECK(report["results"]["reduced"]["strategies"][0].size() == 4);

  const RunResult bad = run("reduce /nonexistent.game");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify command") {
  CHECK(run("verify lemma-v1v3 --samples 100").exit_code == 0);
  CHECK(run("verify lemma-v2 --samples 100").exit_code == 0);
  CHECK(run("verify lemma-w2 --samples 50").exit_code == 0);
  CHECK(run("verify eq56 --samples 66").exit_code == 0);
  CHECK(run("verify prop2 --samples 200").exit_code == 0);
  CHECK(run("verify axioms").exit_code == 0);
  CHECK(run("verify bogus").exit_code == 2);
}

TEST_CASE("verify reports record the seed") {
  const RunResult r = run("verify prop2 --samples 50 --format json", "");
  REQUIRE(r.exit_code == 0);
  const auto report = parse_report(r.output);
  CHECK(report.contains("seed"));

  const RunResult env =
      run("verify prop2 --samples 50 --format json", "QPFU_SEED=424242");
  const auto report2 = parse_report(env.output);
  CHECK(report2["seed"].get<long long>() == 424242);

  const RunResult flag =
      run("verify prop2 --samples 50 --seed 7 --format json",
          "QPFU_SEED=424242");
  const auto report3 = parse_report(flag.output);
  CHECK(report3["seed"].get<long long>() == 7);
}

TEST_CASE("reports are reproducible modulo the timestamp") {
  const std::string cmd =
      "solve " + kFixtures + "/example1.family --format json --seed 11";
  auto a = parse_report(run(cmd).output);
  auto b = parse_report(run(cmd).output);
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a == b);

  const std::string vcmd = "verify lemma-v1v3 --samples 64 --format json --seed 5";
  auto c = parse_report(run(vcmd).output);
  auto d = parse_report(run(vcmd).output);
  c.erase("timestamp");
  d.erase("timestamp");
  CHECK(c == d);
}
