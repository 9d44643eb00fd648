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

// qpfu - penny-flip games with unawareness, from the command line.
//
// Exit codes: 0 success, 2 input error, 3 no solution found,
// 4 verification failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qpfu/gamecore.h"
#include "qpfu/gate_expr.h"
#include "qpfu/pennyflip.h"
#include "qpfu/qlinalg.h"
#include "qpfu/serial.h"
#include "qpfu/unaware.h"

namespace {

using qpfu::serial::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitVerification = 4;

constexpr std::uint64_t kDefaultSeed = 20260800;

std::uint64_t resolve_seed(std::uint64_t cli_seed, bool seed_given) {
  if (seed_given) return cli_seed;
  if (const char* env = std::getenv("QPFU_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultSeed;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

Json report_envelope(const std::string& command, std::uint64_t seed) {
  Json j;
  j["schema"] = "report/v1";
  j["version"] = "0.1.0";
  j["command"] = command;
  j["timestamp"] = timestamp_utc();
  j["seed"] = seed;
  return j;
}

void emit(const Json& report, const std::string& format,
          const std::string& text_summary) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text_summary;
  }
}

std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qpfu::serial::DocError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --------------------------------------------------------------------------
// solve

int run_solve(const std::string& path, double tol, int max_solutions,
              std::uint64_t seed, const std::string& format) {
  std::string text;
  qpfu::unaware::GameFamily family;
  try {
    text = read_file_or_throw(path);
    family = qpfu::serial::family_from_text(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  qpfu::unaware::SolveOptions opts;
  opts.tol = tol;
  opts.max_solutions = max_solutions;
  const qpfu::unaware::SolveResult result =
      qpfu::unaware::solve_ene(family, opts);

  Json report = report_envelope("solve", seed);
  report["tolerances"] = Json{{"tol", tol}};
  report["inputs"] =
      Json{{"file", path}, {"digest", qpfu::serial::digest(text)}};
  Json results;
  results["family"] = family.name;
  results["count"] = result.solutions.size();
  Json list = Json::array();
  std::ostringstream text_out;
  text_out << "family " << family.name << ": " << result.solutions.size()
           << " extended Nash equilibri"
           << (result.solutions.size() == 1 ? "um" : "a") << "\n";
  int index = 0;
  for (const auto& sol : result.solutions) {
    Json entry;
    entry["profile"] = qpfu::serial::extended_profile_to_json(family, sol);
    const auto payoff =
        qpfu::game::expected_payoff(family.at({}), sol.at({}));
    entry["modeler_payoff"] = payoff;
    list.push_back(std::move(entry));
    text_out << "  [" << index++ << "] modeler payoff (";
    for (size_t p = 0; p < payoff.size(); ++p) {
      if (p) text_out << ", ";
      text_out << payoff[p];
    }
    text_out << ")\n";
    for (const auto& [v, prof] : sol.profiles) {
      text_out << "      view '" << v.str() << "': "
               << qpfu::serial::profile_to_json(family.at(v), prof).dump()
               << "\n";
    }
    text_out << "      deeper views: "
             << qpfu::serial::profile_to_json(family.fallback, sol.fallback)
                    .dump()
             << "\n";
  }
  results["equilibria"] = std::move(list);
  results["diagnostics"] = result.diagnostics;
  report["results"] = std::move(results);
  emit(report, format, text_out.str());
  return result.solutions.empty() ? kExitNoSolution : kExitOk;
}

// --------------------------------------------------------------------------
// verify

struct CheckOutcome {
  std::string name;
  bool passed = false;
  long samples = 0;
  double max_error = 0.0;
  std::vector<std::string> notes;
};

CheckOutcome check_lemma(const std::string& which, int samples,
                         std::uint64_t seed, double tol) {
  qpfu::penny::VerifyReport rep;
  if (which == "lemma-v1v3") {
    rep = qpfu::penny::verify_v1v3(samples, seed, tol);
  } else if (which == "lemma-v2") {
    rep = qpfu::penny::verify_v2(samples, seed, tol);
  } else {
    rep = qpfu::penny::verify_w2(samples, seed, tol);
  }
  CheckOutcome out;
  out.name = rep.check;
  out.passed = rep.ok();
  out.samples = rep.samples;
  out.max_error = rep.max_error;
  out.notes = rep.failures;
  return out;
}

CheckOutcome check_eq56(int samples, std::uint64_t seed) {
  CheckOutcome out;
  out.name = "eq56-closed-form";
  out.passed = true;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
  const std::array<std::pair<double, double>, 6> mixes{{{0.0, 0.0},
                                                        {1.0, 0.0},
                                                        {0.0, 1.0},
                                                        {0.5, 0.5},
                                                        {0.25, 0.25},
                                                        {0.3, 0.1}}};
  const int rounds = std::max(1, samples);
  for (int g = 0; g <= 10; ++g) {
    const double gamma = -M_PI + g * (2.0 * M_PI / 10.0);
    for (const auto& [p2, p3] : mixes) {
      for (int k = 0; k < rounds; ++k) {
        const double alpha = angle(rng), beta = angle(rng), delta = angle(rng);
        const auto u = qpfu::qlinalg::Unitary2(
            std::exp(std::complex<double>(0.0, alpha)) *
            (qpfu::qlinalg::rotation_z(beta).mat() *
             qpfu::qlinalg::rotation_y(gamma).mat() *
             qpfu::qlinalg::rotation_z(delta).mat()));
        const double p1 = (1.0 - p2 - p3) / 2.0;
        const std::array<double, 4> mix{p1, p2, p3, 1.0 - p1 - p2 - p3};
        const double direct = qpfu::penny::cq_payoff(mix, u);
        const double formula = qpfu::penny::cq_payoff_formula(gamma, p2, p3);
        const double err = std::abs(direct - formula);
        out.max_error = std::max(out.max_error, err);
        out.samples++;
        if (err > 1e-10) {
          out.passed = false;
          out.notes.push_back("gamma=" + std::to_string(gamma) +
                              " p2=" + std::to_string(p2) +
                              " p3=" + std::to_string(p3) +
                              ": |direct-formula|=" + std::to_string(err));
        }
      }
    }
  }
  // The W2 family equalizes every pure classical pair.
  const auto w2rep = qpfu::penny::verify_w2(rounds * 16, seed + 1, 1e-9);
  out.max_error = std::max(out.max_error, w2rep.max_error);
  if (!w2rep.ok()) {
    out.passed = false;
    for (const auto& n : w2rep.failures) out.notes.push_back(n);
  }
  return out;
}

CheckOutcome check_eq65(long samples, std::uint64_t seed) {
  CheckOutcome out;
  out.name = "eq65-sine-product";
  out.passed = true;
  // Grid agreement with the closed form, V1 = V3 = H.
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double beta = i * (2.0 * M_PI / 19.0);
      const double delta = j * (2.0 * M_PI / 19.0);
      const double direct = qpfu::penny::qq_vs_w2_direct(0.37, beta, delta);
      const double closed = qpfu::penny::qq_vs_w2_payoff(beta, delta);
      const double err = std::abs(direct - closed);
      out.max_error = std::max(out.max_error, err);
      if (err > 1e-10) {
        out.passed = false;
        out.notes.push_back("grid beta=" + std::to_string(beta) +
                            " delta=" + std::to_string(delta) +
                            ": err=" + std::to_string(err));
      }
    }
  }
  // Spot checks across the whole optimal family (V1, V3) = (V1, Rz a V1+):
  // any dependence beyond (beta, delta) would show up here.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
  double family_dev = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double a = (rng() & 1) ? -M_PI : 0.0;
    const qpfu::penny::ParamV1 pv1{a, angle(rng)};
    const auto m1 = qpfu::penny::v1(pv1);
    const auto m3 = qpfu::penny::v3({angle(rng), pv1});
    const double beta = angle(rng), delta = angle(rng);
    const auto w = qpfu::penny::w2({angle(rng), beta, delta});
    const double direct = qpfu::penny::qq_payoff(m1, w, m3).first;
    family_dev = std::max(
        family_dev,
        std::abs(direct - qpfu::penny::qq_vs_w2_payoff(beta, delta)));
  }
  out.notes.push_back("max deviation from -sin(beta)sin(delta) over the "
                      "general (V1,V3) family: " +
                      std::to_string(family_dev));
  if (family_dev > 1e-9) {
    out.notes.push_back("warning: payoff depends on more than (beta, delta)");
  }
  // Monte Carlo mean over uniform (beta, delta).
  double sum = 0.0, sumsq = 0.0;
  std::uniform_real_distribution<double> u2pi(0.0, 2.0 * M_PI);
  for (long k = 0; k < samples; ++k) {
    const double v =
        qpfu::penny::qq_vs_w2_payoff(u2pi(rng), u2pi(rng));
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var =
      sumsq / static_cast<double>(samples) - mean * mean;
  const double sigma3 =
      3.0 * std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  out.samples = samples + 400;
  out.notes.push_back("monte carlo mean " + std::to_string(mean) + " (3sigma " +
                      std::to_string(sigma3) + ")");
  if (std::abs(mean) > std::max(sigma3, 1e-6)) {
    out.passed = false;
    out.notes.push_back("mean of the uniform (beta,delta) average is not 0");
  }
  return out;
}

CheckOutcome check_prop2(int samples, std::uint64_t seed, double tol) {
  CheckOutcome out;
  out.name = "prop2-euler-zxz";
  out.passed = true;
  out.samples = samples;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const auto u = qpfu::qlinalg::haar_unitary(rng);
    const auto e = qpfu::qlinalg::euler_zxz(u);
    const double err =
        qpfu::qlinalg::fro_dist(qpfu::qlinalg::euler_recompose(e), u.mat());
    out.max_error = std::max(out.max_error, err);
    if (err > tol) {
      out.passed = false;
      out.notes.push_back("sample " + std::to_string(k) +
                          ": recomposition error " + std::to_string(err));
    }
  }
  return out;
}

CheckOutcome check_axioms() {
  CheckOutcome out;
  out.name = "family-axioms";
  out.passed = true;
  for (const std::string& name : qpfu::penny::preset_family_names()) {
    const auto family = qpfu::penny::preset_family(name);
    const auto rep = qpfu::unaware::validate_family(family);
    out.samples++;
    if (!rep.valid()) {
      out.passed = false;
      for (const auto& issue : rep.issues) {
        out.notes.push_back(name + ": property " +
                            std::to_string(issue.property) + " at view '" +
                            issue.view + "': " + issue.message);
      }
    } else {
      out.notes.push_back(name + ": valid");
    }
  }
  return out;
}

int run_verify(const std::string& which, int samples, std::uint64_t seed,
               double tol, const std::string& format) {
  CheckOutcome out;
  if (which == "lemma-v1v3" || which == "lemma-v2" || which == "lemma-w2") {
    out = check_lemma(which, samples, seed, tol);
  } else if (which == "eq56") {
    out = check_eq56(std::max(1, samples / 66), seed);
  } else if (which == "eq65") {
    out = check_eq65(samples, seed);
  } else if (which == "prop2") {
    out = check_prop2(samples, seed, tol);
  } else if (which == "axioms") {
    out = check_axioms();
  } else {
    std::cerr << "error: unknown verify subcommand '" << which << "'\n";
    return kExitInput;
  }

  Json report = report_envelope("verify", seed);
  report["tolerances"] = Json{{"tol", tol}};
  report["inputs"] = Json{{"check", which}, {"samples", samples}};
  Json results;
  results["check"] = out.name;
  results["passed"] = out.passed;
  results["samples"] = out.samples;
  results["max_error"] = out.max_error;
  results["notes"] = out.notes;
  report["results"] = std::move(results);

  std::ostringstream text;
  text << (out.passed ? "PASS" : "FAIL") << " " << out.name << " ("
       << out.samples << " samples, max error " << out.max_error << ")\n";
  for (const auto& n : out.notes) text << "  " << n << "\n";
  emit(report, format, text.str());
  return out.passed ? kExitOk : kExitVerification;
}

// --------------------------------------------------------------------------
// payoff

int run_payoff(const std::string& e1, const std::string& e2,
               const std::string& e3, std::uint64_t seed,
               const std::string& format) {
  try {
    const auto u1 = qpfu::gatexpr::parse_gate(e1);
    const auto u2 = qpfu::gatexpr::parse_gate(e2);
    const auto u3 = qpfu::gatexpr::parse_gate(e3);
    const auto [p1, p2] = qpfu::penny::qq_payoff(u1, u2, u3);
    auto rho = qpfu::qlinalg::ket0_density();
    rho = evolve(rho, u1);
    rho = evolve(rho, u2);
    rho = evolve(rho, u3);
    const auto b = qpfu::qlinalg::bloch(rho);

    Json report = report_envelope("payoff", seed);
    report["inputs"] = Json{{"u1", e1}, {"u2", e2}, {"u3", e3}};
    Json results;
    results["payoffs"] = Json::array({p1, p2});
    results["bloch"] = Json::array({b[0], b[1], b[2]});
    report["results"] = std::move(results);
    std::ostringstream text;
    text << "payoffs (" << p1 << ", " << p2 << ")\n"
         << "final state Bloch vector (" << b[0] << ", " << b[1] << ", "
         << b[2] << ")\n";
    emit(report, format, text.str());
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

// --------------------------------------------------------------------------
// reduce

int run_reduce(const std::string& path, std::uint64_t seed,
               const std::string& format) {
  std::string text;
  qpfu::game::StrategicGame strategic;
  try {
    text = read_file_or_throw(path);
    const Json doc = qpfu::serial::parse_text(text);
    if (doc.contains("type") && doc["type"] == "extensive") {
      strategic = qpfu::game::strategic_from_extensive(
          qpfu::serial::extensive_from_json(doc));
    } else {
      strategic = qpfu::serial::game_from_json(doc);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto classes = qpfu::game::equivalence_classes(strategic);
  const auto reduced = qpfu::game::reduce_strategic(strategic);

  Json report = report_envelope("reduce", seed);
  report["inputs"] =
      Json{{"file", path}, {"digest", qpfu::serial::digest(text)}};
  Json results;
  results["strategic"] = qpfu::serial::game_to_json(strategic);
  results["reduced"] = qpfu::serial::game_to_json(reduced);
  Json classes_json = Json::array();
  for (int p = 0; p < strategic.num_players; ++p) {
    Json per_player = Json::array();
    for (const auto& cls : classes[p]) {
      Json members = Json::array();
      for (int s : cls) members.push_back(strategic.labels[p][s]);
      per_player.push_back(std::move(members));
    }
    classes_json.push_back(std::move(per_player));
  }
  results["classes"] = std::move(classes_json);
  report["results"] = std::move(results);

  std::ostringstream out;
  out << "strategic form:";
  for (int p = 0; p < strategic.num_players; ++p) {
    out << " " << strategic.num_strategies(p);
    if (p + 1 < strategic.num_players) out << " x";
  }
  out << "\nreduced form:";
  for (int p = 0; p < reduced.num_players; ++p) {
    out << " " << reduced.num_strategies(p);
    if (p + 1 < reduced.num_players) out << " x";
  }
  out << "\n";
  for (int p = 0; p < reduced.num_players; ++p) {
    out << "player " << (p + 1) << " classes:";
    for (const auto& label : reduced.labels[p]) out << " " << label;
    out << "\n";
  }
  emit(report, format, out.str());
  return kExitOk;
}

// --------------------------------------------------------------------------
// validate

int run_validate(const std::string& path, std::uint64_t seed,
                 const std::string& format) {
  std::string text;
  qpfu::unaware::GameFamily family;
  try {
    text = read_file_or_throw(path);
    family = qpfu::serial::family_from_json_unchecked(
        qpfu::serial::parse_text(text));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const auto rep = qpfu::unaware::validate_family(family);

  Json report = report_envelope("validate", seed);
  report["inputs"] =
      Json{{"file", path}, {"digest", qpfu::serial::digest(text)}};
  report["results"] = qpfu::serial::validation_to_json(rep);

  std::ostringstream out;
  out << "family " << family.name << ": "
      << (rep.valid() ? "valid" : "INVALID") << "\n";
  for (const auto& issue : rep.issues) {
    out << "  property " << issue.property << " at view '" << issue.view
        << "': " << issue.message << "\n";
  }
  emit(report, format, out.str());
  return rep.valid() ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Penny-flip games with unawareness"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = 1e-9;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", seed, "Random seed (QPFU_SEED env as fallback)")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_option("--tol", tol, "Numerical tolerance");
  };

  // solve
  auto* solve = app.add_subcommand("solve", "Enumerate extended Nash equilibria");
  std::string solve_file;
  int max_solutions = 64;
  solve->add_option("file", solve_file, "Family document")->required();
  solve->add_option("--max-solutions", max_solutions, "Solution cap");
  add_common(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a numerical check suite");
  std::string check;
  int samples = 1000;
  verify
      ->add_option("check", check,
                   "One of: lemma-v1v3, lemma-v2, lemma-w2, eq56, eq65, "
                   "prop2, axioms")
      ->required();
  verify->add_option("--samples", samples, "Sample count");
  add_common(verify);

  // payoff
  auto* payoff = app.add_subcommand("payoff", "Evaluate one penny-flip play");
  std::string u1 = "I", u2 = "I", u3 = "I";
  payoff->add_option("--u1", u1, "Player 1's first move (gate expression)");
  payoff->add_option("--u2", u2, "Player 2's move");
  payoff->add_option("--u3", u3, "Player 1's second move");
  add_common(payoff);

  // reduce
  auto* reduce = app.add_subcommand(
      "reduce", "Strategic and reduced strategic forms of a game document");
  std::string reduce_file;
  reduce->add_option("file", reduce_file, "Game or extensive document")
      ->required();
  add_common(reduce);

  // validate
  auto* validate = app.add_subcommand(
      "validate", "Check a family document against the unawareness axioms");
  std::string validate_file;
  validate->add_option("file", validate_file, "Family document")->required();
  add_common(validate);

  CLI11_PARSE(app, argc, argv);

  const std::uint64_t effective_seed = resolve_seed(seed, seed_given);
  if (solve->parsed()) {
    return run_solve(solve_file, tol, max_solutions, effective_seed, format);
  }
  if (verify->parsed()) {
    const int eff_samples = samples;
    return run_verify(check, eff_samples, effective_seed, tol, format);
  }
  if (payoff->parsed()) {
    return run_payoff(u1, u2, u3, effective_seed, format);
  }
  if (reduce->parsed()) {
    return run_reduce(reduce_file, effective_seed, format);
  }
  if (validate->parsed()) {
    return run_validate(validate_file, effective_seed, format);
  }
  return kExitInput;
}
