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

#include "qpfu/pennyflip.h"

#include <cmath>
#include <random>
#include <sstream>

namespace qpfu::penny {

using qlinalg::Complex;
using qlinalg::Density2;
using qlinalg::InvariantError;
using qlinalg::Mat2;
using qlinalg::equal_up_to_phase;

namespace {

constexpr Complex kI{0.0, 1.0};

Unitary2 gate_i() { return qlinalg::named_gate(qlinalg::Gate::I); }
Unitary2 gate_x() { return qlinalg::named_gate(qlinalg::Gate::X); }
Unitary2 gate_z() { return qlinalg::named_gate(qlinalg::Gate::Z); }
Unitary2 gate_h() { return qlinalg::named_gate(qlinalg::Gate::H); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

game::StrategicGame classical_matrix() {
  const std::vector<std::pair<std::string, Unitary2>> gates{
      {"I", gate_i()}, {"X", gate_x()}};
  game::StrategicGame g;
  g.name = "penny-cc";
  g.num_players = 2;
  g.labels.resize(2);
  for (const auto& [n1, u1] : gates) {
    for (const auto& [n3, u3] : gates) g.labels[0].push_back(n1 + n3);
  }
  for (const auto& [n2, u2] : gates) g.labels[1].push_back(n2);
  g.payoffs.assign(2, std::vector<double>(8, 0.0));
  int row = 0;
  for (const auto& [n1, u1] : gates) {
    for (const auto& [n3, u3] : gates) {
      int col = 0;
      for (const auto& [n2, u2] : gates) {
        const auto [a, b] = qq_payoff(u1, u2, u3);
        g.payoffs[0][row * 2 + col] = a;
        g.payoffs[1][row * 2 + col] = b;
        ++col;
      }
      ++row;
    }
  }
  return g;
}

std::pair<double, double> qq_payoff(const Unitary2& u1, const Unitary2& u2,
                                    const Unitary2& u3) {
  Density2 rho = qlinalg::ket0_density();
  rho = evolve(rho, u1);
  rho = evolve(rho, u2);
  rho = evolve(rho, u3);
  const double v = expectation(rho, qlinalg::payoff_observable());
  return {v, -v};
}

double qc_payoff(const Unitary2& u1, const Unitary2& u3, double p) {
  if (p < 0.0 || p > 1.0) throw InvariantError("qc_payoff: p outside [0,1]");
  return p * qq_payoff(u1, gate_i(), u3).first +
         (1.0 - p) * qq_payoff(u1, gate_x(), u3).first;
}

double cq_payoff(const std::array<double, 4>& mix, const Unitary2& u2) {
  double sum = 0.0;
  for (double p : mix) {
    if (p < -1e-12) throw InvariantError("cq_payoff: negative weight");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvariantError("cq_payoff: weights do not sum to 1");
  }
  const std::array<std::pair<Unitary2, Unitary2>, 4> pairs{{
      {gate_i(), gate_i()},
      {gate_i(), gate_x()},
      {gate_x(), gate_i()},
      {gate_x(), gate_x()},
  }};
  double v = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (mix[k] == 0.0) continue;
    v += mix[k] * qq_payoff(pairs[k].first, u2, pairs[k].second).first;
  }
  return v;
}

double cq_payoff_formula(double gamma, double p2, double p3) {
  if (p2 < 0.0 || p3 < 0.0 || p2 + p3 > 1.0 + 1e-12) {
    throw InvariantError("cq_payoff_formula: invalid probabilities");
  }
  const double c = std::cos(gamma / 2.0);
  return (2.0 * c * c - 1.0) * (1.0 - 2.0 * p2 - 2.0 * p3);
}

Unitary2 v1(const ParamV1& p) {
  if (p.a != -M_PI && p.a != 0.0) {
    throw InvariantError("v1: parameter a must be -pi or 0");
  }
  const double s = 1.0 / std::sqrt(2.0);
  Mat2 core;
  core(0, 0) = s * std::exp(-kI * (p.gamma / 2.0));
  core(0, 1) = -kI * s * std::exp(kI * (p.gamma / 2.0));
  core(1, 0) = s * std::exp(-kI * (p.gamma / 2.0));
  core(1, 1) = kI * s * std::exp(kI * (p.gamma / 2.0));
  return Unitary2(qlinalg::rotation_z(p.a).mat() * core);
}

Unitary2 v3(const ParamV3& p) {
  return Unitary2(qlinalg::rotation_z(p.alpha).mat() *
                  v1(p.source).mat().adjoint());
}

Unitary2 v2(const ParamV2& p) {
  const double c = std::cos(p.gamma / 2.0), s = std::sin(p.gamma / 2.0);
  Mat2 m;
  m(0, 0) = kI * c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = -kI * c;
  return Unitary2(std::exp(kI * p.alpha) * m);
}

Unitary2 w2(const ParamW2& p) {
  const double s = 1.0 / std::sqrt(2.0);
  Mat2 m;
  m(0, 0) = s * std::exp(kI * (-p.beta / 2.0 - p.delta / 2.0));
  m(0, 1) = -s * std::exp(kI * (-p.beta / 2.0 + p.delta / 2.0));
  m(1, 0) = s * std::exp(kI * (p.beta / 2.0 - p.delta / 2.0));
  m(1, 1) = s * std::exp(kI * (p.beta / 2.0 + p.delta / 2.0));
  return Unitary2(std::exp(kI * p.alpha) * m);
}

// ---------------------------------------------------------------------------
// Verification suites.

VerifyReport verify_v1v3(int samples, std::uint64_t seed, double tol) {
  VerifyReport rep;
  rep.check = "v1v3-guarantee";
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
  const Density2 ket0 = qlinalg::ket0_density();
  for (int k = 0; k < samples; ++k) {
    const double a = (rng() & 1) ? -M_PI : 0.0;
    const double gamma = angle(rng);
    const double alpha = angle(rng);
    const Unitary2 m1 = v1({a, gamma});
    const Unitary2 m3 = v3({alpha, {a, gamma}});
    // Both fixed-point identities of the guarantee system.
    const Mat2 lhs1 =
        (m3.mat() * m1.mat()) * ket0.mat() * (m3.mat() * m1.mat()).adjoint();
    const Mat2 mid = m3.mat() * qlinalg::pauli_x() * m1.mat();
    const Mat2 lhs2 = mid * ket0.mat() * mid.adjoint();
    double err = qlinalg::fro_dist(lhs1, ket0.mat());
    err = std::max(err, qlinalg::fro_dist(lhs2, ket0.mat()));
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      err = std::max(err, std::abs(qc_payoff(m1, m3, p) - 1.0));
    }
    rep.max_error = std::max(rep.max_error, err);
    if (err > tol) {
      rep.failures.push_back("sample " + std::to_string(k) + ": a=" + fmt(a) +
                             " gamma=" + fmt(gamma) + " alpha=" + fmt(alpha) +
                             " err=" + fmt(err));
    }
  }
  return rep;
}

VerifyReport verify_v2(int samples, std::uint64_t seed, double tol) {
  VerifyReport rep;
  rep.check = "v2-counter";
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
  for (int k = 0; k < samples; ++k) {
    const double a = (rng() & 1) ? -M_PI : 0.0;
    const double gamma1 = angle(rng);
    const double alpha1 = angle(rng);
    const Unitary2 m1 = v1({a, gamma1});
    const Unitary2 m3 = v3({alpha1, {a, gamma1}});
    const Unitary2 m2 = v2({angle(rng), angle(rng)});
    const double err = std::abs(qq_payoff(m1, m2, m3).first + 1.0);
    rep.max_error = std::max(rep.max_error, err);
    if (err > tol) {
      rep.failures.push_back("sample " + std::to_string(k) +
                             ": payoff differs from -1 by " + fmt(err));
    }
  }
  return rep;
}

VerifyReport verify_w2(int samples, std::uint64_t seed, double tol) {
  VerifyReport rep;
  rep.check = "w2-equalizer";
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::array<std::array<double, 4>, 4> pures{{
      {1.0, 0.0, 0.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 0.0, 0.0, 1.0},
  }};
  for (int k = 0; k < samples; ++k) {
    const double alpha = angle(rng), beta = angle(rng), delta = angle(rng);
    const Unitary2 u = w2({alpha, beta, delta});
    double err = 0.0;
    for (const auto& pure : pures) {
      err = std::max(err, std::abs(cq_payoff(pure, u)));
    }
    rep.max_error = std::max(rep.max_error, err);
    if (err > tol) {
      rep.failures.push_back("sample " + std::to_string(k) +
                             ": W2 fails to equalize, err=" + fmt(err));
    }
    // Closed form vs direct computation for a general sandwich.
    const double gamma = angle(rng);
    double p2 = unit(rng), p3 = unit(rng);
    if (p2 + p3 > 1.0) {
      p2 = 1.0 - p2;
      p3 = 1.0 - p3;
    }
    const double p1 = (1.0 - p2 - p3) * unit(rng);
    const std::array<double, 4> mix{p1, p2, p3, 1.0 - p1 - p2 - p3};
    const Unitary2 sandwich =
        Unitary2(std::exp(kI * alpha) *
                 (qlinalg::rotation_z(beta).mat() *
                  qlinalg::rotation_y(gamma).mat() *
                  qlinalg::rotation_z(delta).mat()));
    const double direct = cq_payoff(mix, sandwich);
    const double formula = cq_payoff_formula(gamma, p2, p3);
    const double ferr = std::abs(direct - formula);
    rep.max_error = std::max(rep.max_error, ferr);
    if (ferr > 1e-10) {
      rep.failures.push_back("sample " + std::to_string(k) +
                             ": closed form deviates by " + fmt(ferr));
    }
  }
  return rep;
}

double qq_vs_w2_payoff(double beta, double delta) {
  return -std::sin(beta) * std::sin(delta);
}

double qq_vs_w2_direct(double alpha, double beta, double delta) {
  return qq_payoff(gate_h(), w2({alpha, beta, delta}), gate_h()).first;
}

// ---------------------------------------------------------------------------
// Matrices and discretization.

game::StrategicGame example3_matrix() {
  const std::vector<NamedUnitary> g1{
      {"I", gate_i()}, {"X", gate_x()}, {"H", gate_h()}};
  const std::vector<NamedUnitary> g2{
      {"I", gate_i()}, {"X", gate_x()}, {"Z", gate_z()}};
  std::vector<std::pair<NamedUnitary, NamedUnitary>> pairs;
  for (const auto& a : g1) {
    for (const auto& b : g1) pairs.push_back({a, b});
  }
  game::StrategicGame g = discretize(VariantTag::QQ, pairs, g2);
  g.name = "penny-3gate";
  return g;
}

MisleadingReport misleading_matrix() {
  MisleadingReport rep;
  // Rows in the published order: the four classical pairs, the four
  // one-Hadamard pairs, then HH.
  const std::vector<std::pair<std::string, std::pair<Unitary2, Unitary2>>>
      rows{
          {"II", {gate_i(), gate_i()}}, {"IX", {gate_i(), gate_x()}},
          {"XI", {gate_x(), gate_i()}}, {"XX", {gate_x(), gate_x()}},
          {"IH", {gate_i(), gate_h()}}, {"XH", {gate_x(), gate_h()}},
          {"HI", {gate_h(), gate_i()}}, {"HX", {gate_h(), gate_x()}},
          {"HH", {gate_h(), gate_h()}},
      };
  const std::vector<std::pair<std::string, Unitary2>> cols{
      {"I", gate_i()}, {"X", gate_x()}};
  // The table as published.
  const double printed[9][2] = {
      {1, -1}, {-1, 1}, {-1, 1}, {1, 1}, {0, 0},
      {0, 0},  {0, 0},  {0, 0},  {1, 1},
  };

  std::vector<std::vector<std::pair<double, double>>> computed(
      9, std::vector<std::pair<double, double>>(2));
  std::vector<std::vector<std::pair<double, double>>> published(
      9, std::vector<std::pair<double, double>>(2));
  std::vector<std::string> row_labels, col_labels;
  for (const auto& [label, gates] : rows) row_labels.push_back(label);
  for (const auto& [label, u] : cols) col_labels.push_back(label);

  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 2; ++c) {
      const auto got =
          qq_payoff(rows[r].second.first, cols[c].second, rows[r].second.second);
      computed[r][c] = got;
      published[r][c] = {printed[r][c], -printed[r][c]};
      ++rep.cells_compared;
      if (std::abs(got.first - printed[r][c]) > 1e-9) {
        rep.mismatches.push_back(
            {row_labels[r], col_labels[c], got, published[r][c]});
      }
    }
  }
  rep.computed =
      game::make_bimatrix("penny-misleading/computed", row_labels, col_labels,
                          computed);
  rep.printed = game::make_bimatrix("penny-misleading/printed", row_labels,
                                    col_labels, published);
  return rep;
}

namespace {

bool is_classical_gate(const Unitary2& u) {
  return qlinalg::fro_dist(u.mat(), Mat2::identity()) < 1e-9 ||
         qlinalg::fro_dist(u.mat(), qlinalg::pauli_x()) < 1e-9;
}

}  // namespace

game::StrategicGame discretize(
    VariantTag tag,
    const std::vector<std::pair<NamedUnitary, NamedUnitary>>& gate_set1,
    const std::vector<NamedUnitary>& gate_set2) {
  if (gate_set1.empty() || gate_set2.empty()) {
    throw InvariantError("discretize: empty gate set");
  }
  if (tag == VariantTag::CC || tag == VariantTag::CQ) {
    for (const auto& [a, b] : gate_set1) {
      if (!is_classical_gate(a.u) || !is_classical_gate(b.u)) {
        throw InvariantError("discretize: player 1 must be classical in " +
                             std::string(tag == VariantTag::CC ? "CC" : "CQ"));
      }
    }
  }
  if (tag == VariantTag::CC || tag == VariantTag::QC) {
    for (const auto& g : gate_set2) {
      if (!is_classical_gate(g.u)) {
        throw InvariantError("discretize: player 2 must be classical in " +
                             std::string(tag == VariantTag::CC ? "CC" : "QC"));
      }
    }
  }
  game::StrategicGame g;
  g.name = "penny-discrete";
  g.num_players = 2;
  g.labels.resize(2);
  for (const auto& [a, b] : gate_set1) g.labels[0].push_back(a.name + b.name);
  for (const auto& c : gate_set2) g.labels[1].push_back(c.name);
  const int m = static_cast<int>(gate_set1.size());
  const int n = static_cast<int>(gate_set2.size());
  g.payoffs.assign(2, std::vector<double>(m * n, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [a, b] =
          qq_payoff(gate_set1[i].first.u, gate_set2[j].u, gate_set1[i].second.u);
      g.payoffs[0][i * n + j] = a;
      g.payoffs[1][i * n + j] = b;
    }
  }
  g.validate();
  return g;
}

std::vector<NamedUnitary> default_gate_grid() {
  return {
      {"I", gate_i()},
      {"X", gate_x()},
      {"Z", gate_z()},
      {"H", gate_h()},
      {"V1(0,-pi/2)", v1({0.0, -M_PI / 2.0})},
      {"V2(0,-pi/2)", v2({0.0, -M_PI / 2.0})},
      {"W2(0,pi/2,pi/2)", w2({0.0, M_PI / 2.0, M_PI / 2.0})},
  };
}

// ---------------------------------------------------------------------------
// Stock games and preset families.

namespace {

game::StrategicGame gamma1() {
  return game::make_bimatrix(
      "gamma1", {"a1", "a2", "a3"}, {"b1", "b2"},
      {{{2, 2}, {2, 2}}, {{3, 3}, {1, 2}}, {{4, 0}, {1, 2}}});
}

game::StrategicGame gamma2() {
  return game::make_bimatrix("gamma2", {"a1", "a2"}, {"b1", "b2"},
                             {{{2, 2}, {2, 2}}, {{3, 3}, {1, 2}}});
}

game::StrategicGame qq_grid_game() {
  const auto grid = default_gate_grid();
  std::vector<std::pair<NamedUnitary, NamedUnitary>> pairs;
  for (const auto& a : grid) {
    for (const auto& b : grid) pairs.push_back({a, b});
  }
  game::StrategicGame g = discretize(VariantTag::QQ, pairs, grid);
  g.name = "penny-qq-grid";
  return g;
}

game::StrategicGame qc_grid_game() {
  const auto grid = default_gate_grid();
  std::vector<std::pair<NamedUnitary, NamedUnitary>> pairs;
  for (const auto& a : grid) {
    for (const auto& b : grid) pairs.push_back({a, b});
  }
  game::StrategicGame g = discretize(
      VariantTag::QC, pairs, {{"I", gate_i()}, {"X", gate_x()}});
  g.name = "penny-qc-grid";
  return g;
}

}  // namespace

game::StrategicGame named_game(const std::string& name) {
  if (name == "gamma1") return gamma1();
  if (name == "gamma2") return gamma2();
  if (name == "classical") return classical_matrix();
  if (name == "example3") return example3_matrix();
  if (name == "pennyflip_qq") return qq_grid_game();
  if (name == "pennyflip_qc") return qc_grid_game();
  throw game::GameError("unknown named game '" + name + "'");
}

std::vector<std::string> named_game_names() {
  return {"gamma1",   "gamma2",       "classical",
          "example3", "pennyflip_qq", "pennyflip_qc"};
}

unaware::GameFamily preset_family(Preset which) {
  switch (which) {
    case Preset::kExample1:
      return unaware::make_family(
          "example1", 2, 2,
          {{"", gamma1()}, {"1", gamma1()}, {"2", gamma1()}, {"12", gamma1()}},
          gamma2());
    case Preset::kExample2G:
      return unaware::make_family(
          "example2", 2, 1, {{"", qq_grid_game()}, {"1", qc_grid_game()}},
          classical_matrix());
    case Preset::kExample2GPrime:
      return unaware::make_family(
          "example2prime", 2, 1, {{"", qq_grid_game()}, {"1", qq_grid_game()}},
          classical_matrix());
    case Preset::kExample3:
      return unaware::make_family("example3", 2, 2,
                                  {{"", example3_matrix()},
                                   {"1", example3_matrix()},
                                   {"2", example3_matrix()},
                                   {"21", example3_matrix()}},
                                  classical_matrix());
    case Preset::kProp3:
      return unaware::make_family("prop3", 2, 2,
                                  {{"", qq_grid_game()},
                                   {"1", qq_grid_game()},
                                   {"2", qq_grid_game()},
                                   {"21", qq_grid_game()}},
                                  classical_matrix());
    case Preset::kProp4:
      return unaware::make_family(
          "prop4", 2, 1,
          {{"", qq_grid_game()}, {"1", qq_grid_game()}, {"2", qq_grid_game()}},
          classical_matrix());
    case Preset::kFig2Message:
      return unaware::make_family("fig2_message", 2, 3,
                                  {{"", qq_grid_game()},
                                   {"1", qq_grid_game()},
                                   {"2", qq_grid_game()},
                                   {"12", qq_grid_game()},
                                   {"21", qq_grid_game()},
                                   {"121", qq_grid_game()}},
                                  classical_matrix());
  }
  throw game::GameError("unknown preset family");
}

unaware::GameFamily preset_family(const std::string& name) {
  if (name == "example1") return preset_family(Preset::kExample1);
  if (name == "example2_G") return preset_family(Preset::kExample2G);
  if (name == "example2_Gprime") return preset_family(Preset::kExample2GPrime);
  if (name == "example3") return preset_family(Preset::kExample3);
  if (name == "prop3") return preset_family(Preset::kProp3);
  if (name == "prop4") return preset_family(Preset::kProp4);
  if (name == "fig2_message") return preset_family(Preset::kFig2Message);
  throw game::GameError("unknown preset family '" + name + "'");
}

std::vector<std::string> preset_family_names() {
  return {"example1", "example2_G", "example2_Gprime", "example3",
          "prop3",    "prop4",      "fig2_message"};
}

}  // namespace qpfu::penny
