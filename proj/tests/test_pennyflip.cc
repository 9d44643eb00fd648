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

#include <cmath>
#include <random>

#include "qpfu/pennyflip.h"
#include "qpfu/qlinalg.h"
#include "qpfu/unaware.h"

using namespace qpfu::penny;
using qpfu::qlinalg::Gate;
using qpfu::qlinalg::InvariantError;
using qpfu::qlinalg::equal_up_to_phase;
using qpfu::qlinalg::named_gate;

namespace {

qpfu::qlinalg::Unitary2 G(Gate g) { return named_gate(g); }

}  // namespace

TEST_CASE("classical matrix") {
  const auto g = classical_matrix();
  REQUIRE(g.num_strategies(0) == 4);
  REQUIRE(g.num_strategies(1) == 2);
  CHECK(g.labels[0] == std::vector<std::string>{"II", "IX", "XI", "XX"});
  CHECK(g.payoff(0, {0, 0}) == doctest::Approx(1.0));   // II vs I
  CHECK(g.payoff(1, {0, 0}) == doctest::Approx(-1.0));
  CHECK(g.payoff(0, {2, 1}) == doctest::Approx(1.0));   // XI vs X
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(g.payoff(0, {i, j}) + g.payoff(1, {i, j})) < 1e-12);
    }
  }
}

TEST_CASE("sequential play payoffs") {
  CHECK(qq_payoff(G(Gate::H), G(Gate::I), G(Gate::H)).first ==
        doctest::Approx(1.0));
  CHECK(qq_payoff(G(Gate::H), G(Gate::X), G(Gate::H)).first ==
        doctest::Approx(1.0));
  // H Z H = X flips the coin.
  CHECK(qq_payoff(G(Gate::H), G(Gate::Z), G(Gate::H)).first ==
        doctest::Approx(-1.0));
  const auto [a, b] = qq_payoff(G(Gate::X), G(Gate::X), G(Gate::I));
  CHECK(a + b == doctest::Approx(0.0));
  CHECK(a <= 1.0 + 1e-12);
}

TEST_CASE("mixed classical replies cannot touch HH") {
  for (double p : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    CHECK(std::abs(qc_payoff(G(Gate::H), G(Gate::H), p) - 1.0) < 1e-12);
  }
  CHECK(qc_payoff(G(Gate::I), G(Gate::I), 1.0) == doctest::Approx(1.0));
  CHECK(qc_payoff(G(Gate::I), G(Gate::I), 0.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(qc_payoff(G(Gate::I), G(Gate::I), 1.5), InvariantError);
}

TEST_CASE("classical-vs-quantum payoffs") {
  CHECK(cq_payoff({1, 0, 0, 0}, G(Gate::I)) == doctest::Approx(1.0));
  // W2 equalizes the pure pair II to zero.
  CHECK(std::abs(cq_payoff({1, 0, 0, 0}, w2({0.0, 0.4, 2.7}))) < 1e-12);
  // Against IX the payoff is -(2cos^2(gamma/2) - 1).
  const double gamma = 1.234;
  const double want = -(2.0 * std::pow(std::cos(gamma / 2.0), 2) - 1.0);
  CHECK(cq_payoff({0, 1, 0, 0}, qpfu::qlinalg::rotation_y(gamma)) ==
        doctest::Approx(want).epsilon(1e-12));
  CHECK_THROWS_AS(cq_payoff({0.5, 0.2, 0, 0}, G(Gate::I)), InvariantError);
}

TEST_CASE("closed form for the classical-vs-quantum game") {
  CHECK(cq_payoff_formula(0.0, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(std::abs(cq_payoff_formula(M_PI / 2.0, 0.3, 0.1)) < 1e-15);
  CHECK(cq_payoff_formula(M_PI, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cq_payoff_formula(0.0, 0.8, 0.7), InvariantError);

  // Direct computation agrees for arbitrary sandwiches and mixes.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double al = angle(rng), be = angle(rng), ga = angle(rng),
                 de = angle(rng);
    double p2 = unit(rng), p3 = unit(rng);
    if (p2 + p3 > 1.0) {
      p2 = 1.0 - p2;
      p3 = 1.0 - p3;
    }
    const double p1 = (1.0 - p2 - p3) * unit(rng);
    const auto u = qpfu::qlinalg::Unitary2(
        std::exp(std::complex<double>(0.0, al)) *
        (qpfu::qlinalg::rotation_z(be).mat() *
         qpfu::qlinalg::rotation_y(ga).mat() *
         qpfu::qlinalg::rotation_z(de).mat()));
    const double direct = cq_payoff({p1, p2, p3, 1.0 - p1 - p2 - p3}, u);
    CHECK(std::abs(direct - cq_payoff_formula(ga, p2, p3)) < 1e-10);
  }
}

TEST_CASE("v1 family") {
  // gamma = pi/2 at a = 0 realizes the Hadamard matrix up to a phase.
  CHECK(equal_up_to_phase(v1({0.0, M_PI / 2.0}).mat(), G(Gate::H).mat()));
  CHECK_THROWS_AS(v1({0.5, 0.0}), InvariantError);

  // Every member sends |0><0| to an x-axis eigenstate.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  for (int k = 0; k < 200; ++k) {
    const double a = (rng() & 1) ? -M_PI : 0.0;
    const auto u = v1({a, angle(rng)});
    const auto b =
        qpfu::qlinalg::bloch(evolve(qpfu::qlinalg::ket0_density(), u));
    CHECK(std::abs(std::abs(b[0]) - 1.0) < 1e-9);
    CHECK(std::abs(b[1]) < 1e-9);
    CHECK(std::abs(b[2]) < 1e-9);
  }
}

TEST_CASE("v3 closes the loop") {
  const ParamV1 p{0.0, 0.8};
  const auto m3 = v3({1.3, p});
  CHECK(qpfu::qlinalg::fro_dist(
            m3.mat(), qpfu::qlinalg::rotation_z(1.3).mat() *
                          v1(p).mat().adjoint()) < 1e-15);
}

TEST_CASE("v2 family") {
  CHECK(equal_up_to_phase(v2({0.0, 0.0}).mat(), qpfu::qlinalg::pauli_z()));
  // V2 swaps the x-axis eigenstates, both directions.
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  const double s = 1.0 / std::sqrt(2.0);
  const auto plus = qpfu::qlinalg::pure_density(s, s);
  const auto minus = qpfu::qlinalg::pure_density(s, -s);
  for (int k = 0; k < 200; ++k) {
    const auto u = v2({angle(rng), angle(rng)});
    CHECK(qpfu::qlinalg::fro_dist(evolve(plus, u).mat(), minus.mat()) < 1e-9);
    CHECK(qpfu::qlinalg::fro_dist(evolve(minus, u).mat(), plus.mat()) < 1e-9);
  }
}

TEST_CASE("w2 at the origin") {
  const auto u = w2({0.0, 0.0, 0.0});
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u.mat()(0, 0) - std::complex<double>{s, 0.0}) < 1e-15);
  CHECK(std::abs(u.mat()(0, 1) - std::complex<double>{-s, 0.0}) < 1e-15);
  CHECK(std::abs(u.mat()(1, 0) - std::complex<double>{s, 0.0}) < 1e-15);
  CHECK(std::abs(u.mat()(1, 1) - std::complex<double>{s, 0.0}) < 1e-15);
  CHECK(qpfu::qlinalg::fro_dist(u.mat(),
                                qpfu::qlinalg::rotation_y(M_PI / 2.0).mat()) <
        1e-15);
}

TEST_CASE("guarantee suite for (V1, V3)") {
  const auto rep = verify_v1v3(300, 20260810);
  CHECK(rep.ok());
  CHECK(rep.max_error < 1e-9);
  CHECK(rep.samples == 300);

  // Corrupting V3 with an x-rotation breaks the fixed-point system.
  const ParamV1 p{0.0, 1.1};
  const auto bad =
      qpfu::qlinalg::Unitary2(qpfu::qlinalg::rotation_x(2.2).mat() *
                              v1(p).mat().adjoint());
  const auto m1 = v1(p);
  const auto rho = evolve(evolve(qpfu::qlinalg::ket0_density(), m1), bad);
  CHECK(qpfu::qlinalg::fro_dist(rho.mat(),
                                qpfu::qlinalg::ket0_density().mat()) > 1e-3);
}

TEST_CASE("counter suite for V2") {
  const auto rep = verify_v2(300, 20260810);
  CHECK(rep.ok());
  CHECK(rep.max_error < 1e-9);

  // The identity is no counter-move: the superposition survives.
  CHECK(qc_payoff(G(Gate::H), G(Gate::H), 0.5) == doctest::Approx(1.0));
  CHECK(qq_payoff(G(Gate::H), G(Gate::I), G(Gate::H)).first ==
        doctest::Approx(1.0));
}

TEST_CASE("equalizer suite for W2") {
  const auto rep = verify_w2(200, 20260810);
  CHECK(rep.ok());

  // Ry(0) = identity does not equalize: II wins outright.
  CHECK(cq_payoff({1, 0, 0, 0}, G(Gate::I)) == doctest::Approx(1.0));
}

TEST_CASE("sine product identity") {
  CHECK(qq_vs_w2_payoff(M_PI / 2.0, M_PI / 2.0) == doctest::Approx(-1.0));
  CHECK(qq_vs_w2_payoff(0.0, 2.34) == doctest::Approx(0.0));
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double beta = i * (2.0 * M_PI / 19.0);
      const double delta = j * (2.0 * M_PI / 19.0);
      CHECK(std::abs(qq_vs_w2_direct(0.9, beta, delta) -
                     qq_vs_w2_payoff(beta, delta)) < 1e-10);
    }
  }
}

TEST_CASE("uniform average of the sine product vanishes") {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += qq_vs_w2_payoff(u(rng), u(rng));
  CHECK(std::abs(sum / n) < 0.02);
}

TEST_CASE("the three-gate game matches its published table") {
  const auto g = example3_matrix();
  REQUIRE(g.num_strategies(0) == 9);
  REQUIRE(g.num_strategies(1) == 3);
  CHECK(g.labels[0] == std::vector<std::string>{"II", "IX", "IH", "XI", "XX",
                                                "XH", "HI", "HX", "HH"});
  const double table[9][3] = {
      {1, -1, 1}, {-1, 1, -1}, {0, 0, 0}, {-1, 1, -1}, {1, -1, 1},
      {0, 0, 0},  {0, 0, 0},   {0, 0, 0}, {1, 1, -1},
  };
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(g.payoff(0, {i, j}) - table[i][j]) < 1e-12);
    }
  }

  const auto reduced = qpfu::game::reduce_strategic(g);
  REQUIRE(reduced.num_strategies(0) == 4);
  const auto sol = qpfu::game::zero_sum_value(reduced);
  CHECK(std::abs(sol.value) < 1e-9);
  REQUIRE(!sol.optimal2.empty());
  CHECK(std::abs(sol.optimal2[0][0]) < 1e-9);
  CHECK(sol.optimal2[0][1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(sol.optimal2[0][2] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("the merged two-awareness table disagrees in one cell") {
  const auto rep = misleading_matrix();
  CHECK(rep.cells_compared == 18);
  REQUIRE(rep.mismatches.size() == 1);
  const auto& cell = rep.mismatches[0];
  CHECK(cell.row == "XX");
  CHECK(cell.col == "X");
  CHECK(cell.computed.first == doctest::Approx(-1.0));
  CHECK(cell.computed.second == doctest::Approx(1.0));
  CHECK(cell.printed.first == doctest::Approx(1.0));
  // Everything else matches the published table.
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (rep.computed.labels[0][i] == "XX" &&
          rep.computed.labels[1][j] == "X") {
        continue;
      }
      CHECK(std::abs(rep.computed.payoff(0, {i, j}) -
                     rep.printed.payoff(0, {i, j})) < 1e-12);
    }
  }
}

TEST_CASE("discretization") {
  const NamedUnitary ni{"I", G(Gate::I)};
  const NamedUnitary nx{"X", G(Gate::X)};
  const NamedUnitary nz{"Z", G(Gate::Z)};
  // Classical gate sets reproduce the classical matrix exactly.
  const auto cc = discretize(
      VariantTag::CC, {{ni, ni}, {ni, nx}, {nx, ni}, {nx, nx}}, {ni, nx});
  CHECK(qpfu::game::games_equal(cc, classical_matrix(), 0.0));
  // Singleton sets give the single qq_payoff cell.
  const auto tiny = discretize(VariantTag::QQ, {{ni, ni}}, {nx});
  CHECK(tiny.num_profiles() == 1);
  CHECK(tiny.payoff(0, {0, 0}) == doctest::Approx(-1.0));
  // Classical-side restrictions are enforced.
  CHECK_THROWS_AS(discretize(VariantTag::QC, {{ni, ni}}, {nz}),
                  InvariantError);
  CHECK_THROWS_AS(
      discretize(VariantTag::CQ, {{NamedUnitary{"H", G(Gate::H)}, ni}}, {nz}),
      InvariantError);
  CHECK_THROWS_AS(discretize(VariantTag::QQ, {}, {ni}), InvariantError);
}

TEST_CASE("grid entries agree with direct evaluation") {
  const auto grid = default_gate_grid();
  std::vector<std::pair<NamedUnitary, NamedUnitary>> pairs;
  for (const auto& a : grid) {
    for (const auto& b : grid) pairs.push_back({a, b});
  }
  const auto g = discretize(VariantTag::QQ, pairs, grid);
  for (int i = 0; i < g.num_strategies(0); ++i) {
    for (int j = 0; j < g.num_strategies(1); ++j) {
      const auto direct =
          qq_payoff(pairs[i].first.u, grid[j].u, pairs[i].second.u);
      CHECK(g.payoff(0, {i, j}) == doctest::Approx(direct.first));
    }
  }
}

TEST_CASE("preset families satisfy the axioms") {
  for (const auto& name : preset_family_names()) {
    const auto family = preset_family(name);
    const auto rep = qpfu::unaware::validate_family(family);
    for (const auto& issue : rep.issues) {
      MESSAGE(name, ": property ", issue.property, " at '", issue.view,
              "': ", issue.message);
    }
    CHECK(rep.valid());
  }
}

TEST_CASE("example3 as seen from view 12 is the classical world") {
  const auto family = preset_family(Preset::kExample3);
  const auto from12 =
      qpfu::unaware::subjective_family(family, qpfu::unaware::parse_view("12", 2));
  const auto constant_cc = qpfu::unaware::make_family(
      "cc", 2, 0, {{"", classical_matrix()}}, classical_matrix());
  CHECK(qpfu::unaware::families_equal(from12, constant_cc));
}

TEST_CASE("solver reproduces the three-gate equilibrium") {
  const auto family = preset_family(Preset::kExample3);
  const auto result = qpfu::unaware::solve_ene(family);
  REQUIRE(!result.solutions.empty());
  const auto& g0 = family.at({});
  bool found = false;
  for (const auto& sol : result.solutions) {
    const auto& modeler = sol.at({});
    const int hh = g0.strategy_index(0, "HH");
    const int z = g0.strategy_index(1, "Z");
    if (modeler.weights[0][hh] > 1.0 - 1e-9 &&
        modeler.weights[1][z] > 1.0 - 1e-9) {
      found = true;
      const auto payoff = qpfu::game::expected_payoff(g0, modeler);
      CHECK(payoff[0] == doctest::Approx(-1.0).epsilon(1e-9));
    }
  }
  CHECK(found);
}

TEST_CASE("solver finds the winning pair in example 2") {
  const auto family = preset_family(Preset::kExample2G);
  const auto result = qpfu::unaware::solve_ene(family);
  REQUIRE(!result.solutions.empty());
  const auto& g0 = family.at({});
  bool hh_win = false;
  for (const auto& sol : result.solutions) {
    const auto& modeler = sol.at({});
    const int hh = g0.strategy_index(0, "HH");
    if (hh >= 0 && modeler.weights[0][hh] > 1.0 - 1e-9) {
      const auto payoff = qpfu::game::expected_payoff(g0, modeler);
      hh_win |= payoff[0] > 1.0 - 1e-9;
    }
  }
  CHECK(hh_win);
}

TEST_CASE("every prop3 equilibrium costs player 1 the game") {
  const auto family = preset_family(Preset::kProp3);
  const auto result = qpfu::unaware::solve_ene(family);
  REQUIRE(!result.solutions.empty());
  const auto& g0 = family.at({});
  for (const auto& sol : result.solutions) {
    const auto payoff = qpfu::game::expected_payoff(g0, sol.at({}));
    CHECK(payoff[0] == doctest::Approx(-1.0).epsilon(1e-9));
  }
}

TEST_CASE("payoffs stay in the physical range") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) {
    const auto u1 = qpfu::qlinalg::haar_unitary(rng);
    const auto u2 = qpfu::qlinalg::haar_unitary(rng);
    const auto u3 = qpfu::qlinalg::haar_unitary(rng);
    const auto [a, b] = qq_payoff(u1, u2, u3);
    CHECK(std::abs(a + b) < 1e-12);
    CHECK(a <= 1.0 + 1e-9);
    CHECK(a >= -1.0 - 1e-9);
  }
}
