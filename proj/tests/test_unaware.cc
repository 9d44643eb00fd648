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

#include <random>

#include "qpfu/gamecore.h"
#include "qpfu/unaware.h"

using namespace qpfu::unaware;
using qpfu::game::GameError;
using qpfu::game::Profile;
using qpfu::game::StrategicGame;
using qpfu::game::make_bimatrix;

namespace {

StrategicGame gamma1() {
  return make_bimatrix("gamma1", {"a1", "a2", "a3"}, {"b1", "b2"},
                       {{{2, 2}, {2, 2}}, {{3, 3}, {1, 2}}, {{4, 0}, {1, 2}}});
}

StrategicGame gamma2() {
  return make_bimatrix("gamma2", {"a1", "a2"}, {"b1", "b2"},
                       {{{2, 2}, {2, 2}}, {{3, 3}, {1, 2}}});
}

GameFamily example1_family() {
  return make_family("example1", 2, 2,
                     {{"", gamma1()},
                      {"1", gamma1()},
                      {"2", gamma1()},
                      {"12", gamma1()}},
                     gamma2());
}

Profile prof2(std::vector<double> a, std::vector<double> b) {
  Profile p;
  p.weights = {std::move(a), std::move(b)};
  return p;
}

// The equilibrium family of Example 1: (a3, b1) at the modeler's view and
// player 1's, (a2, b1) everywhere else.
ExtendedProfile example1_ene() {
  ExtendedProfile e;
  e.depth = 2;
  e.profiles[parse_view("", 2)] = prof2({0, 0, 1}, {1, 0});
  e.profiles[parse_view("1", 2)] = prof2({0, 0, 1}, {1, 0});
  e.profiles[parse_view("2", 2)] = prof2({0, 1, 0}, {1, 0});
  e.profiles[parse_view("12", 2)] = prof2({0, 1, 0}, {1, 0});
  e.profiles[parse_view("21", 2)] = prof2({0, 1}, {1, 0});
  e.fallback = prof2({0, 1}, {1, 0});
  return e;
}

}  // namespace

TEST_CASE("canonical views") {
  CHECK(canonical_view({1, 1, 2}, 2).str() == "12");
  CHECK(canonical_view({}, 2).str() == "");
  CHECK(canonical_view({2, 1, 2, 2, 1}, 2).str() == "2121");
  CHECK_THROWS_AS(canonical_view({3}, 2), GameError);
  // Idempotence.
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(rng() % 8); ++i) {
      ids.push_back(1 + static_cast<int>(rng() % 2));
    }
    const View v = canonical_view(ids, 2);
    CHECK(canonical_view(v.seq, 2) == v);
  }
}

TEST_CASE("view parsing") {
  CHECK(parse_view("121", 2).seq == std::vector<int>{1, 2, 1});
  CHECK(parse_view("", 2).empty());
  CHECK_THROWS_AS(parse_view("112", 2), GameError);
  CHECK_THROWS_AS(parse_view("13", 2), GameError);
  CHECK_THROWS_AS(parse_view("1a", 2), GameError);
}

TEST_CASE("family lookup and fallback") {
  const GameFamily f = example1_family();
  CHECK(qpfu::game::games_equal(f.at(parse_view("12", 2)), gamma1()));
  CHECK(qpfu::game::games_equal(f.at(parse_view("21", 2)), gamma2()));
  CHECK(qpfu::game::games_equal(f.at(parse_view("12121", 2)), gamma2()));
}

TEST_CASE("validate example1 family") {
  CHECK(validate_family(example1_family()).valid());
}

TEST_CASE("validation catches a strategy-superset child") {
  // Child view knows a strategy the parent lacks: property 2 must fire.
  const GameFamily broken =
      make_family("broken", 2, 1, {{"", gamma2()}, {"1", gamma1()}}, gamma2());
  const ValidationReport rep = validate_family(broken);
  CHECK_FALSE(rep.valid());
  bool property2 = false;
  for (const auto& issue : rep.issues) property2 |= (issue.property == 2);
  CHECK(property2);
}

TEST_CASE("validation catches payoff drift") {
  StrategicGame off = gamma2();
  off.payoffs[0][0] = 9.0;  // (a1,b1) no longer matches the parent
  const GameFamily broken =
      make_family("drift", 2, 1, {{"", gamma1()}, {"1", off}}, off);
  const ValidationReport rep = validate_family(broken);
  CHECK_FALSE(rep.valid());
  bool property4 = false;
  for (const auto& issue : rep.issues) property4 |= (issue.property == 4);
  CHECK(property4);
}

TEST_CASE("subjective families") {
  const GameFamily f = example1_family();
  // Seen from 21 everything is gamma2.
  const GameFamily from21 = subjective_family(f, parse_view("21", 2));
  const GameFamily constant2 = make_family("c", 2, 0, {{"", gamma2()}}, gamma2());
  CHECK(families_equal(from21, constant2));
  // Seen from the modeler's view the family is itself.
  CHECK(families_equal(subjective_family(f, View{}), f));
  // Composition: (f @ 2) @ 1 = f @ 21.
  const GameFamily two_steps =
      subjective_family(subjective_family(f, parse_view("2", 2)),
                        parse_view("1", 2));
  CHECK(families_equal(two_steps, subjective_family(f, parse_view("21", 2))));
  // The key equalities behind Example 1's reasoning.
  CHECK(families_equal(subjective_family(f, View{}),
                       subjective_family(f, parse_view("1", 2))));
  CHECK(families_equal(subjective_family(f, parse_view("2", 2)),
                       subjective_family(f, parse_view("12", 2))));
  CHECK_FALSE(families_equal(subjective_family(f, View{}),
                             subjective_family(f, parse_view("2", 2))));
}

TEST_CASE("extended strategy profiles") {
  const GameFamily f = example1_family();
  const ExtendedProfile ene = example1_ene();
  CHECK(is_esp(f, ene));

  // Player 2's strategy must look the same from views 1 and 12.
  ExtendedProfile broken = ene;
  broken.profiles[parse_view("1", 2)] = prof2({0, 0, 1}, {0, 1});
  CHECK_FALSE(is_esp(f, broken));

  // A constant family with the same profile everywhere is consistent.
  const GameFamily constant =
      make_family("c", 2, 0, {{"", gamma2()}}, gamma2());
  ExtendedProfile flat;
  flat.depth = 0;
  flat.profiles[View{}] = prof2({0, 1}, {1, 0});
  flat.fallback = prof2({0, 1}, {1, 0});
  CHECK(is_esp(constant, flat));
}

TEST_CASE("extended rationalizability") {
  const GameFamily f = example1_family();
  CHECK(is_extended_rationalizable(f, example1_ene(), 1e-9));

  // Playing a2 where a3 earns 4 against b1 is not a best reply.
  ExtendedProfile lazy = example1_ene();
  lazy.profiles[View{}] = prof2({0, 1, 0}, {1, 0});
  lazy.profiles[parse_view("1", 2)] = prof2({0, 1, 0}, {1, 0});
  CHECK(is_esp(f, lazy));
  CHECK_FALSE(is_extended_rationalizable(f, lazy, 1e-9));
}

TEST_CASE("extended Nash equilibrium") {
  const GameFamily f = example1_family();
  CHECK(is_ene(f, example1_ene(), 1e-9));

  // Rationalizable and consistent, but views 21 and 121 share a subjective
  // family while carrying different profiles: not an ENE.
  ExtendedProfile shifted;
  shifted.depth = 2;
  shifted.profiles[parse_view("", 2)] = prof2({0, 0, 1}, {1, 0});
  shifted.profiles[parse_view("1", 2)] = prof2({0, 0, 1}, {0.5, 0.5});
  shifted.profiles[parse_view("2", 2)] = prof2({0, 1, 0}, {1, 0});
  shifted.profiles[parse_view("12", 2)] = prof2({1, 0, 0}, {0.5, 0.5});
  shifted.profiles[parse_view("21", 2)] = prof2({0, 1}, {0.5, 0.5});
  shifted.fallback = prof2({1, 0}, {0.5, 0.5});
  CHECK(is_esp(f, shifted));
  CHECK(is_extended_rationalizable(f, shifted, 1e-9));
  CHECK_FALSE(is_ene(f, shifted, 1e-9));
}

TEST_CASE("solver reproduces Example 1") {
  const SolveResult result = solve_ene(example1_family());
  REQUIRE(!result.solutions.empty());
  bool found = false;
  for (const auto& sol : result.solutions) {
    found |= qpfu::game::profiles_equal(sol.at(View{}),
                                        example1_ene().at(View{}), 1e-9) &&
             qpfu::game::profiles_equal(sol.at(parse_view("2", 2)),
                                        example1_ene().at(parse_view("2", 2)),
                                        1e-9) &&
             qpfu::game::profiles_equal(sol.at(parse_view("21", 2)),
                                        example1_ene().at(parse_view("21", 2)),
                                        1e-9);
    // Every solution is a genuine ENE and respects the 21 = 121 equality.
    CHECK(is_ene(example1_family(), sol, 1e-9));
    CHECK(qpfu::game::profiles_equal(sol.at(parse_view("21", 2)),
                                     sol.at(parse_view("121", 2)), 1e-9));
  }
  CHECK(found);
}

TEST_CASE("solver on a constant family returns the Nash equilibria") {
  const GameFamily constant =
      make_family("c", 2, 0, {{"", gamma2()}}, gamma2());
  const SolveResult result = solve_ene(constant);
  const auto nes = qpfu::game::nash_support_enumeration(gamma2());
  REQUIRE(result.solutions.size() == nes.size());
  for (const auto& sol : result.solutions) {
    bool matches_ne = false;
    for (const auto& ne : nes) {
      matches_ne |= qpfu::game::profiles_equal(sol.at(View{}), ne, 1e-9);
    }
    CHECK(matches_ne);
    // Replicated at every view.
    CHECK(qpfu::game::profiles_equal(sol.at(View{}),
                                     sol.at(parse_view("121", 2)), 1e-9));
  }
}

TEST_CASE("constant extensions characterize Nash equilibria") {
  // One direction: an enumerated equilibrium extends to an ENE. The other:
  // a non-equilibrium pure profile never does.
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> size(2, 3);
  std::uniform_int_distribution<int> pay(-2, 2);
  for (int k = 0; k < 15; ++k) {
    const int m = size(rng), n = size(rng);
    std::vector<std::vector<std::pair<double, double>>> cells(
        m, std::vector<std::pair<double, double>>(n));
    std::vector<std::string> rows, cols;
    for (int i = 0; i < m; ++i) rows.push_back("r" + std::to_string(i));
    for (int j = 0; j < n; ++j) cols.push_back("c" + std::to_string(j));
    for (auto& row : cells) {
      for (auto& cell : row) {
        cell = {static_cast<double>(pay(rng)), static_cast<double>(pay(rng))};
      }
    }
    const StrategicGame g = make_bimatrix("rand", rows, cols, cells);
    const GameFamily constant = make_family("c", 2, 0, {{"", g}}, g);

    for (const auto& ne : qpfu::game::nash_support_enumeration(g)) {
      ExtendedProfile e;
      e.depth = 0;
      e.profiles[View{}] = ne;
      e.fallback = ne;
      CHECK(is_ene(constant, e, 1e-8));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        const Profile pure = Profile::pure(g, {i, j});
        if (qpfu::game::is_nash(g, pure, 1e-9)) continue;
        ExtendedProfile e;
        e.depth = 0;
        e.profiles[View{}] = pure;
        e.fallback = pure;
        CHECK_FALSE(is_ene(constant, e, 1e-9));
      }
    }
  }
}

TEST_CASE("solver solutions always verify") {
  const SolveResult result = solve_ene(example1_family());
  for (const auto& sol : result.solutions) {
    CHECK(is_esp(example1_family(), sol));
    CHECK(is_extended_rationalizable(example1_family(), sol, 1e-9));
    CHECK(is_ene(example1_family(), sol, 1e-9));
  }
}
