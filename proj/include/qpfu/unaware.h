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

#ifndef QPFU_UNAWARE_H_
#define QPFU_UNAWARE_H_

#include <map>
#include <string>
#include <vector>

#include "qpfu/gamecore.h"

// Games with unawareness: views (finite player sequences), families of
// strategic games over views, the four closure/monotonicity axioms, extended
// strategy profiles, extended rationalizability and extended Nash
// equilibrium, plus a backward-propagation ENE solver for families that are
// eventually constant.
namespace qpfu::unaware {

// A view is a finite sequence of players with no immediate repetitions
// (the canonical form: repeated players collapse, so "11" names the same
// view as "1"). The empty view is the modeler's.
struct View {
  std::vector<int> seq;

  bool empty() const { return seq.empty(); }
  int length() const { return static_cast<int>(seq.size()); }
  int last() const { return seq.back(); }
  std::string str() const;

  bool operator==(const View&) const = default;
  auto operator<=>(const View&) const = default;
};

// Collapses consecutive duplicates: (1,1,2) -> (1,2). Player ids must lie
// in 1..num_players; throws GameError otherwise.
View canonical_view(const std::vector<int>& ids, int num_players);

// Parses "121" (or "" for the modeler). Rejects non-digits, out-of-range
// players and non-canonical strings such as "112".
View parse_view(const std::string& text, int num_players);

// Appends one player and canonicalizes.
View extend(const View& v, int player);
// Concatenation v ^ w, canonicalized.
View concat(const View& v, const View& w, int num_players);

// All canonical views of length <= depth, shortest first, lexicographic
// within a length.
std::vector<View> views_up_to(int depth, int num_players);

// A family of strategic-form games over views: every canonical view of
// length <= depth has an explicit game; longer views share the fallback
// ("otherwise") game. All families in this codebase are eventually constant,
// which this representation makes exact.
struct GameFamily {
  std::string name;
  int num_players = 2;
  int depth = 0;
  std::map<View, game::StrategicGame> games;
  game::StrategicGame fallback;

  const game::StrategicGame& at(const View& v) const;
};

// Builds a family from the case-notation data: views listed in `cases` take
// their given game, every other view of length <= depth takes `otherwise`,
// and views beyond depth fall back to `otherwise`.
GameFamily make_family(
    std::string name, int num_players, int depth,
    const std::vector<std::pair<std::string, game::StrategicGame>>& cases,
    game::StrategicGame otherwise);

// An extended strategy profile: a profile for every view (explicit up to
// `depth`, one shared profile beyond).
struct ExtendedProfile {
  int depth = 0;
  std::map<View, game::Profile> profiles;
  game::Profile fallback;

  const game::Profile& at(const View& v) const;
};

struct ValidationIssue {
  int property = 0;  // 1..4, the axiom that failed
  std::string view;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

// Checks the four defining properties of a game with unawareness:
//   1. every view's game involves the family's player set;
//   2. strategy-set nesting along chains (child sets inside parent sets);
//   3. idempotence of repeated players (sampled; the canonical
//      representation makes it structural);
//   4. payoff coherence: each child profile, read in the parent game,
//      yields identical payoffs (pure-profile enumeration).
// Never throws; violations are itemized.
ValidationReport validate_family(const GameFamily& f);

// The family as seen from view v: the map w -> G_{v^w}.
GameFamily subjective_family(const GameFamily& f, const View& v);

// Semantic equality: same games at every view up to both depths + 1 and
// equal fallbacks.
bool families_equal(const GameFamily& a, const GameFamily& b);

// Eq-consistency of an extended profile: each player's strategy at a view
// coincides with their strategy one awareness level deeper (weights compared
// through the label embedding, within 1e-9). Structural mismatches yield
// false rather than an exception.
bool is_esp(const GameFamily& f, const ExtendedProfile& e);

// Every (player, view) strategy is a best reply, one level deeper, to the
// opponents' strategies there, within tol.
bool is_extended_rationalizable(const GameFamily& f, const ExtendedProfile& e,
                                double tol);

// Extended Nash equilibrium: extended rationalizable, and views with equal
// subjective families carry equal profiles (within 1e-9).
bool is_ene(const GameFamily& f, const ExtendedProfile& e, double tol);

struct SolveOptions {
  double tol = 1e-9;
  int max_solutions = 64;
};

struct SolveResult {
  std::vector<ExtendedProfile> solutions;
  std::vector<std::string> diagnostics;
};

// Enumerates ENEs by backward propagation: Nash equilibria of the fallback
// game seed the deep views; walking views by decreasing length, each pinned
// component comes from one level deeper and the owner's component is chosen
// among best replies (pure ones plus already-propagated mixtures); the
// candidates are then filtered through is_ene. Deterministic order; an empty
// result is reported in diagnostics, not an error.
SolveResult solve_ene(const GameFamily& f, const SolveOptions& opts = {});

}  // namespace qpfu::unaware

#endif  // QPFU_UNAWARE_H_
