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

#ifndef QPFU_GAMECORE_H_
#define QPFU_GAMECORE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite classical game machinery: extensive-form trees with information
// sets, strategic and reduced strategic forms, mixed strategies, best
// replies, zero-sum values via LP, and bimatrix Nash enumeration.
namespace qpfu::game {

struct GameError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Finite N-player game in strategic form. Payoffs are stored per player as
// a flat tensor over pure profiles, last player's index fastest.
struct StrategicGame {
  std::string name;
  int num_players = 0;
  std::vector<std::vector<std::string>> labels;  // [player][strategy]
  std::vector<std::vector<double>> payoffs;      // [player][flat profile]

  int num_strategies(int player) const {
    return static_cast<int>(labels[player].size());
  }
  int num_profiles() const;
  int flat_index(const std::vector<int>& profile) const;
  double payoff(int player, const std::vector<int>& profile) const {
    return payoffs[player][flat_index(profile)];
  }
  // Index of a strategy label, -1 if absent.
  int strategy_index(int player, const std::string& label) const;
  // Throws GameError if dimensions are inconsistent or payoffs non-finite.
  void validate() const;
};

// Convenience constructor for two-player games from (u1,u2) entry pairs,
// given as rows[r][c] = {u1, u2}.
StrategicGame make_bimatrix(
    std::string name, std::vector<std::string> row_labels,
    std::vector<std::string> col_labels,
    const std::vector<std::vector<std::pair<double, double>>>& entries);

// A probability vector over one player's strategies.
struct MixedStrategy {
  int player = 0;
  std::vector<double> weights;
};

// One mixed strategy per player, indexed by player.
struct Profile {
  std::vector<std::vector<double>> weights;

  static Profile pure(const StrategicGame& g, const std::vector<int>& s);
  bool compatible(const StrategicGame& g) const;
};

// Weights >= -1e-12 and summing to 1 within 1e-9.
bool valid_distribution(const std::vector<double>& w);

bool games_equal(const StrategicGame& a, const StrategicGame& b,
                 double tol = 1e-12);
bool profiles_equal(const Profile& a, const Profile& b, double tol = 1e-9);

// Extensive-form game tree. Decision nodes carry the owning player (1-based)
// and an information-set id; nodes sharing (player, info_set) belong to the
// same information set and must list identical actions. Leaves carry one
// payoff per player. Perfect recall is not assumed.
struct ExtensiveGame {
  struct Node {
    int player = 0;  // 0 for leaves
    std::string info_set;
    std::vector<std::string> actions;
    std::vector<Node> children;
    std::vector<double> payoffs;  // leaves only

    bool is_leaf() const { return children.empty(); }
  };
  std::string name;
  int num_players = 0;
  Node root;
};

// Strategic form of an extensive game: one pure strategy per function from
// a player's information sets (in order of first appearance) to actions;
// strategy labels concatenate the chosen action names. A player who never
// moves gets the single trivial strategy "-".
StrategicGame strategic_from_extensive(const ExtensiveGame& ext);

// Merges payoff-equivalent strategies (identical outcome vectors against
// every opponent profile, for every player) into a single representative.
// Multi-member classes are labeled "{a,b,...}" in original order.
StrategicGame reduce_strategic(const StrategicGame& g);

// Per-player equivalence classes used by reduce_strategic, as index lists.
std::vector<std::vector<std::vector<int>>> equivalence_classes(
    const StrategicGame& g);

// Multilinear expected payoff vector.
std::vector<double> expected_payoff(const StrategicGame& g, const Profile& p);

struct BestReply {
  double value = 0.0;
  std::vector<int> strategies;  // argmax set, sorted by strategy label
};

// Best pure replies for `player` against the opponents' mixed strategies in
// `others` (the player's own entry is ignored).
BestReply best_responses(const StrategicGame& g, int player,
                         const Profile& others);

struct ZeroSumSolution {
  double value = 0.0;
  // Verified optimal strategies per player: the LP vertex first, then any
  // optimal pure strategies.
  std::vector<std::vector<double>> optimal1;
  std::vector<std::vector<double>> optimal2;
};

// Value and optimal strategies of a two-player zero-sum game, by LP
// (dense simplex on the shifted minimax program). Throws GameError unless
// u1 + u2 = 0 within 1e-9.
ZeroSumSolution zero_sum_value(const StrategicGame& g);

// All extreme Nash equilibria of a two-player game by support enumeration:
// for every support pair the indifference system is solved (with additional
// binding payoff constraints when underdetermined) and candidates are kept
// if feasible and mutual best replies. Degenerate support systems are
// skipped and noted in *diagnostics. Capped at 12 strategies per player.
std::vector<Profile> nash_support_enumeration(
    const StrategicGame& g, std::vector<std::string>* diagnostics = nullptr);

// True iff no player can gain more than tol by a pure deviation.
bool is_nash(const StrategicGame& g, const Profile& p, double tol);

}  // namespace qpfu::game

#endif  // QPFU_GAMECORE_H_
