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

#include "qpfu/gamecore.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "qpfu/lp.h"

namespace qpfu::game {

namespace {

constexpr double kFeasTol = 1e-9;

// Iterates pure profiles as a mixed-radix odometer; returns false at wrap.
bool next_profile(std::vector<int>& s, const StrategicGame& g) {
  for (int p = g.num_players - 1; p >= 0; --p) {
    if (++s[p] < g.num_strategies(p)) return true;
    s[p] = 0;
  }
  return false;
}

}  // namespace

int StrategicGame::num_profiles() const {
  int n = 1;
  for (int p = 0; p < num_players; ++p) n *= num_strategies(p);
  return n;
}

int StrategicGame::flat_index(const std::vector<int>& profile) const {
  int idx = 0;
  for (int p = 0; p < num_players; ++p) {
    idx = idx * num_strategies(p) + profile[p];
  }
  return idx;
}

int StrategicGame::strategy_index(int player, const std::string& label) const {
  const auto& ls = labels[player];
  auto it = std::find(ls.begin(), ls.end(), label);
  return it == ls.end() ? -1 : static_cast<int>(it - ls.begin());
}

void StrategicGame::validate() const {
  if (num_players <= 0) throw GameError("game: no players");
  if (static_cast<int>(labels.size()) != num_players ||
      static_cast<int>(payoffs.size()) != num_players) {
    throw GameError("game: per-player arrays do not match player count");
  }
  const int profiles = num_profiles();
  for (int p = 0; p < num_players; ++p) {
    if (labels[p].empty()) throw GameError("game: empty strategy set");
    if (static_cast<int>(payoffs[p].size()) != profiles) {
      throw GameError("game: payoff tensor size mismatch");
    }
    for (double v : payoffs[p]) {
      if (!std::isfinite(v)) throw GameError("game: non-finite payoff");
    }
    std::set<std::string> uniq(labels[p].begin(), labels[p].end());
    if (uniq.size() != labels[p].size()) {
      throw GameError("game: duplicate strategy label");
    }
  }
}

StrategicGame make_bimatrix(
    std::string name, std::vector<std::string> row_labels,
    std::vector<std::string> col_labels,
    const std::vector<std::vector<std::pair<double, double>>>& entries) {
  StrategicGame g;
  g.name = std::move(name);
  g.num_players = 2;
  g.labels = {std::move(row_labels), std::move(col_labels)};
  const int m = g.num_strategies(0), n = g.num_strategies(1);
  g.payoffs.assign(2, std::vector<double>(m * n, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      g.payoffs[0][i * n + j] = entries[i][j].first;
      g.payoffs[1][i * n + j] = entries[i][j].second;
    }
  }
  g.validate();
  return g;
}

Profile Profile::pure(const StrategicGame& g, const std::vector<int>& s) {
  Profile p;
  p.weights.resize(g.num_players);
  for (int i = 0; i < g.num_players; ++i) {
    p.weights[i].assign(g.num_strategies(i), 0.0);
    p.weights[i][s[i]] = 1.0;
  }
  return p;
}

bool Profile::compatible(const StrategicGame& g) const {
  if (static_cast<int>(weights.size()) != g.num_players) return false;
  for (int p = 0; p < g.num_players; ++p) {
    if (static_cast<int>(weights[p].size()) != g.num_strategies(p)) {
      return false;
    }
    if (!valid_distribution(weights[p])) return false;
  }
  return true;
}

bool valid_distribution(const std::vector<double>& w) {
  double sum = 0.0;
  for (double x : w) {
    if (!std::isfinite(x) || x < -1e-12) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= 1e-9;
}

bool games_equal(const StrategicGame& a, const StrategicGame& b, double tol) {
  if (a.num_players != b.num_players || a.labels != b.labels) return false;
  for (int p = 0; p < a.num_players; ++p) {
    for (size_t k = 0; k < a.payoffs[p].size(); ++k) {
      if (std::abs(a.payoffs[p][k] - b.payoffs[p][k]) > tol) return false;
    }
  }
  return true;
}

bool profiles_equal(const Profile& a, const Profile& b, double tol) {
  if (a.weights.size() != b.weights.size()) return false;
  for (size_t p = 0; p < a.weights.size(); ++p) {
    if (a.weights[p].size() != b.weights[p].size()) return false;
    for (size_t k = 0; k < a.weights[p].size(); ++k) {
      if (std::abs(a.weights[p][k] - b.weights[p][k]) > tol) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Extensive form.

namespace {

struct InfoSetTable {
  // Per player (1-based index 0 unused): info-set ids in order of first
  // appearance, and their action lists.
  std::vector<std::vector<std::string>> order;
  std::map<std::pair<int, std::string>, std::vector<std::string>> actions;

  int position(int player, const std::string& id) const {
    const auto& v = order[player];
    return static_cast<int>(std::find(v.begin(), v.end(), id) - v.begin());
  }
};

void collect_info_sets(const ExtensiveGame::Node& node, int num_players,
                       InfoSetTable& table) {
  if (node.is_leaf()) {
    if (static_cast<int>(node.payoffs.size()) != num_players) {
      throw GameError("extensive: leaf payoff vector length mismatch");
    }
    for (double v : node.payoffs) {
      if (!std::isfinite(v)) throw GameError("extensive: non-finite payoff");
    }
    return;
  }
  if (node.player < 1 || node.player > num_players) {
    throw GameError("extensive: node owner out of range");
  }
  if (node.actions.empty()) {
    throw GameError("extensive: decision node with no actions");
  }
  if (node.actions.size() != node.children.size()) {
    throw GameError("extensive: action/child count mismatch");
  }
  auto key = std::make_pair(node.player, node.info_set);
  auto it = table.actions.find(key);
  if (it == table.actions.end()) {
    table.actions.emplace(key, node.actions);
    table.order[node.player].push_back(node.info_set);
  } else if (it->second != node.actions) {
    throw GameError("extensive: information set '" + node.info_set +
                    "' has inconsistent action lists");
  }
  for (const auto& child : node.children) {
    collect_info_sets(child, num_players, table);
  }
}

double leaf_payoff_walk(const ExtensiveGame::Node& node,
                        const InfoSetTable& table,
                        const std::vector<std::vector<int>>& choices,
                        int player) {
  const ExtensiveGame::Node* cur = &node;
  while (!cur->is_leaf()) {
    const int pos = table.position(cur->player, cur->info_set);
    const int action = choices[cur->player][pos];
    cur = &cur->children[action];
  }
  return cur->payoffs[player];
}

}  // namespace

StrategicGame strategic_from_extensive(const ExtensiveGame& ext) {
  if (ext.num_players < 1) throw GameError("extensive: no players");
  InfoSetTable table;
  table.order.resize(ext.num_players + 1);
  collect_info_sets(ext.root, ext.num_players, table);

  StrategicGame g;
  g.name = ext.name.empty() ? "strategic" : ext.name + "/strategic";
  g.num_players = ext.num_players;
  g.labels.resize(ext.num_players);

  // Pure strategy = one action per information set, last set varying
  // fastest, so labels come out in the conventional order.
  std::vector<std::vector<std::vector<int>>> strategies(ext.num_players + 1);
  for (int p = 1; p <= ext.num_players; ++p) {
    const auto& sets = table.order[p];
    if (sets.empty()) {
      strategies[p].push_back({});
      g.labels[p - 1].push_back("-");
      continue;
    }
    std::vector<int> radix(sets.size());
    int count = 1;
    for (size_t k = 0; k < sets.size(); ++k) {
      radix[k] = static_cast<int>(table.actions.at({p, sets[k]}).size());
      count *= radix[k];
    }
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> choice(sets.size());
      int rem = idx;
      for (int k = static_cast<int>(sets.size()) - 1; k >= 0; --k) {
        choice[k] = rem % radix[k];
        rem /= radix[k];
      }
      std::string label;
      for (size_t k = 0; k < sets.size(); ++k) {
        label += table.actions.at({p, sets[k]})[choice[k]];
      }
      strategies[p].push_back(std::move(choice));
      g.labels[p - 1].push_back(std::move(label));
    }
  }

  const int profiles = [&] {
    int n = 1;
    for (int p = 1; p <= ext.num_players; ++p) {
      n *= static_cast<int>(strategies[p].size());
    }
    return n;
  }();
  g.payoffs.assign(ext.num_players, std::vector<double>(profiles, 0.0));

  std::vector<int> s(ext.num_players, 0);
  bool more = true;
  while (more) {
    std::vector<std::vector<int>> choices(ext.num_players + 1);
    for (int p = 1; p <= ext.num_players; ++p) {
      choices[p] = strategies[p][s[p - 1]];
    }
    const int idx = g.flat_index(s);
    for (int p = 0; p < ext.num_players; ++p) {
      g.payoffs[p][idx] = leaf_payoff_walk(ext.root, table, choices, p);
    }
    more = next_profile(s, g);
  }
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Reduction.

std::vector<std::vector<std::vector<int>>> equivalence_classes(
    const StrategicGame& g) {
  g.validate();
  std::vector<std::vector<std::vector<int>>> classes(g.num_players);
  for (int p = 0; p < g.num_players; ++p) {
    const int n = g.num_strategies(p);
    std::vector<int> cls(n, -1);
    for (int r = 0; r < n; ++r) {
      if (cls[r] >= 0) continue;
      cls[r] = static_cast<int>(classes[p].size());
      classes[p].push_back({r});
      for (int q = r + 1; q < n; ++q) {
        if (cls[q] >= 0) continue;
        // Same outcome vector against every opponent profile, all players.
        bool same = true;
        std::vector<int> s(g.num_players, 0);
        bool more = true;
        while (more && same) {
          if (s[p] == 0) {  // enumerate opponents once
            std::vector<int> sr = s, sq = s;
            sr[p] = r;
            sq[p] = q;
            for (int j = 0; j < g.num_players && same; ++j) {
              if (std::abs(g.payoff(j, sr) - g.payoff(j, sq)) > 1e-12) {
                same = false;
              }
            }
          }
          more = next_profile(s, g);
        }
        if (same) {
          cls[q] = cls[r];
          classes[p].back().push_back(q);
        }
      }
    }
  }
  return classes;
}

StrategicGame reduce_strategic(const StrategicGame& g) {
  const auto classes = equivalence_classes(g);
  StrategicGame r;
  r.name = g.name.empty() ? "reduced" : g.name + "/reduced";
  r.num_players = g.num_players;
  r.labels.resize(g.num_players);
  std::vector<std::vector<int>> reps(g.num_players);
  for (int p = 0; p < g.num_players; ++p) {
    for (const auto& cls : classes[p]) {
      reps[p].push_back(cls[0]);
      if (cls.size() == 1) {
        r.labels[p].push_back(g.labels[p][cls[0]]);
      } else {
        std::string label = "{";
        for (size_t k = 0; k < cls.size(); ++k) {
          if (k) label += ",";
          label += g.labels[p][cls[k]];
        }
        label += "}";
        r.labels[p].push_back(std::move(label));
      }
    }
  }
  const int profiles = [&] {
    int n = 1;
    for (int p = 0; p < r.num_players; ++p) n *= r.num_strategies(p);
    return n;
  }();
  r.payoffs.assign(r.num_players, std::vector<double>(profiles, 0.0));
  std::vector<int> s(r.num_players, 0);
  bool more = true;
  while (more) {
    std::vector<int> orig(r.num_players);
    for (int p = 0; p < r.num_players; ++p) orig[p] = reps[p][s[p]];
    for (int p = 0; p < r.num_players; ++p) {
      r.payoffs[p][r.flat_index(s)] = g.payoff(p, orig);
    }
    more = next_profile(s, r);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Expectations and best replies.

std::vector<double> expected_payoff(const StrategicGame& g, const Profile& p) {
  if (!p.compatible(g)) throw GameError("expected_payoff: profile mismatch");
  std::vector<double> out(g.num_players, 0.0);
  std::vector<int> s(g.num_players, 0);
  bool more = true;
  while (more) {
    double w = 1.0;
    for (int i = 0; i < g.num_players; ++i) w *= p.weights[i][s[i]];
    if (w != 0.0) {
      for (int i = 0; i < g.num_players; ++i) out[i] += w * g.payoff(i, s);
    }
    more = next_profile(s, g);
  }
  return out;
}

BestReply best_responses(const StrategicGame& g, int player,
                         const Profile& others) {
  if (player < 0 || player >= g.num_players) {
    throw GameError("best_responses: bad player");
  }
  if (static_cast<int>(others.weights.size()) != g.num_players) {
    throw GameError("best_responses: profile mismatch");
  }
  for (int i = 0; i < g.num_players; ++i) {
    if (i == player) continue;
    if (static_cast<int>(others.weights[i].size()) != g.num_strategies(i) ||
        !valid_distribution(others.weights[i])) {
      throw GameError("best_responses: opponent strategy mismatch");
    }
  }
  const int n = g.num_strategies(player);
  std::vector<double> value(n, 0.0);
  std::vector<int> s(g.num_players, 0);
  bool more = true;
  while (more) {
    if (s[player] == 0) {
      double w = 1.0;
      for (int i = 0; i < g.num_players; ++i) {
        if (i != player) w *= others.weights[i][s[i]];
      }
      if (w != 0.0) {
        std::vector<int> t = s;
        for (int r = 0; r < n; ++r) {
          t[player] = r;
          value[r] += w * g.payoff(player, t);
        }
      }
    }
    more = next_profile(s, g);
  }
  BestReply br;
  br.value = *std::max_element(value.begin(), value.end());
  for (int r = 0; r < n; ++r) {
    if (value[r] >= br.value - 1e-9) br.strategies.push_back(r);
  }
  std::sort(br.strategies.begin(), br.strategies.end(), [&](int a, int b) {
    return g.labels[player][a] < g.labels[player][b];
  });
  return br;
}

// ---------------------------------------------------------------------------
// Zero-sum value.

ZeroSumSolution zero_sum_value(const StrategicGame& g) {
  g.validate();
  if (g.num_players != 2) throw GameError("zero_sum_value: need 2 players");
  for (size_t k = 0; k < g.payoffs[0].size(); ++k) {
    if (std::abs(g.payoffs[0][k] + g.payoffs[1][k]) > 1e-9) {
      throw GameError("zero_sum_value: game is not zero-sum");
    }
  }
  const int m = g.num_strategies(0), n = g.num_strategies(1);
  double maxabs = 0.0;
  for (double v : g.payoffs[0]) maxabs = std::max(maxabs, std::abs(v));
  const double shift = maxabs + 1.0;

  // Column player: max 1.q subject to (A + shift) q <= 1, q >= 0.
  std::vector<std::vector<double>> A(m, std::vector<double>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = g.payoffs[0][i * n + j] + shift;
  }
  LpResult lp = simplex_max(A, std::vector<double>(m, 1.0),
                            std::vector<double>(n, 1.0));
  if (!lp.optimal || lp.value <= 0.0) {
    throw GameError("zero_sum_value: LP failed");
  }
  const double t = lp.value;  // 1 / shifted value
  ZeroSumSolution sol;
  sol.value = 1.0 / t - shift;
  std::vector<double> y(n), x(m);
  for (int j = 0; j < n; ++j) y[j] = lp.x[j] / t;
  for (int i = 0; i < m; ++i) x[i] = lp.dual[i] / t;

  // Guarantee checks via best replies (LP duality should make both tight).
  const auto guarantee1 = [&](const std::vector<double>& xs) {
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int i = 0; i < m; ++i) v += xs[i] * g.payoffs[0][i * n + j];
      worst = std::min(worst, v);
    }
    return worst;
  };
  const auto guarantee2 = [&](const std::vector<double>& ys) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      double v = 0.0;
      for (int j = 0; j < n; ++j) v += ys[j] * g.payoffs[1][i * n + j];
      worst = std::min(worst, v);
    }
    return worst;
  };
  if (guarantee1(x) < sol.value - 1e-9 || guarantee2(y) < -sol.value - 1e-9) {
    throw GameError("zero_sum_value: LP solution failed verification");
  }
  sol.optimal1.push_back(x);
  sol.optimal2.push_back(y);

  // Optimal pure strategies are extreme points of the optimal sets too.
  for (int i = 0; i < m; ++i) {
    std::vector<double> e(m, 0.0);
    e[i] = 1.0;
    if (guarantee1(e) >= sol.value - 1e-9 &&
        std::abs(x[i] - 1.0) > 1e-9) {
      sol.optimal1.push_back(e);
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    if (guarantee2(e) >= -sol.value - 1e-9 &&
        std::abs(y[j] - 1.0) > 1e-9) {
      sol.optimal2.push_back(e);
    }
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Support enumeration.

namespace {

// Solves M z = rhs when M has full column rank and the system is consistent.
// Sets *rank_deficient when a pivot is missing.
std::optional<std::vector<double>> solve_full_rank(
    std::vector<std::vector<double>> M, std::vector<double> rhs,
    bool* rank_deficient) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
  *rank_deficient = false;
  if (rows < cols) {
    *rank_deficient = true;
    return std::nullopt;
  }
  std::vector<int> pivot_row(cols, -1);
  int next = 0;
  for (int c = 0; c < cols; ++c) {
    int best = -1;
    double bestval = 1e-9;
    for (int r = next; r < rows; ++r) {
      if (std::abs(M[r][c]) > bestval) {
        bestval = std::abs(M[r][c]);
        best = r;
      }
    }
    if (best < 0) {
      *rank_deficient = true;
      return std::nullopt;
    }
    std::swap(M[best], M[next]);
    std::swap(rhs[best], rhs[next]);
    const double p = M[next][c];
    for (int r = 0; r < rows; ++r) {
      if (r == next || M[r][c] == 0.0) continue;
      const double f = M[r][c] / p;
      for (int cc = c; cc < cols; ++cc) M[r][cc] -= f * M[next][cc];
      rhs[r] -= f * rhs[next];
    }
    pivot_row[c] = next;
    ++next;
  }
  for (int r = next; r < rows; ++r) {
    if (std::abs(rhs[r]) > 1e-9) return std::nullopt;  // inconsistent
  }
  std::vector<double> z(cols);
  for (int c = 0; c < cols; ++c) z[c] = rhs[pivot_row[c]] / M[pivot_row[c]][c];
  return z;
}

int matrix_rank(std::vector<std::vector<double>> M) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int best = -1;
    double bestval = 1e-9;
    for (int r = rank; r < rows; ++r) {
      if (std::abs(M[r][c]) > bestval) {
        bestval = std::abs(M[r][c]);
        best = r;
      }
    }
    if (best < 0) continue;
    std::swap(M[best], M[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      const double f = M[r][c] / M[rank][c];
      for (int cc = c; cc < cols; ++cc) M[r][cc] -= f * M[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Vertices of { (w, u): w a distribution with support exactly `support`,
// payoff(i, w) = u for i in `tight`, payoff(i, w) <= u otherwise } where
// payoff(i, w) = sum_j P[i][j] w_j. Vertices that bind some w_j = 0 are
// skipped; they surface at the smaller support.
std::vector<std::vector<double>> support_vertices(
    const std::vector<std::vector<double>>& P, const std::vector<int>& tight,
    const std::vector<int>& support, int total,
    std::vector<std::string>* diagnostics, const std::string& tag) {
  const int k = static_cast<int>(support.size()) + 1;  // w on support, u
  std::vector<std::vector<double>> base;
  std::vector<double> rhs;
  for (int i : tight) {
    std::vector<double> row(k, 0.0);
    for (size_t j = 0; j < support.size(); ++j) row[j] = P[i][support[j]];
    row[k - 1] = -1.0;
    base.push_back(std::move(row));
    rhs.push_back(0.0);
  }
  {
    std::vector<double> row(k, 1.0);
    row[k - 1] = 0.0;
    base.push_back(std::move(row));
    rhs.push_back(1.0);
  }

  std::vector<int> loose;
  const int rows = static_cast<int>(P.size());
  for (int i = 0; i < rows; ++i) {
    if (std::find(tight.begin(), tight.end(), i) == tight.end()) {
      loose.push_back(i);
    }
  }

  const int rank = matrix_rank(base);
  const int free_dims = k - rank;
  std::vector<std::vector<double>> out;

  auto try_system = [&](const std::vector<int>& extra) {
    auto M = base;
    auto r = rhs;
    for (int i : extra) {
      std::vector<double> row(k, 0.0);
      for (size_t j = 0; j < support.size(); ++j) row[j] = P[i][support[j]];
      row[k - 1] = -1.0;
      M.push_back(std::move(row));
      r.push_back(0.0);
    }
    bool deficient = false;
    auto z = solve_full_rank(M, r, &deficient);
    if (!z) return;
    const double u = (*z)[k - 1];
    std::vector<double> w(total, 0.0);
    for (size_t j = 0; j < support.size(); ++j) {
      if ((*z)[j] < 1e-9) return;  // off this exact support
      w[support[j]] = (*z)[j];
    }
    for (int i : loose) {
      double v = 0.0;
      for (int j = 0; j < total; ++j) v += P[i][j] * w[j];
      if (v > u + kFeasTol) return;  // a non-tight row does better
    }
    out.push_back(std::move(w));
  };

  if (free_dims <= 0) {
    bool deficient = false;
    auto z = solve_full_rank(base, rhs, &deficient);
    if (deficient && diagnostics &&
        static_cast<int>(tight.size()) + 1 == k) {
      diagnostics->push_back("degenerate support system skipped: " + tag);
    }
    if (z) try_system({});
  } else {
    // Underdetermined: square it up with extra binding payoff rows.
    const int L = static_cast<int>(loose.size());
    if (L >= free_dims) {
      std::vector<int> idx(free_dims);
      for (int i = 0; i < free_dims; ++i) idx[i] = i;
      while (true) {
        std::vector<int> extra;
        for (int i : idx) extra.push_back(loose[i]);
        try_system(extra);
        int pos = free_dims - 1;
        while (pos >= 0 && idx[pos] == L - free_dims + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < free_dims; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
  }
  // Dedupe within the support.
  std::vector<std::vector<double>> uniq;
  for (auto& w : out) {
    bool dup = false;
    for (const auto& v : uniq) {
      double d = 0.0;
      for (int j = 0; j < total; ++j) d = std::max(d, std::abs(v[j] - w[j]));
      if (d < 1e-8) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(std::move(w));
  }
  return uniq;
}

}  // namespace

std::vector<Profile> nash_support_enumeration(
    const StrategicGame& g, std::vector<std::string>* diagnostics) {
  g.validate();
  if (g.num_players != 2) {
    throw GameError("nash_support_enumeration: need 2 players");
  }
  const int m = g.num_strategies(0), n = g.num_strategies(1);
  if (m > 12 || n > 12) {
    throw GameError("nash_support_enumeration: more than 12 strategies");
  }
  // Row player's payoffs over columns, and column player's over rows.
  std::vector<std::vector<double>> A(m, std::vector<double>(n));
  std::vector<std::vector<double>> Bt(n, std::vector<double>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      A[i][j] = g.payoffs[0][i * n + j];
      Bt[j][i] = g.payoffs[1][i * n + j];
    }
  }

  std::vector<Profile> found;
  auto push_unique = [&](Profile&& p) {
    for (const auto& q : found) {
      if (profiles_equal(q, p, 1e-8)) return;
    }
    found.push_back(std::move(p));
  };

  for (unsigned sm = 1; sm < (1u << m); ++sm) {
    std::vector<int> s1;
    for (int i = 0; i < m; ++i) {
      if (sm & (1u << i)) s1.push_back(i);
    }
    for (unsigned sn = 1; sn < (1u << n); ++sn) {
      std::vector<int> s2;
      for (int j = 0; j < n; ++j) {
        if (sn & (1u << j)) s2.push_back(j);
      }
      const std::string tag =
          "supports (" + std::to_string(sm) + "," + std::to_string(sn) + ")";
      // Column mix y makes the rows in s1 tie at the top; row mix x makes
      // the columns in s2 tie at the top.
      auto ys = support_vertices(A, s1, s2, n, diagnostics, tag);
      if (ys.empty()) continue;
      auto xs = support_vertices(Bt, s2, s1, m, diagnostics, tag);
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          Profile p;
          p.weights = {x, y};
          if (is_nash(g, p, kFeasTol)) push_unique(std::move(p));
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Profile& a, const Profile& b) {
    return a.weights < b.weights;
  });
  return found;
}

bool is_nash(const StrategicGame& g, const Profile& p, double tol) {
  if (!p.compatible(g)) throw GameError("is_nash: profile mismatch");
  const std::vector<double> current = expected_payoff(g, p);
  for (int player = 0; player < g.num_players; ++player) {
    const BestReply br = best_responses(g, player, p);
    if (br.value > current[player] + tol) return false;
  }
  return true;
}

}  // namespace qpfu::game
