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

#include "qpfu/unaware.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace qpfu::unaware {

using game::GameError;
using game::Profile;
using game::StrategicGame;

std::string View::str() const {
  std::string s;
  for (int p : seq) s += static_cast<char>('0' + p);
  return s;
}

View canonical_view(const std::vector<int>& ids, int num_players) {
  View v;
  for (int p : ids) {
    if (p < 1 || p > num_players) {
      throw GameError("view: unknown player id " + std::to_string(p));
    }
    if (v.seq.empty() || v.seq.back() != p) v.seq.push_back(p);
  }
  return v;
}

View parse_view(const std::string& text, int num_players) {
  View v;
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw GameError("view '" + text + "': expected player digits");
    }
    const int p = c - '0';
    if (p > num_players) {
      throw GameError("view '" + text + "': unknown player id");
    }
    if (!v.seq.empty() && v.seq.back() == p) {
      throw GameError("view '" + text +
                      "': not canonical (consecutive repeat)");
    }
    v.seq.push_back(p);
  }
  return v;
}

View extend(const View& v, int player) {
  View w = v;
  if (w.seq.empty() || w.seq.back() != player) w.seq.push_back(player);
  return w;
}

View concat(const View& v, const View& w, int num_players) {
  std::vector<int> ids = v.seq;
  ids.insert(ids.end(), w.seq.begin(), w.seq.end());
  return canonical_view(ids, num_players);
}

std::vector<View> views_up_to(int depth, int num_players) {
  std::vector<View> out{View{}};
  size_t level_start = 0;
  for (int len = 1; len <= depth; ++len) {
    const size_t level_end = out.size();
    for (size_t k = level_start; k < level_end; ++k) {
      for (int p = 1; p <= num_players; ++p) {
        if (!out[k].seq.empty() && out[k].last() == p) continue;
        if (out[k].length() != len - 1) continue;
        View w = out[k];
        w.seq.push_back(p);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  std::stable_sort(out.begin(), out.end(), [](const View& a, const View& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.seq < b.seq;
  });
  return out;
}

const StrategicGame& GameFamily::at(const View& v) const {
  if (v.length() > depth) return fallback;
  auto it = games.find(v);
  if (it == games.end()) {
    throw GameError("family '" + name + "': no game at view '" + v.str() +
                    "'");
  }
  return it->second;
}

GameFamily make_family(
    std::string name, int num_players, int depth,
    const std::vector<std::pair<std::string, game::StrategicGame>>& cases,
    game::StrategicGame otherwise) {
  GameFamily f;
  f.name = std::move(name);
  f.num_players = num_players;
  f.depth = depth;
  f.fallback = std::move(otherwise);
  for (const View& v : views_up_to(depth, num_players)) {
    f.games[v] = f.fallback;
  }
  for (const auto& [text, g] : cases) {
    View v = parse_view(text, num_players);
    if (v.length() > depth) {
      throw GameError("family: view '" + text + "' exceeds depth " +
                      std::to_string(depth));
    }
    f.games[v] = g;
  }
  return f;
}

const Profile& ExtendedProfile::at(const View& v) const {
  if (v.length() > depth) return fallback;
  auto it = profiles.find(v);
  if (it == profiles.end()) {
    throw GameError("profile: no assignment at view '" + v.str() + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Axioms.

namespace {

// Embeds weights over `from` labels into the `to` label space (zero
// elsewhere). Labels absent from `to` are reported through *lost_weight.
std::vector<double> embed_weights(const std::vector<double>& w,
                                  const std::vector<std::string>& from,
                                  const std::vector<std::string>& to,
                                  double* lost_weight = nullptr) {
  std::vector<double> out(to.size(), 0.0);
  double lost = 0.0;
  for (size_t k = 0; k < from.size(); ++k) {
    auto it = std::find(to.begin(), to.end(), from[k]);
    if (it == to.end()) {
      lost += std::abs(w[k]);
    } else {
      out[it - to.begin()] += w[k];
    }
  }
  if (lost_weight) *lost_weight = lost;
  return out;
}

bool label_subset(const std::vector<std::string>& small,
                  const std::vector<std::string>& big,
                  std::string* missing = nullptr) {
  for (const auto& s : small) {
    if (std::find(big.begin(), big.end(), s) == big.end()) {
      if (missing) *missing = s;
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_family(const GameFamily& f) {
  ValidationReport rep;
  auto add = [&](int property, const View& v, std::string msg) {
    rep.issues.push_back({property, v.str(), std::move(msg)});
  };

  const auto views = views_up_to(f.depth, f.num_players);
  // Property 1: every view's game involves exactly the family's players.
  for (const View& v : views) {
    auto it = f.games.find(v);
    if (it == f.games.end()) {
      add(2, v, "no game assigned (prefix closure broken)");
      continue;
    }
    if (it->second.num_players != f.num_players) {
      add(1, v,
          "game has " + std::to_string(it->second.num_players) +
              " players, family has " + std::to_string(f.num_players));
    }
  }
  if (f.fallback.num_players != f.num_players) {
    add(1, View{}, "fallback game player count mismatch");
  }

  // Properties 2 and 4 along parent-child edges, including the edge from
  // every deepest explicit view into the fallback.
  const auto boundary = views_up_to(f.depth + 1, f.num_players);
  for (const View& child : boundary) {
    if (child.empty()) continue;
    View parent = child;
    parent.seq.pop_back();
    const StrategicGame* pg;
    const StrategicGame* cg;
    try {
      pg = &f.at(parent);
      cg = &f.at(child);
    } catch (const GameError&) {
      continue;  // already reported as prefix-closure breakage
    }
    if (pg->num_players != f.num_players ||
        cg->num_players != f.num_players) {
      continue;  // property-1 issue; nesting checks would be ill-typed
    }
    bool nested = true;
    for (int p = 0; p < f.num_players; ++p) {
      std::string missing;
      if (cg->labels[p].empty()) {
        add(2, child, "empty strategy set");
        nested = false;
      } else if (!label_subset(cg->labels[p], pg->labels[p], &missing)) {
        add(2, child,
            "player " + std::to_string(p + 1) + " strategy '" + missing +
                "' missing from the view '" + parent.str() + "' game");
        nested = false;
      }
    }
    if (!nested) continue;
    // Property 4 with a constant player set: the child game must agree
    // with the parent on every common pure profile.
    std::vector<int> s(f.num_players, 0);
    bool more = true;
    while (more) {
      std::vector<int> t(f.num_players);
      bool ok = true;
      for (int p = 0; p < f.num_players && ok; ++p) {
        t[p] = pg->strategy_index(p, cg->labels[p][s[p]]);
        ok = t[p] >= 0;
      }
      if (ok) {
        for (int p = 0; p < f.num_players; ++p) {
          if (std::abs(cg->payoff(p, s) - pg->payoff(p, t)) > 1e-9) {
            std::ostringstream msg;
            msg << "payoff completion fails for player " << (p + 1)
                << " at profile (";
            for (int q = 0; q < f.num_players; ++q) {
              if (q) msg << ",";
              msg << cg->labels[q][s[q]];
            }
            msg << ")";
            add(4, child, msg.str());
            break;
          }
        }
      }
      // Advance odometer over the child's strategy space.
      more = false;
      for (int p = f.num_players - 1; p >= 0; --p) {
        if (++s[p] < cg->num_strategies(p)) {
          more = true;
          break;
        }
        s[p] = 0;
      }
    }
  }

  // Property 3, sampled: duplicating any player inside a view resolves to
  // the same game (structural under canonical views; checked anyway).
  for (const View& v : views) {
    for (int p = 1; p <= f.num_players; ++p) {
      std::vector<int> dup;
      for (int q : v.seq) {
        dup.push_back(q);
        if (q == p) dup.push_back(q);
      }
      const View w = canonical_view(dup, f.num_players);
      if (!(w == v)) {
        add(3, v, "duplication changed the view (canonicalization bug)");
      }
    }
  }
  return rep;
}

GameFamily subjective_family(const GameFamily& f, const View& v) {
  for (int p : v.seq) {
    if (p < 1 || p > f.num_players) {
      throw GameError("subjective_family: irrelevant view '" + v.str() + "'");
    }
  }
  GameFamily out;
  out.name = f.name + "@" + (v.empty() ? "modeler" : v.str());
  out.num_players = f.num_players;
  out.depth = f.depth + 1;
  out.fallback = f.fallback;
  for (const View& w : views_up_to(out.depth, f.num_players)) {
    out.games[w] = f.at(concat(v, w, f.num_players));
  }
  return out;
}

bool families_equal(const GameFamily& a, const GameFamily& b) {
  if (a.num_players != b.num_players) return false;
  const int horizon = std::max(a.depth, b.depth) + 1;
  for (const View& v : views_up_to(horizon, a.num_players)) {
    if (!game::games_equal(a.at(v), b.at(v))) return false;
  }
  return game::games_equal(a.fallback, b.fallback);
}

// ---------------------------------------------------------------------------
// Extended profiles.

namespace {

bool profile_matches_game(const Profile& p, const StrategicGame& g) {
  return p.compatible(g);
}

}  // namespace

bool is_esp(const GameFamily& f, const ExtendedProfile& e) {
  const int horizon = std::max(f.depth, e.depth) + 1;
  for (const View& v : views_up_to(horizon, f.num_players)) {
    const StrategicGame& g = f.at(v);
    const Profile* p;
    try {
      p = &e.at(v);
    } catch (const GameError&) {
      return false;
    }
    if (!profile_matches_game(*p, g)) return false;
  }
  // (sigma_j)_v = (sigma_j)_{v^j} through the label embedding.
  for (const View& v : views_up_to(horizon, f.num_players)) {
    const StrategicGame& g = f.at(v);
    const Profile& pv = e.at(v);
    for (int j = 1; j <= f.num_players; ++j) {
      const View child = extend(v, j);
      if (child == v || child.length() > horizon + 1) continue;
      const StrategicGame& cg = f.at(child);
      const Profile& pc = e.at(child);
      if (!profile_matches_game(pc, cg)) return false;
      double lost = 0.0;
      std::vector<double> embedded = embed_weights(
          pc.weights[j - 1], cg.labels[j - 1], g.labels[j - 1], &lost);
      if (lost > 1e-9) return false;
      for (size_t k = 0; k < embedded.size(); ++k) {
        if (std::abs(embedded[k] - pv.weights[j - 1][k]) > 1e-9) return false;
      }
    }
  }
  return true;
}

bool is_extended_rationalizable(const GameFamily& f, const ExtendedProfile& e,
                                double tol) {
  const int horizon = std::max(f.depth, e.depth) + 1;
  for (const View& v : views_up_to(horizon, f.num_players)) {
    for (int j = 1; j <= f.num_players; ++j) {
      const View deeper = extend(v, j);  // equals v when j closed the view
      const StrategicGame& g = f.at(deeper);
      const Profile& opp = e.at(deeper);
      if (!profile_matches_game(opp, g)) return false;
      // Player j's own strategy comes from view v, projected onto the
      // (possibly smaller) strategy set of the deeper game.
      const StrategicGame& gv = f.at(v);
      const Profile& pv = e.at(v);
      double lost = 0.0;
      std::vector<double> own = embed_weights(
          pv.weights[j - 1], gv.labels[j - 1], g.labels[j - 1], &lost);
      if (lost > tol) return false;
      Profile joint = opp;
      joint.weights[j - 1] = own;
      const double mine = expected_payoff(g, joint)[j - 1];
      const game::BestReply br = best_responses(g, j - 1, opp);
      if (mine < br.value - tol) return false;
    }
  }
  return true;
}

bool is_ene(const GameFamily& f, const ExtendedProfile& e, double tol) {
  if (!is_esp(f, e)) return false;
  if (!is_extended_rationalizable(f, e, tol)) return false;
  const int horizon = std::max(f.depth, e.depth) + 1;
  const auto views = views_up_to(horizon, f.num_players);
  std::vector<GameFamily> subjective;
  subjective.reserve(views.size());
  for (const View& v : views) subjective.push_back(subjective_family(f, v));
  for (size_t i = 0; i < views.size(); ++i) {
    for (size_t k = i + 1; k < views.size(); ++k) {
      if (!families_equal(subjective[i], subjective[k])) continue;
      if (!game::profiles_equal(e.at(views[i]), e.at(views[k]), 1e-9)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Solver.

namespace {

std::string profile_key(const ExtendedProfile& e) {
  std::ostringstream os;
  os.precision(12);
  for (const auto& [v, p] : e.profiles) {
    os << v.str() << ":";
    for (const auto& w : p.weights) {
      for (double x : w) os << (std::abs(x) < 5e-13 ? 0.0 : x) << ",";
      os << ";";
    }
  }
  os << "|";
  for (const auto& w : e.fallback.weights) {
    for (double x : w) os << (std::abs(x) < 5e-13 ? 0.0 : x) << ",";
    os << ";";
  }
  return os.str();
}

}  // namespace

SolveResult solve_ene(const GameFamily& f, const SolveOptions& opts) {
  SolveResult result;
  std::vector<std::string> lp_diag;
  const std::vector<Profile> base =
      game::nash_support_enumeration(f.fallback, &lp_diag);
  for (auto& d : lp_diag) {
    result.diagnostics.push_back("fallback enumeration: " + d);
  }
  if (base.empty()) {
    result.diagnostics.push_back(
        "no Nash equilibrium found in the fallback game; no ENE candidates");
    return result;
  }

  const int depth = f.depth;
  // Deterministic processing order: deepest views first, then toward the
  // modeler view.
  std::vector<View> order;
  for (int len = depth; len >= 0; --len) {
    for (const View& v : views_up_to(depth, f.num_players)) {
      if (v.length() == len) order.push_back(v);
    }
  }

  std::set<std::string> seen;
  int explored = 0;
  const int budget = std::max(opts.max_solutions * 64, 4096);

  std::function<void(size_t, ExtendedProfile&)> walk = [&](size_t pos,
                                                           ExtendedProfile& e) {
    if (static_cast<int>(result.solutions.size()) >= opts.max_solutions) {
      return;
    }
    if (pos == order.size()) {
      if (++explored > budget) return;
      if (is_ene(f, e, opts.tol)) {
        const std::string key = profile_key(e);
        if (seen.insert(key).second) result.solutions.push_back(e);
      }
      return;
    }
    const View& v = order[pos];
    const StrategicGame& g = f.at(v);
    Profile p;
    p.weights.resize(f.num_players);

    // Components pinned from one level deeper.
    for (int j = 1; j <= f.num_players; ++j) {
      const View child = extend(v, j);
      if (child == v) continue;
      const StrategicGame& cg = f.at(child);
      const Profile& pc = e.at(child);
      double lost = 0.0;
      p.weights[j - 1] = embed_weights(pc.weights[j - 1], cg.labels[j - 1],
                                       g.labels[j - 1], &lost);
      if (lost > opts.tol) return;  // family nesting broken; dead branch
    }

    if (v.empty()) {
      // Modeler view: both components are pinned; nothing to choose.
      e.profiles[v] = p;
      walk(pos + 1, e);
      e.profiles.erase(v);
      return;
    }

    const int i = v.last();  // owner whose component is free here
    Profile others = p;
    others.weights[i - 1].assign(g.num_strategies(i - 1), 0.0);
    others.weights[i - 1][0] = 1.0;  // placeholder, ignored by best_responses
    const game::BestReply br = best_responses(g, i - 1, others);

    std::vector<std::vector<double>> candidates;
    auto add_candidate = [&](std::vector<double> w) {
      for (const auto& c : candidates) {
        double d = 0.0;
        for (size_t k = 0; k < c.size(); ++k) {
          d = std::max(d, std::abs(c[k] - w[k]));
        }
        if (d < 1e-12) return;
      }
      candidates.push_back(std::move(w));
    };
    for (int s : br.strategies) {
      std::vector<double> w(g.num_strategies(i - 1), 0.0);
      w[s] = 1.0;
      add_candidate(std::move(w));
    }
    // Mixed candidates propagated from deeper views (for instance the
    // fallback equilibrium component) that also attain the best-reply value.
    std::vector<std::pair<const StrategicGame*, const Profile*>> sources;
    for (int j = 1; j <= f.num_players; ++j) {
      const View child = extend(v, j);
      if (child == v) continue;
      sources.push_back({&f.at(child), &e.at(child)});
    }
    sources.push_back({&f.fallback, &e.fallback});
    for (const auto& [sg, sp] : sources) {
      double lost = 0.0;
      std::vector<double> w = embed_weights(
          sp->weights[i - 1], sg->labels[i - 1], g.labels[i - 1], &lost);
      if (lost > opts.tol) continue;
      Profile joint = others;
      joint.weights[i - 1] = w;
      if (expected_payoff(g, joint)[i - 1] >= br.value - opts.tol) {
        add_candidate(std::move(w));
      }
    }

    for (const auto& w : candidates) {
      p.weights[i - 1] = w;
      e.profiles[v] = p;
      walk(pos + 1, e);
      e.profiles.erase(v);
      if (static_cast<int>(result.solutions.size()) >= opts.max_solutions ||
          explored > budget) {
        return;
      }
    }
  };

  for (const Profile& seed : base) {
    ExtendedProfile e;
    e.depth = depth;
    e.fallback = seed;
    walk(0, e);
    if (static_cast<int>(result.solutions.size()) >= opts.max_solutions ||
        explored > budget) {
      break;
    }
  }

  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const ExtendedProfile& a, const ExtendedProfile& b) {
              return profile_key(a) < profile_key(b);
            });
  if (result.solutions.empty()) {
    result.diagnostics.push_back(
        "no extended Nash equilibrium found after exploring " +
        std::to_string(explored) + " candidates");
  }
  return result;
}

}  // namespace qpfu::unaware
