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

#include "qpfu/serial.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "qpfu/gate_expr.h"
#include "qpfu/pennyflip.h"

namespace qpfu::serial {

using game::GameError;
using game::StrategicGame;

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocError(std::string("JSON syntax error: ") + e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

namespace {

std::string require_string(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw DocError("expected string field '" + key + "'");
  }
  return j[key].get<std::string>();
}

StrategicGame matrix_game_from_json(const Json& j) {
  StrategicGame g;
  g.name = j.value("name", std::string("game"));
  g.num_players = 2;
  if (!j.contains("strategies") || !j["strategies"].is_array() ||
      j["strategies"].size() != 2) {
    throw DocError("matrix game: 'strategies' must list both players' labels");
  }
  g.labels.resize(2);
  for (int p = 0; p < 2; ++p) {
    for (const auto& s : j["strategies"][p]) {
      g.labels[p].push_back(s.get<std::string>());
    }
  }
  const int m = g.num_strategies(0), n = g.num_strategies(1);
  if (!j.contains("payoffs") || static_cast<int>(j["payoffs"].size()) != m) {
    throw DocError("matrix game: 'payoffs' must have one row per strategy");
  }
  g.payoffs.assign(2, std::vector<double>(m * n, 0.0));
  for (int i = 0; i < m; ++i) {
    const auto& row = j["payoffs"][i];
    if (static_cast<int>(row.size()) != n) {
      throw DocError("matrix game: payoff row length mismatch");
    }
    for (int c = 0; c < n; ++c) {
      const auto& cell = row[c];
      if (!cell.is_array() || cell.size() != 2) {
        throw DocError("matrix game: each cell is a [u1,u2] pair");
      }
      g.payoffs[0][i * n + c] = cell[0].get<double>();
      g.payoffs[1][i * n + c] = cell[1].get<double>();
    }
  }
  try {
    g.validate();
  } catch (const GameError& e) {
    throw DocError(std::string("matrix game: ") + e.what());
  }
  return g;
}

StrategicGame quantum_game_from_json(const Json& j) {
  const std::string variant = require_string(j, "variant");
  penny::VariantTag tag;
  if (variant == "CC") {
    tag = penny::VariantTag::CC;
  } else if (variant == "QC") {
    tag = penny::VariantTag::QC;
  } else if (variant == "CQ") {
    tag = penny::VariantTag::CQ;
  } else if (variant == "QQ") {
    tag = penny::VariantTag::QQ;
  } else {
    throw DocError("quantum game: variant must be CC, QC, CQ or QQ");
  }
  if (!j.contains("player1") || !j.contains("player2")) {
    throw DocError("quantum game: need 'player1' and 'player2' gate lists");
  }
  std::vector<std::pair<penny::NamedUnitary, penny::NamedUnitary>> set1;
  std::vector<penny::NamedUnitary> set2;
  try {
    for (const auto& pair : j["player1"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw DocError("quantum game: player1 entries are [first,third]");
      }
      const std::string e1 = pair[0].get<std::string>();
      const std::string e2 = pair[1].get<std::string>();
      set1.push_back({{e1, gatexpr::parse_gate(e1)},
                      {e2, gatexpr::parse_gate(e2)}});
    }
    for (const auto& expr : j["player2"]) {
      const std::string e = expr.get<std::string>();
      set2.push_back({e, gatexpr::parse_gate(e)});
    }
    StrategicGame g = penny::discretize(tag, set1, set2);
    g.name = j.value("name", std::string("quantum"));
    return g;
  } catch (const gatexpr::ParseError& e) {
    throw DocError(std::string("quantum game: ") + e.what());
  } catch (const qlinalg::InvariantError& e) {
    throw DocError(std::string("quantum game: ") + e.what());
  }
}

game::ExtensiveGame::Node node_from_json(const Json& j, int num_players) {
  game::ExtensiveGame::Node node;
  if (j.contains("payoffs")) {
    for (const auto& v : j["payoffs"]) node.payoffs.push_back(v.get<double>());
    if (static_cast<int>(node.payoffs.size()) != num_players) {
      throw DocError("extensive game: leaf payoff count mismatch");
    }
    return node;
  }
  if (!j.contains("player") || !j["player"].is_number_integer()) {
    throw DocError("extensive game: node needs 'player' or 'payoffs'");
  }
  node.player = j["player"].get<int>();
  node.info_set = require_string(j, "info_set");
  if (!j.contains("actions") || !j.contains("children") ||
      j["actions"].size() != j["children"].size()) {
    throw DocError("extensive game: actions/children mismatch");
  }
  for (const auto& a : j["actions"]) {
    node.actions.push_back(a.get<std::string>());
  }
  for (const auto& c : j["children"]) {
    node.children.push_back(node_from_json(c, num_players));
  }
  return node;
}

}  // namespace

StrategicGame game_from_json(const Json& j) {
  if (!j.is_object()) throw DocError("game: expected an object");
  if (j.contains("preset")) {
    const std::string name = require_string(j, "preset");
    try {
      return penny::named_game(name);
    } catch (const GameError& e) {
      throw DocError(e.what());
    }
  }
  const std::string type = require_string(j, "type");
  if (type == "matrix") return matrix_game_from_json(j);
  if (type == "quantum") return quantum_game_from_json(j);
  throw DocError("game: unknown type '" + type + "'");
}

Json game_to_json(const StrategicGame& g) {
  if (g.num_players != 2) {
    throw DocError("game_to_json: only two-player games serialize");
  }
  Json j;
  j["type"] = "matrix";
  j["name"] = g.name;
  j["strategies"] = Json::array({g.labels[0], g.labels[1]});
  Json rows = Json::array();
  const int n = g.num_strategies(1);
  for (int i = 0; i < g.num_strategies(0); ++i) {
    Json row = Json::array();
    for (int c = 0; c < n; ++c) {
      row.push_back(
          Json::array({g.payoffs[0][i * n + c], g.payoffs[1][i * n + c]}));
    }
    rows.push_back(std::move(row));
  }
  j["payoffs"] = std::move(rows);
  return j;
}

game::ExtensiveGame extensive_from_json(const Json& j) {
  if (require_string(j, "type") != "extensive") {
    throw DocError("extensive game: type must be 'extensive'");
  }
  game::ExtensiveGame ext;
  ext.name = j.value("name", std::string("extensive"));
  if (!j.contains("players") || !j["players"].is_number_integer()) {
    throw DocError("extensive game: missing integer 'players'");
  }
  ext.num_players = j["players"].get<int>();
  if (!j.contains("root")) throw DocError("extensive game: missing 'root'");
  ext.root = node_from_json(j["root"], ext.num_players);
  return ext;
}

unaware::GameFamily family_from_json_unchecked(const Json& j) {
  if (!j.is_object()) throw DocError("family: expected an object");
  if (!j.contains("players") || !j["players"].is_number_integer()) {
    throw DocError("family: missing integer 'players'");
  }
  const int players = j["players"].get<int>();
  if (players < 1 || players > 9) {
    throw DocError("family: players must be in 1..9");
  }
  if (!j.contains("depth") || !j["depth"].is_number_integer()) {
    throw DocError("family: missing integer 'depth'");
  }
  const int depth = j["depth"].get<int>();
  if (depth < 0 || depth > 16) throw DocError("family: depth out of range");
  if (!j.contains("otherwise")) throw DocError("family: missing 'otherwise'");

  std::vector<std::pair<std::string, StrategicGame>> cases;
  if (j.contains("views")) {
    for (const auto& entry : j["views"]) {
      const std::string text = require_string(entry, "view");
      try {
        unaware::parse_view(text, players);
      } catch (const GameError& e) {
        throw DocError(e.what());
      }
      if (!entry.contains("game")) {
        throw DocError("family: view '" + text + "' has no game");
      }
      cases.push_back({text, game_from_json(entry["game"])});
    }
  }
  try {
    unaware::GameFamily f = unaware::make_family(
        j.value("name", std::string("family")), players, depth, cases,
        game_from_json(j["otherwise"]));
    return f;
  } catch (const GameError& e) {
    throw DocError(e.what());
  }
}

unaware::GameFamily family_from_json(const Json& j) {
  unaware::GameFamily f = family_from_json_unchecked(j);
  const unaware::ValidationReport rep = unaware::validate_family(f);
  if (!rep.valid()) {
    std::ostringstream msg;
    msg << "family violates the unawareness axioms:";
    for (const auto& issue : rep.issues) {
      msg << "\n  property " << issue.property << " at view '" << issue.view
          << "': " << issue.message;
    }
    throw DocError(msg.str());
  }
  return f;
}

unaware::GameFamily family_from_text(const std::string& text) {
  return family_from_json(parse_text(text));
}

Json family_to_json(const unaware::GameFamily& f) {
  Json j;
  j["name"] = f.name;
  j["players"] = f.num_players;
  j["depth"] = f.depth;
  Json views = Json::array();
  for (const auto& [v, g] : f.games) {
    Json entry;
    entry["view"] = v.str();
    entry["game"] = game_to_json(g);
    views.push_back(std::move(entry));
  }
  j["views"] = std::move(views);
  j["otherwise"] = game_to_json(f.fallback);
  return j;
}

Json profile_to_json(const StrategicGame& g, const game::Profile& p) {
  Json j;
  for (int player = 0; player < g.num_players; ++player) {
    Json weights;
    for (int s = 0; s < g.num_strategies(player); ++s) {
      const double w = p.weights[player][s];
      if (std::abs(w) > 1e-12) weights[g.labels[player][s]] = w;
    }
    j["player" + std::to_string(player + 1)] = std::move(weights);
  }
  return j;
}

Json extended_profile_to_json(const unaware::GameFamily& f,
                              const unaware::ExtendedProfile& e) {
  Json j;
  Json views;
  for (const auto& [v, p] : e.profiles) {
    views[v.str().empty() ? "" : v.str()] = profile_to_json(f.at(v), p);
  }
  j["views"] = std::move(views);
  j["otherwise"] = profile_to_json(f.fallback, e.fallback);
  return j;
}

Json validation_to_json(const unaware::ValidationReport& rep) {
  Json j;
  j["valid"] = rep.valid();
  Json issues = Json::array();
  for (const auto& issue : rep.issues) {
    Json item;
    item["property"] = issue.property;
    item["view"] = issue.view;
    item["message"] = issue.message;
    issues.push_back(std::move(item));
  }
  j["issues"] = std::move(issues);
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << h;
  return os.str();
}

}  // namespace qpfu::serial
