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

#ifndef QPFU_SERIAL_H_
#define QPFU_SERIAL_H_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qpfu/gamecore.h"
#include "qpfu/unaware.h"

// JSON document formats. Key order is fixed (ordered_json) so reports with
// identical inputs and seeds serialize identically.
//
// Strategic game, matrix form (two players):
//   {"type":"matrix","name":...,"strategies":[[rows],[cols]],
//    "payoffs":[[[u1,u2],...],...]}
// Strategic game, quantum form (gate expressions; see gate_expr.h):
//   {"type":"quantum","variant":"QQ","player1":[["H","H"],...],
//    "player2":["I","X","Z"]}
// Named stock game:
//   {"preset":"classical"}
// Extensive game:
//   {"type":"extensive","players":2,"root":{node}} where a decision node is
//   {"player":1,"info_set":"1.1","actions":[...],"children":[...]} and a
//   leaf is {"payoffs":[...]}.
// Family:
//   {"players":2,"depth":2,"views":[{"view":"","game":{...}},...],
//    "otherwise":{...}}
namespace qpfu::serial {

using Json = nlohmann::ordered_json;

// Input-document failure: syntax or schema or axiom violations.
struct DocError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json parse_text(const std::string& text);      // throws DocError
Json load_file(const std::string& path);       // throws DocError

game::StrategicGame game_from_json(const Json& j);
Json game_to_json(const game::StrategicGame& g);

game::ExtensiveGame extensive_from_json(const Json& j);

// Parses and validates a family document; Def-1 violations raise DocError
// with the itemized report in the message.
unaware::GameFamily family_from_json(const Json& j);
unaware::GameFamily family_from_text(const std::string& text);
Json family_to_json(const unaware::GameFamily& f);

// Parses a family without the axiom check (for `validate`, which reports).
unaware::GameFamily family_from_json_unchecked(const Json& j);

Json profile_to_json(const game::StrategicGame& g, const game::Profile& p);
Json extended_profile_to_json(const unaware::GameFamily& f,
                              const unaware::ExtendedProfile& e);
Json validation_to_json(const unaware::ValidationReport& rep);

// FNV-1a hash of a byte string, rendered as "fnv1a:<hex>".
std::string digest(const std::string& bytes);

}  // namespace qpfu::serial

#endif  // QPFU_SERIAL_H_
