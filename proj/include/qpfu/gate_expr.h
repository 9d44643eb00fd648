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

#ifndef QPFU_GATE_EXPR_H_
#define QPFU_GATE_EXPR_H_

#include <stdexcept>
#include <string>

#include "qpfu/qlinalg.h"

// Tiny expression language for single-qubit unitaries, used everywhere a
// gate can be written in a document or on the command line:
//
//   gate     := factor ("*" factor)*
//   factor   := "I" | "X" | "Y" | "Z" | "H"
//             | "Rx"(angle) | "Ry"(angle) | "Rz"(angle)
//             | "Rn"(angle; num, num, num)
//             | "V1"(angle, angle) | "V2"(angle, angle)
//             | "W2"(angle, angle, angle)
//             | "phase"(angle)
//   angle    := arithmetic over decimal literals and "pi" with + - * / ()
//
// "*" is the matrix product, left to right ("A*B" applies B first to a ket).
namespace qpfu::gatexpr {

struct ParseError : std::runtime_error {
  int position;
  ParseError(const std::string& what, int pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Parses an expression; throws ParseError on bad syntax and
// qlinalg::InvariantError if a factor violates its parameter domain.
qlinalg::Unitary2 parse_gate(const std::string& text);

// Formats an angle so it parses back to the same double ("pi"-multiples of
// simple fractions print symbolically).
std::string format_angle(double radians);

}  // namespace qpfu::gatexpr

#endif  // QPFU_GATE_EXPR_H_
