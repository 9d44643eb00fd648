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

#include "qpfu/gate_expr.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qpfu/pennyflip.h"

namespace qpfu::gatexpr {

using qlinalg::Complex;
using qlinalg::Mat2;
using qlinalg::Unitary2;

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Unitary2 parse() {
    Mat2 m = factor().mat();
    skip_ws();
    while (!done() && peek() == '*') {
      ++pos_;
      m = m * factor().mat();
      skip_ws();
    }
    if (!done()) fail("unexpected trailing input");
    return Unitary2(m);
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, static_cast<int>(pos_));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a gate name");
    return s_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // angle := term (("+"|"-") term)*
  double angle() {
    double v = term();
    while (true) {
      skip_ws();
      if (!done() && peek() == '+') {
        ++pos_;
        v += term();
      } else if (!done() && peek() == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    while (true) {
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        v *= unary();
      } else if (!done() && peek() == '/') {
        ++pos_;
        const double d = unary();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    skip_ws();
    if (!done() && peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (!done() && peek() == '+') {
      ++pos_;
      return unary();
    }
    return atom();
  }

  double atom() {
    skip_ws();
    if (done()) fail("expected a number");
    if (peek() == '(') {
      ++pos_;
      const double v = angle();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::string name = ident();
      if (name == "pi") return M_PI;
      fail("unknown constant '" + name + "'");
    }
    size_t start = pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                       peek() == '.' || peek() == 'e' || peek() == 'E' ||
                       ((peek() == '+' || peek() == '-') && pos_ > start &&
                        (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    try {
      return std::stod(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("malformed number");
    }
  }

  std::vector<double> args(int count) {
    expect('(');
    std::vector<double> out;
    for (int k = 0; k < count; ++k) {
      if (k) {
        skip_ws();
        if (!done() && (peek() == ',' || peek() == ';')) {
          ++pos_;
        } else {
          fail("expected ',' between arguments");
        }
      }
      out.push_back(angle());
    }
    expect(')');
    return out;
  }

  Unitary2 factor() {
    const std::string name = ident();
    if (name == "I") return qlinalg::named_gate(qlinalg::Gate::I);
    if (name == "X") return qlinalg::named_gate(qlinalg::Gate::X);
    if (name == "Y") return qlinalg::named_gate(qlinalg::Gate::Y);
    if (name == "Z") return qlinalg::named_gate(qlinalg::Gate::Z);
    if (name == "H") return qlinalg::named_gate(qlinalg::Gate::H);
    if (name == "Rx") return qlinalg::rotation_x(args(1)[0]);
    if (name == "Ry") return qlinalg::rotation_y(args(1)[0]);
    if (name == "Rz") return qlinalg::rotation_z(args(1)[0]);
    if (name == "Rn") {
      const auto a = args(4);  // theta; nx, ny, nz
      return qlinalg::rotation({a[1], a[2], a[3]}, a[0]);
    }
    if (name == "V1") {
      const auto a = args(2);
      return penny::v1({a[0], a[1]});
    }
    if (name == "V2") {
      const auto a = args(2);
      return penny::v2({a[0], a[1]});
    }
    if (name == "W2") {
      const auto a = args(3);
      return penny::w2({a[0], a[1], a[2]});
    }
    if (name == "phase") {
      const double phi = args(1)[0];
      return Unitary2(std::exp(Complex{0.0, phi}) * Mat2::identity());
    }
    fail("unknown gate '" + name + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Unitary2 parse_gate(const std::string& text) { return Parser(text).parse(); }

std::string format_angle(double radians) {
  // Try small rational multiples of pi first.
  for (int den = 1; den <= 12; ++den) {
    const double scaled = radians * den / M_PI;
    const double near = std::round(scaled);
    if (std::abs(near) <= 24 && std::abs(scaled - near) < 1e-12 &&
        near != 0.0) {
      const int num = static_cast<int>(near);
      std::string s;
      if (num == 1) {
        s = "pi";
      } else if (num == -1) {
        s = "-pi";
      } else {
        s = std::to_string(num) + "*pi";
      }
      if (den > 1) s += "/" + std::to_string(den);
      return s;
    }
  }
  if (radians == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", radians);
  return buf;
}

}  // namespace qpfu::gatexpr
