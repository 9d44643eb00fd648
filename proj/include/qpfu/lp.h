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

#ifndef QPFU_LP_H_
#define QPFU_LP_H_

#include <vector>

namespace qpfu::game {

struct LpResult {
  bool optimal = false;      // false means unbounded or failure
  double value = 0.0;
  std::vector<double> x;     // primal solution
  std::vector<double> dual;  // dual prices, one per constraint row
};

// Dense simplex with Bland's rule for
//   max c.x  subject to  A x <= b,  x >= 0,
// where b >= 0 (the slack basis is the starting vertex). Matrices at game
// scale only; no sparsity, no Phase I.
LpResult simplex_max(const std::vector<std::vector<double>>& A,
                     const std::vector<double>& b,
                     const std::vector<double>& c);

}  // namespace qpfu::game

#endif  // QPFU_LP_H_
