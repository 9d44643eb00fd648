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

#include "qpfu/lp.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qpfu::game {

namespace {
constexpr double kEps = 1e-11;
}

LpResult simplex_max(const std::vector<std::vector<double>>& A,
                     const std::vector<double>& b,
                     const std::vector<double>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(A[i].size()) != n) {
      throw std::invalid_argument("simplex_max: ragged constraint matrix");
    }
    if (b[i] < 0.0) throw std::invalid_argument("simplex_max: b must be >= 0");
  }

  // Tableau: m rows of [A | I | b], objective row holds reduced costs.
  const int cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = b[i];
  }
  for (int j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: entering variable = smallest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t[m][j] < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;  // optimal

    // Leaving row: minimum ratio, ties broken by smallest basis variable.
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > kEps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best - kEps ||
            (ratio < best + kEps && (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return {};  // unbounded

    const double piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult r;
  r.optimal = true;
  r.value = t[m][cols - 1];
  r.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) r.x[basis[i]] = t[i][cols - 1];
  }
  r.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) r.dual[i] = t[m][n + i];
  return r;
}

}  // namespace qpfu::game
