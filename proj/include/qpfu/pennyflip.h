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

#ifndef QPFU_PENNYFLIP_H_
#define QPFU_PENNYFLIP_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpfu/gamecore.h"
#include "qpfu/qlinalg.h"
#include "qpfu/unaware.h"

// The quantum penny-flip games: the classical 4x2 core, sequential
// single-qubit play (player 1 moves first and third, player 2 second) with
// payoff tr(rho_f P), the parametric best-reply families, their numerical
// verification suites, finite discretizations, and the stock game families
// used by the CLI.
namespace qpfu::penny {

using qlinalg::Unitary2;

enum class VariantTag { CC, QC, CQ, QQ };

// The classical penny-flip game: player 1 picks a pair over {I, X} (first
// and third move), player 2 one gate; payoffs +-1, zero-sum.
game::StrategicGame classical_matrix();

// Payoffs (tr(rho_f P), -tr(rho_f P)) for rho_f = u3 u2 u1 |0><0| u1+u2+u3+.
std::pair<double, double> qq_payoff(const Unitary2& u1, const Unitary2& u2,
                                    const Unitary2& u3);

// Player 1's payoff against the mixed classical reply (p, 1-p) over {I, X}.
double qc_payoff(const Unitary2& u1, const Unitary2& u3, double p);

// Player 1 mixes over the classical pairs {II, IX, XI, XX} (in that order);
// player 2 plays a unitary. Returns player 1's payoff.
double cq_payoff(const std::array<double, 4>& mix, const Unitary2& u2);

// Closed form (2 cos^2(gamma/2) - 1)(1 - 2 p2 - 2 p3), the payoff when
// player 2 plays any phase * Rz * Ry(gamma) * Rz sandwich.
double cq_payoff_formula(double gamma, double p2, double p3);

// Parameter families of the best-reply lemmas. Constructors realize the
// printed matrices, global phases included; payoff-level comparisons should
// go through equal_up_to_phase.
struct ParamV1 {
  double a = 0.0;  // in {-pi, 0}
  double gamma = 0.0;
};
struct ParamV3 {
  double alpha = 0.0;
  ParamV1 source;
};
struct ParamV2 {
  double alpha = 0.0;
  double gamma = 0.0;
};
struct ParamW2 {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
};

Unitary2 v1(const ParamV1& p);  // maps |0> to |+> (a=0) or |-> (a=-pi)
Unitary2 v3(const ParamV3& p);  // Rz(alpha) V1+
Unitary2 v2(const ParamV2& p);  // swaps |+><+| and |-><-|
Unitary2 w2(const ParamW2& p);  // the equalizing reply to classical pairs

struct VerifyReport {
  std::string check;
  long samples = 0;
  std::uint64_t seed = 0;
  double max_error = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// (V1, V3) guarantee: both fixed-point identities and payoff 1 against the
// whole mixed-reply grid, over seeded samples of (a, gamma, alpha).
VerifyReport verify_v1v3(int samples, std::uint64_t seed, double tol = 1e-9);
// V2 counters sampled optimal (V1, V3) pairs: final payoff -1.
VerifyReport verify_v2(int samples, std::uint64_t seed, double tol = 1e-9);
// W2 equalizes every pure classical pair to payoff 0, and the general
// Rz Ry Rz sandwich matches cq_payoff_formula to 1e-10.
VerifyReport verify_w2(int samples, std::uint64_t seed, double tol = 1e-9);

// -sin(beta) sin(delta): the modeler-view payoff when H-pairs meet W2.
double qq_vs_w2_payoff(double beta, double delta);
// The same quantity computed from first principles with V1 = V3 = H.
double qq_vs_w2_direct(double alpha, double beta, double delta);

// The 9x3 game on S1 = {I,X,H}^2, S2 = {I,X,Z}.
game::StrategicGame example3_matrix();

// The 9x2 description that (misleadingly) merges both awareness levels.
// Computed from first principles and compared against its published form;
// disagreements are reported, not patched.
struct MisleadingCell {
  std::string row, col;
  std::pair<double, double> computed;
  std::pair<double, double> printed;
};
struct MisleadingReport {
  game::StrategicGame computed;   // payoffs from qq_payoff
  game::StrategicGame printed;    // the published table
  std::vector<MisleadingCell> mismatches;
  int cells_compared = 0;
};
MisleadingReport misleading_matrix();

// A unitary with a display name (names double as gate expressions).
struct NamedUnitary {
  std::string name;
  Unitary2 u;
};

// Finite zero-sum embedding of a penny-flip variant: player 1's strategies
// are (first move, third move) pairs, player 2's are single gates; labels
// concatenate gate names. The variant tag enforces which side must be
// classical ({I, X} matrices).
game::StrategicGame discretize(
    VariantTag tag,
    const std::vector<std::pair<NamedUnitary, NamedUnitary>>& gate_set1,
    const std::vector<NamedUnitary>& gate_set2);

// The default gate grid used to embed the continuous games at desk scale:
// {I, X, Z, H, V1(0,-pi/2), V2(0,-pi/2), W2(0,pi/2,pi/2)}. The lemma
// families prove these representatives realize the equilibrium-relevant
// best replies, so the finite embedding preserves the ENE structure.
std::vector<NamedUnitary> default_gate_grid();

enum class Preset {
  kExample1,
  kExample2G,
  kExample2GPrime,
  kExample3,
  kProp3,
  kProp4,
  kFig2Message,
};

// Stock strategic games referenced by name in family documents.
game::StrategicGame named_game(const std::string& name);
std::vector<std::string> named_game_names();

unaware::GameFamily preset_family(Preset which);
unaware::GameFamily preset_family(const std::string& name);
std::vector<std::string> preset_family_names();

}  // namespace qpfu::penny

#endif  // QPFU_PENNYFLIP_H_
