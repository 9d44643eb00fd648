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

#ifndef QPFU_QLINALG_H_
#define QPFU_QLINALG_H_

#include <array>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

// Single-qubit linear algebra: 2x2 complex matrices, the standard gates and
// rotations, density-matrix evolution, expectation values, ZXZ Euler
// decomposition and global-phase-aware comparison. Everything is a value
// type; all functions are pure.
namespace qpfu::qlinalg {

using Complex = std::complex<double>;

// Construction-time tolerance for unitarity/Hermiticity/trace checks.
inline constexpr double kConstructTol = 1e-12;
// Default tolerance for comparisons of composed products.
inline constexpr double kCompareTol = 1e-9;

// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> a{};

  Complex& operator()(int r, int c) { return a[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return a[2 * r + c]; }

  static Mat2 zero() { return Mat2{}; }
  static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }

  Mat2 adjoint() const;
  Complex trace() const { return a[0] + a[3]; }
  Complex det() const { return a[0] * a[3] - a[1] * a[2]; }
  bool finite() const;
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);

// Frobenius norm of m.
double fro_norm(const Mat2& m);
// Frobenius distance between two matrices.
double fro_dist(const Mat2& x, const Mat2& y);

// Thrown when a value fails its structural invariant or a precondition.
struct InvariantError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A 2x2 unitary. Checks U U+ = 1 within kConstructTol on construction.
class Unitary2 {
 public:
  explicit Unitary2(const Mat2& m);
  const Mat2& mat() const { return m_; }
  Unitary2 adjoint() const;

 private:
  Mat2 m_;
};

// A single-qubit density matrix: Hermitian, unit trace, PSD.
class Density2 {
 public:
  explicit Density2(const Mat2& m);
  const Mat2& mat() const { return m_; }

 private:
  Mat2 m_;
};

// A 2x2 Hermitian observable.
class Hermitian2 {
 public:
  explicit Hermitian2(const Mat2& m);
  const Mat2& mat() const { return m_; }

 private:
  Mat2 m_;
};

// ZXZ Euler angles with an explicit global phase:
//   U = e^{i phase} Rz(beta) Rx(gamma) Rz(delta).
struct EulerZXZ {
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double phase = 0.0;
};

enum class Gate { I, X, Y, Z, H };

// The standard gate matrix; H = (1/sqrt 2) [[1,1],[1,-1]].
Unitary2 named_gate(Gate g);
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

// Rotation by theta about the unit axis (nx,ny,nz):
//   cos(theta/2) 1 - i sin(theta/2) (nx sx + ny sy + nz sz).
// Throws InvariantError unless |axis| = 1 within 1e-9.
Unitary2 rotation(const std::array<double, 3>& axis, double theta);
Unitary2 rotation_x(double theta);
Unitary2 rotation_y(double theta);
Unitary2 rotation_z(double theta);

// |0><0|.
Density2 ket0_density();
// Pure state a|0> + b|1> as a density matrix (normalizes).
Density2 pure_density(Complex a0, Complex a1);

// U rho U+.
Density2 evolve(const Density2& rho, const Unitary2& u);

// P = |0><0| - |1><1|.
Hermitian2 payoff_observable();

// tr(rho obs), real part (imaginary part is numerical noise).
double expectation(const Density2& rho, const Hermitian2& obs);

// Decomposes u as e^{i phase} Rz(beta) Rx(gamma) Rz(delta). The determinant
// is normalized to 1 first and the phase reported separately. In the gimbal
// cases gamma in {0, pi} only beta+delta (resp. beta-delta) is determined;
// delta is set to 0 there so results are reproducible.
EulerZXZ euler_zxz(const Unitary2& u);
Mat2 euler_recompose(const EulerZXZ& e);

// True iff a = e^{i phi} b for some phi, within tol in Frobenius norm. The
// candidate phi comes from the entry ratio at b's largest-magnitude entry.
// Two zero matrices compare equal.
bool equal_up_to_phase(const Mat2& x, const Mat2& y, double tol = kCompareTol);

// Bloch vector (tr(rho sx), tr(rho sy), tr(rho sz)).
std::array<double, 3> bloch(const Density2& rho);

// Haar-distributed random unitary via Gaussian matrix + Gram-Schmidt with
// the R-diagonal phase correction.
Unitary2 haar_unitary(std::mt19937_64& rng);

}  // namespace qpfu::qlinalg

#endif  // QPFU_QLINALG_H_
