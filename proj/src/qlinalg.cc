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

#include "qpfu/qlinalg.h"

#include <cmath>

namespace qpfu::qlinalg {

namespace {
constexpr Complex kI{0.0, 1.0};
}  // namespace

Mat2 Mat2::adjoint() const {
  Mat2 r;
  r.a[0] = std::conj(a[0]);
  r.a[1] = std::conj(a[2]);
  r.a[2] = std::conj(a[1]);
  r.a[3] = std::conj(a[3]);
  return r;
}

bool Mat2::finite() const {
  for (const Complex& z : a) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a[0] = x.a[0] * y.a[0] + x.a[1] * y.a[2];
  r.a[1] = x.a[0] * y.a[1] + x.a[1] * y.a[3];
  r.a[2] = x.a[2] * y.a[0] + x.a[3] * y.a[2];
  r.a[3] = x.a[2] * y.a[1] + x.a[3] * y.a[3];
  return r;
}

Mat2 operator*(Complex s, const Mat2& x) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[i] = s * x.a[i];
  return r;
}

double fro_norm(const Mat2& m) {
  double s = 0.0;
  for (const Complex& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

double fro_dist(const Mat2& x, const Mat2& y) { return fro_norm(x - y); }

Unitary2::Unitary2(const Mat2& m) : m_(m) {
  if (!m.finite()) throw InvariantError("Unitary2: non-finite entries");
  if (fro_dist(m * m.adjoint(), Mat2::identity()) > kConstructTol) {
    throw InvariantError("Unitary2: U U+ != 1 within 1e-12");
  }
}

Unitary2 Unitary2::adjoint() const { return Unitary2(m_.adjoint()); }

Density2::Density2(const Mat2& m) : m_(m) {
  if (!m.finite()) throw InvariantError("Density2: non-finite entries");
  if (fro_dist(m, m.adjoint()) > kConstructTol) {
    throw InvariantError("Density2: not Hermitian within 1e-12");
  }
  if (std::abs(m.trace() - Complex{1.0, 0.0}) > kConstructTol) {
    throw InvariantError("Density2: trace != 1 within 1e-12");
  }
  // Eigenvalues of [[a,b],[conj(b),c]] are (a+c)/2 +- sqrt(((a-c)/2)^2+|b|^2).
  const double ar = m.a[0].real(), cr = m.a[3].real();
  const double mid = 0.5 * (ar + cr);
  const double rad = std::sqrt(0.25 * (ar - cr) * (ar - cr) + std::norm(m.a[1]));
  if (mid - rad < -kConstructTol) {
    throw InvariantError("Density2: negative eigenvalue beyond 1e-12");
  }
}

Hermitian2::Hermitian2(const Mat2& m) : m_(m) {
  if (!m.finite()) throw InvariantError("Hermitian2: non-finite entries");
  if (fro_dist(m, m.adjoint()) > kConstructTol) {
    throw InvariantError("Hermitian2: not Hermitian within 1e-12");
  }
}

Mat2 pauli_x() { return Mat2{{0.0, 1.0, 1.0, 0.0}}; }
Mat2 pauli_y() { return Mat2{{0.0, -kI, kI, 0.0}}; }
Mat2 pauli_z() { return Mat2{{1.0, 0.0, 0.0, -1.0}}; }

Unitary2 named_gate(Gate g) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (g) {
    case Gate::I:
      return Unitary2(Mat2::identity());
    case Gate::X:
      return Unitary2(pauli_x());
    case Gate::Y:
      return Unitary2(pauli_y());
    case Gate::Z:
      return Unitary2(pauli_z());
    case Gate::H:
      return Unitary2(Mat2{{s, s, s, -s}});
  }
  throw InvariantError("named_gate: unknown gate");
}

Unitary2 rotation(const std::array<double, 3>& axis, double theta) {
  const double n =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(n - 1.0) > 1e-9) {
    throw InvariantError("rotation: axis is not a unit vector");
  }
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Mat2 gen = Complex{axis[0], 0.0} * pauli_x();
  gen = gen + Complex{axis[1], 0.0} * pauli_y();
  gen = gen + Complex{axis[2], 0.0} * pauli_z();
  Mat2 m = Complex{c, 0.0} * Mat2::identity() - (kI * s) * gen;
  return Unitary2(m);
}

Unitary2 rotation_x(double theta) { return rotation({1.0, 0.0, 0.0}, theta); }
Unitary2 rotation_y(double theta) { return rotation({0.0, 1.0, 0.0}, theta); }
Unitary2 rotation_z(double theta) { return rotation({0.0, 0.0, 1.0}, theta); }

Density2 ket0_density() { return Density2(Mat2{{1.0, 0.0, 0.0, 0.0}}); }

Density2 pure_density(Complex a0, Complex a1) {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (n == 0.0) throw InvariantError("pure_density: zero vector");
  a0 /= n;
  a1 /= n;
  Mat2 m;
  m.a[0] = a0 * std::conj(a0);
  m.a[1] = a0 * std::conj(a1);
  m.a[2] = a1 * std::conj(a0);
  m.a[3] = a1 * std::conj(a1);
  return Density2(m);
}

Density2 evolve(const Density2& rho, const Unitary2& u) {
  return Density2(u.mat() * rho.mat() * u.mat().adjoint());
}

Hermitian2 payoff_observable() { return Hermitian2(pauli_z()); }

double expectation(const Density2& rho, const Hermitian2& obs) {
  return (rho.mat() * obs.mat()).trace().real();
}

EulerZXZ euler_zxz(const Unitary2& u) {
  // Split off the global phase so the residue has determinant 1.
  const Complex d = u.mat().det();
  const double phase = 0.5 * std::arg(d);
  Mat2 su = std::exp(-kI * phase) * u.mat();
  // su = [[a, b], [-conj(b), conj(a)]].
  const Complex a = su.a[0], b = su.a[1];
  const double ca = std::abs(a), sb = std::abs(b);

  EulerZXZ e;
  e.phase = phase;
  e.gamma = 2.0 * std::atan2(sb, ca);
  if (sb < 1e-12) {
    // Rz(beta) Rz(delta) only: fix delta = 0.
    e.beta = -2.0 * std::arg(a);
    e.delta = 0.0;
  } else if (ca < 1e-12) {
    // Rz(beta) Rx(pi) Rz(delta): only beta - delta matters.
    e.beta = -2.0 * std::arg(b) - M_PI;
    e.delta = 0.0;
  } else {
    const double sum = -2.0 * std::arg(a);           // beta + delta
    const double diff = -2.0 * std::arg(b) - M_PI;   // beta - delta
    e.beta = 0.5 * (sum + diff);
    e.delta = 0.5 * (sum - diff);
  }
  return e;
}

Mat2 euler_recompose(const EulerZXZ& e) {
  Mat2 m = rotation_z(e.beta).mat() * rotation_x(e.gamma).mat() *
           rotation_z(e.delta).mat();
  return std::exp(kI * e.phase) * m;
}

bool equal_up_to_phase(const Mat2& x, const Mat2& y, double tol) {
  if (tol <= 0.0) throw InvariantError("equal_up_to_phase: tol must be > 0");
  int k = 0;
  double best = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(y.a[i]) > best) {
      best = std::abs(y.a[i]);
      k = i;
    }
  }
  if (best == 0.0) return fro_norm(x) < tol;
  Complex phi = x.a[k] / y.a[k];
  const double m = std::abs(phi);
  phi = (m == 0.0) ? Complex{1.0, 0.0} : phi / m;
  return fro_dist(x, phi * y) < tol;
}

std::array<double, 3> bloch(const Density2& rho) {
  const Mat2& m = rho.mat();
  return {(m * pauli_x()).trace().real(), (m * pauli_y()).trace().real(),
          (m * pauli_z()).trace().real()};
}

Unitary2 haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<Complex, 2> c0{Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}};
  std::array<Complex, 2> c1{Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}};
  const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0[0] /= n0;
  c0[1] /= n0;
  const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1[0] -= proj * c0[0];
  c1[1] -= proj * c0[1];
  const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1[0] /= n1;
  c1[1] /= n1;
  Mat2 m;
  m(0, 0) = c0[0];
  m(1, 0) = c0[1];
  m(0, 1) = c1[0];
  m(1, 1) = c1[1];
  return Unitary2(m);
}

}  // namespace qpfu::qlinalg
