// Copyright 2026 The postsim authors
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

#include "postsim/dense.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace postsim {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}

DenseState::DenseState(size_t n) : n_(n), amp_(size_t{1} << n, cplx(0, 0)) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("dense oracle capped at " + std::to_string(kMaxQubits) +
                                " qubits, requested " + std::to_string(n));
  }
  amp_[0] = 1.0;
}

DenseState DenseState::ket_pi8() {
  DenseState s(1);
  s.amp_[0] = std::cos(std::numbers::pi / 8);
  s.amp_[1] = std::sin(std::numbers::pi / 8);
  return s;
}

DenseState DenseState::ket_ipi4() {
  DenseState s(1);
  s.amp_[0] = kSqrtHalf;
  s.amp_[1] = cplx(0, kSqrtHalf);
  return s;
}

void DenseState::apply_h(size_t q) { apply_1q(q, hadamard_matrix()); }

void DenseState::apply_cnot(size_t c, size_t t) {
  if (c == t) {
    throw std::invalid_argument("cnot control equals target");
  }
  size_t cb = size_t{1} << c, tb = size_t{1} << t;
  for (size_t s = 0; s < amp_.size(); s++) {
    if ((s & cb) && !(s & tb)) {
      std::swap(amp_[s], amp_[s | tb]);
    }
  }
}

void DenseState::apply_pauli(const PauliProduct &p) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("Pauli width mismatch");
  }
  size_t xmask = 0, zmask = 0;
  for (size_t q = 0; q < n_; q++) {
    if (p.x.get(q)) {
      xmask |= size_t{1} << q;
    }
    if (p.z.get(q)) {
      zmask |= size_t{1} << q;
    }
  }
  static const cplx kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx global = kI[p.phase_k & 3];
  std::vector<cplx> out(amp_.size());
  for (size_t s = 0; s < amp_.size(); s++) {
    // X^x Z^z |s> = (-1)^{|s & z|} |s ^ x>
    cplx ph = (std::popcount(s & zmask) & 1) ? cplx(-1, 0) : cplx(1, 0);
    out[s ^ xmask] = global * ph * amp_[s];
  }
  amp_ = std::move(out);
}

void DenseState::apply_1q(size_t q, const Mat2 &m) {
  size_t qb = size_t{1} << q;
  for (size_t s = 0; s < amp_.size(); s++) {
    if (!(s & qb)) {
      cplx a0 = amp_[s], a1 = amp_[s | qb];
      amp_[s] = m[0] * a0 + m[1] * a1;
      amp_[s | qb] = m[2] * a0 + m[3] * a1;
    }
  }
}

void DenseState::apply_controlled_1q(size_t c, size_t t, const Mat2 &m) {
  if (c == t) {
    throw std::invalid_argument("control equals target");
  }
  size_t cb = size_t{1} << c, tb = size_t{1} << t;
  for (size_t s = 0; s < amp_.size(); s++) {
    if ((s & cb) && !(s & tb)) {
      cplx a0 = amp_[s], a1 = amp_[s | tb];
      amp_[s] = m[0] * a0 + m[1] * a1;
      amp_[s | tb] = m[2] * a0 + m[3] * a1;
    }
  }
}

void DenseState::reset_qubit(size_t q, cplx a0, cplx a1) {
  size_t qb = size_t{1} << q;
  for (size_t s = 0; s < amp_.size(); s++) {
    if (!(s & qb)) {
      // The qubit is unentangled and collapsed; one of the pair is zero.
      cplx v = amp_[s] + amp_[s | qb];
      amp_[s] = a0 * v;
      amp_[s | qb] = a1 * v;
    }
  }
}

namespace {
// Measurement operator matrix for a basis.
Mat2 basis_matrix(Basis b) {
  switch (b) {
    case Basis::Z:
      return pauli_matrix('Z');
    case Basis::X:
      return pauli_matrix('X');
    case Basis::Y:
      return pauli_matrix('Y');
  }
  throw std::logic_error("bad basis");
}
}  // namespace

double DenseState::outcome_probability(size_t q, Basis b, int sign) const {
  // <psi| (1 + sign*M)/2 |psi>
  Mat2 m = basis_matrix(b);
  size_t qb = size_t{1} << q;
  double p = 0;
  for (size_t s = 0; s < amp_.size(); s++) {
    if (!(s & qb)) {
      cplx a0 = amp_[s], a1 = amp_[s | qb];
      cplx m0 = m[0] * a0 + m[1] * a1;
      cplx m1 = m[2] * a0 + m[3] * a1;
      cplx p0 = 0.5 * (a0 + double(sign) * m0);
      cplx p1 = 0.5 * (a1 + double(sign) * m1);
      p += (std::conj(a0) * p0).real() + (std::conj(a1) * p1).real();
    }
  }
  return p;
}

double DenseState::project(size_t q, Basis b, int sign) {
  Mat2 m = basis_matrix(b);
  size_t qb = size_t{1} << q;
  for (size_t s = 0; s < amp_.size(); s++) {
    if (!(s & qb)) {
      cplx a0 = amp_[s], a1 = amp_[s | qb];
      cplx m0 = m[0] * a0 + m[1] * a1;
      cplx m1 = m[2] * a0 + m[3] * a1;
      amp_[s] = 0.5 * (a0 + double(sign) * m0);
      amp_[s | qb] = 0.5 * (a1 + double(sign) * m1);
    }
  }
  double w = norm_squared();
  if (w > 1e-15) {
    double inv = 1.0 / std::sqrt(w);
    for (auto &a : amp_) {
      a *= inv;
    }
  }
  return w;
}

double DenseState::norm_squared() const {
  double s = 0;
  for (const auto &a : amp_) {
    s += std::norm(a);
  }
  return s;
}

void DenseState::normalize() {
  double w = norm_squared();
  if (w <= 1e-300) {
    throw std::runtime_error("cannot normalize a zero state");
  }
  double inv = 1.0 / std::sqrt(w);
  for (auto &a : amp_) {
    a *= inv;
  }
}

double DenseState::fidelity(const DenseState &other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("dimension mismatch in fidelity");
  }
  cplx ip = 0;
  for (size_t s = 0; s < amp_.size(); s++) {
    ip += std::conj(other.amp_[s]) * amp_[s];
  }
  return std::norm(ip);
}

double DenseState::fidelity(const StabilizerGroupSpec &group) const {
  // Projector onto the joint eigenspace: prod_g (1 + g)/2. Expand as the
  // group average: 2^{-m} sum over all products of generators.
  auto canon = canonicalize(group);
  size_t m = canon.rank();
  if (canon.num_qubits() != n_ && m != 0) {
    throw std::invalid_argument("group width mismatch in fidelity");
  }
  double total = 0;
  for (size_t mask = 0; mask < (size_t{1} << m); mask++) {
    PauliProduct g = PauliProduct::identity(n_);
    for (size_t i = 0; i < m; i++) {
      if ((mask >> i) & 1) {
        g *= canon.generators[i];
      }
    }
    total += expectation(g);
  }
  return total / double(size_t{1} << m);
}

double DenseState::expectation(const PauliProduct &op) const {
  DenseState tmp = *this;
  tmp.apply_pauli(op);
  cplx ip = 0;
  for (size_t s = 0; s < amp_.size(); s++) {
    ip += std::conj(amp_[s]) * tmp.amp_[s];
  }
  return ip.real();
}

Mat2 rot_x(double t) {
  return {cplx(std::cos(t), 0), cplx(0, -std::sin(t)), cplx(0, -std::sin(t)),
          cplx(std::cos(t), 0)};
}

Mat2 rot_y(double t) {
  return {cplx(std::cos(t), 0), cplx(-std::sin(t), 0), cplx(std::sin(t), 0),
          cplx(std::cos(t), 0)};
}

Mat2 rot_z(double t) {
  return {cplx(std::cos(t), -std::sin(t)), 0, 0, cplx(std::cos(t), std::sin(t))};
}

Mat2 hadamard_matrix() {
  return {cplx(kSqrtHalf, 0), cplx(kSqrtHalf, 0), cplx(kSqrtHalf, 0), cplx(-kSqrtHalf, 0)};
}

Mat2 pauli_matrix(char which) {
  switch (which) {
    case 'I':
      return {1, 0, 0, 1};
    case 'X':
      return {0, 1, 1, 0};
    case 'Y':
      return {0, cplx(0, -1), cplx(0, 1), 0};
    case 'Z':
      return {1, 0, 0, -1};
  }
  throw std::invalid_argument("bad Pauli letter");
}

}  // namespace postsim
