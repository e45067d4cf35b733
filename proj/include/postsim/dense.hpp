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

#ifndef POSTSIM_DENSE_HPP
#define POSTSIM_DENSE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "postsim/pauli.hpp"
#include "postsim/tableau.hpp"

namespace postsim {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major 2x2

/// Brute-force state-vector simulator. Hard-capped at 12 qubits: every magic
/// gadget and level-1 check fits, anything larger is verified structurally on
/// the tableau side instead.
class DenseState {
 public:
  static constexpr size_t kMaxQubits = 12;

  explicit DenseState(size_t n);  // |0...0>

  size_t num_qubits() const { return n_; }
  const std::vector<cplx> &amplitudes() const { return amp_; }

  static DenseState ket_pi8();   // cos(pi/8)|0> + sin(pi/8)|1>
  static DenseState ket_ipi4();  // (|0> + i|1>)/sqrt(2)

  void apply_h(size_t q);
  void apply_cnot(size_t c, size_t t);
  void apply_pauli(const PauliProduct &p);
  void apply_1q(size_t q, const Mat2 &m);
  void apply_controlled_1q(size_t c, size_t t, const Mat2 &m);

  /// Overwrites qubit q (which must be unentangled, e.g. just collapsed)
  /// with amplitudes (a0, a1).
  void reset_qubit(size_t q, cplx a0, cplx a1);

  /// Born probability of the `sign` outcome when measuring basis b on q.
  double outcome_probability(size_t q, Basis b, int sign) const;

  /// Projects onto the outcome and returns its pre-normalization weight.
  /// Normalizes afterwards unless the weight is (near) zero.
  double project(size_t q, Basis b, int sign);

  double norm_squared() const;
  void normalize();

  /// |<other|this>|^2 (states must be normalized for a fidelity reading).
  double fidelity(const DenseState &other) const;

  /// <this| P |this> for the projector P onto the group's joint eigenspace.
  double fidelity(const StabilizerGroupSpec &group) const;

  /// <this| op |this> (op Hermitian): the expectation value, real part.
  double expectation(const PauliProduct &op) const;

 private:
  size_t n_;
  std::vector<cplx> amp_;
};

/// e^{-i sigma_x t}, e^{-i sigma_y t}, e^{-i sigma_z t}
Mat2 rot_x(double t);
Mat2 rot_y(double t);
Mat2 rot_z(double t);
Mat2 hadamard_matrix();
Mat2 pauli_matrix(char which);

}  // namespace postsim

#endif
