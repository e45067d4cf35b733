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

#ifndef POSTSIM_TABLEAU_HPP
#define POSTSIM_TABLEAU_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "postsim/pauli.hpp"

namespace postsim {

enum class Basis : uint8_t { Z, X, Y };

char basis_letter(Basis b);

/// Stabilizer-state simulator in the destabilizer-tableau form: n stabilizer
/// rows plus n destabilizer rows, so measurements cost O(n^2) instead of
/// O(n^3). Row phases use the exact mod-4 arithmetic of PauliProduct.
///
/// Invariants (checked by check_invariants, exercised in tests):
///   - stabilizer rows mutually commute and are independent;
///   - destabilizer i anticommutes with stabilizer i and commutes with every
///     other row;
///   - all rows are Hermitian with sign +1 or -1.
class StabilizerState {
 public:
  /// All qubits in |0>.
  explicit StabilizerState(size_t n);

  /// Builds a state from explicit rows. Callers must supply a valid pairing
  /// (checked lazily by check_invariants); used to seed resource blocks.
  static StabilizerState from_rows(std::vector<PauliProduct> stab,
                                   std::vector<PauliProduct> destab);

  size_t num_qubits() const { return n_; }

  void apply_h(size_t q);
  void apply_cnot(size_t c, size_t t);

  /// Conjugates the state by a Pauli operator: stabilizer signs flip where
  /// they anticommute with p. Used for fault injection and frame corrections.
  void apply_pauli(const PauliProduct &p);

  struct MeasureResult {
    int sign;            // +1 или -1 outcome
    bool deterministic;  // outcome forced by the state
  };

  /// Measures a single-qubit operator, drawing random outcomes from rng.
  MeasureResult measure(size_t q, Basis b, std::mt19937_64 &rng);

  /// Measures with the random branch forced to `forced_sign` (no rng use).
  /// Deterministic outcomes ignore the forcing and report their own sign.
  MeasureResult measure_forced(size_t q, Basis b, int forced_sign);

  struct PostselectResult {
    bool feasible;
    double weight;  // Born weight of the requested branch: 1.0, 0.5 or 0.0
  };

  /// Projects onto the `sign` eigenstate if possible. Deterministic match
  /// -> (true, 1); deterministic mismatch -> (false, 0), state unchanged;
  /// random -> (true, 0.5) and the state is projected.
  PostselectResult postselect(size_t q, Basis b, int sign);

  /// Resets the qubit to the +1 eigenstate of the basis operator, discarding
  /// prior correlations. Equivalent to measure-then-flip; consumes no
  /// randomness. (Intended for fresh or previously measured qubits.)
  void prepare(size_t q, Basis b);

  /// +1/-1 if op (with its phase read as sign) is in the +/- stabilizer
  /// group, 0 if measuring op would be random. op must be Hermitian.
  int deterministic_sign(const PauliProduct &op) const;

  /// Canonicalized full stabilizer group.
  StabilizerGroupSpec stabilizer_group() const;

  /// Canonicalized group restricted to a subset of qubits; throws if the
  /// subset is entangled with its complement (rank deficit).
  StabilizerGroupSpec stabilizer_group(const std::vector<uint32_t> &subset) const;

  const PauliProduct &stabilizer_row(size_t i) const { return stab_[i]; }
  const PauliProduct &destabilizer_row(size_t i) const { return destab_[i]; }

  /// Bracket-string rows ("+/-" prefixed), stabilizers then destabilizers.
  std::vector<std::string> dump() const;

  /// Exhaustive structural validation; throws on violation.
  void check_invariants() const;

 private:
  // Anticommutation of row r with the measured single-qubit operator.
  bool row_anticommutes(const PauliProduct &row, size_t q, Basis b) const;
  MeasureResult collapse(size_t q, Basis b, int desired_sign, bool have_desired,
                         std::mt19937_64 *rng);

  size_t n_;
  std::vector<PauliProduct> stab_, destab_;
};

}  // namespace postsim

#endif
