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

#ifndef POSTSIM_PAULI_HPP
#define POSTSIM_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "postsim/bitvec.hpp"

namespace postsim {

/// An n-qubit Pauli product with an exact phase.
///
/// The represented operator is
///
///     i^phase_k * prod_q X_q^{x[q]} Z_q^{z[q]}
///
/// with the X factor to the left of the Z factor on each qubit. A qubit with
/// both bits set is sigma_y up to phase: Y = i * X * Z, so the Hermitian Y
/// carries one unit of i in phase_k. Phase arithmetic is exact (mod-4
/// exponent), which keeps every sign in measurement and canonicalization
/// bookkeeping exact.
class PauliProduct {
 public:
  BitVec x, z;
  uint8_t phase_k = 0;  // exponent of i, 0..3

  PauliProduct() = default;
  explicit PauliProduct(size_t n) : x(n), z(n) {}

  static PauliProduct identity(size_t n) { return PauliProduct(n); }

  /// Single-qubit Pauli embedded in n qubits. `which` is 'X', 'Y' or 'Z'.
  static PauliProduct single(size_t n, size_t q, char which);

  /// Parses bracket notation, e.g. "[XXII]", "-[ZIZI]", "i[Y]", "-i[XZ]".
  /// Qubit 1 is the leftmost letter. Phase prefix is optional.
  static PauliProduct parse(std::string_view text);

  /// Formats as bracket notation with phase prefix ("", "i", "-", "-i").
  std::string str() const;

  size_t num_qubits() const { return x.size(); }

  bool is_identity() const { return !x.any() && !z.any() && phase_k == 0; }
  bool has_identity_masks() const { return !x.any() && !z.any(); }

  /// Hermitian iff phase_k and the number of Y positions agree mod 2.
  bool is_hermitian() const { return ((phase_k ^ x.and_popcount(z)) & 1) == 0; }

  /// For a Hermitian product, +1 or -1; the coefficient in front of the
  /// Hermitian Pauli word (i.e. with each XZ pair read as Y).
  int sign() const;

  /// Flips the overall sign.
  void negate() { phase_k = (phase_k + 2) & 3; }

  PauliProduct &operator*=(const PauliProduct &o);
  friend PauliProduct operator*(PauliProduct a, const PauliProduct &b) {
    a *= b;
    return a;
  }

  /// true iff the symplectic inner product (x_a.z_b + z_a.x_b mod 2) is 0.
  bool commutes_with(const PauliProduct &o) const;
  bool anticommutes_with(const PauliProduct &o) const { return !commutes_with(o); }

  bool operator==(const PauliProduct &o) const {
    return x == o.x && z == o.z && phase_k == o.phase_k;
  }
  bool operator!=(const PauliProduct &o) const { return !(*this == o); }

  /// Same masks, phase ignored.
  bool same_masks(const PauliProduct &o) const { return x == o.x && z == o.z; }

  /// The restriction to a subset of qubits (new width = qubits.size()).
  /// Qubits outside the subset must be identity unless `allow_drop`.
  PauliProduct restricted(const std::vector<uint32_t> &qubits) const;

  /// Embeds this product (width = qubits.size()) into width n at `qubits`.
  PauliProduct embedded(size_t n, const std::vector<uint32_t> &qubits) const;
};

/// A list of signed Pauli generators describing a stabilizer group (or the
/// +1 joint eigenspace they pin down). Generators are expected to be
/// Hermitian with signs in {+1, -1}.
struct StabilizerGroupSpec {
  std::vector<PauliProduct> generators;

  size_t num_qubits() const {
    return generators.empty() ? 0 : generators[0].num_qubits();
  }
  size_t rank() const { return generators.size(); }

  /// Convenience: parse a list of bracket strings, all of the same width.
  static StabilizerGroupSpec from_strings(const std::vector<std::string> &texts);
};

/// Row-reduces a generator set over GF(2) with exact sign propagation.
///
/// Column order is x_1..x_n then z_1..z_n, so X-type generators lead and CSS
/// groups split visibly. Redundant generators with consistent sign are
/// dropped; a dependent set implying -identity (or an i phase) throws.
/// Two groups are equal iff their canonical forms are identical.
StabilizerGroupSpec canonicalize(const StabilizerGroupSpec &group);

/// true iff the two groups have identical canonical forms.
bool same_group(const StabilizerGroupSpec &a, const StabilizerGroupSpec &b);

/// All generators pairwise commuting?
bool mutually_commuting(const std::vector<PauliProduct> &gens);

/// Solves for duals of an independent commuting generator set: D[i]
/// anticommutes with gens[i] and commutes with every other generator.
/// (The returned duals have +1 phase; only their masks matter.)
std::vector<PauliProduct> symplectic_duals(const std::vector<PauliProduct> &gens);

/// Membership test against a canonicalized group: returns 0 if `op`'s masks
/// are not generated, otherwise the sign (+1/-1) carried by the group element
/// with those masks relative to `op` being given with sign +1.
///
/// I.e. for Hermitian `op` with sign s, result +1 means +op in the group.
int group_sign_of(const StabilizerGroupSpec &canonical, const PauliProduct &op);

}  // namespace postsim

#endif
