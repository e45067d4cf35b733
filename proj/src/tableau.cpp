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

#include "postsim/tableau.hpp"

#include <stdexcept>

namespace postsim {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::Z:
      return 'Z';
    case Basis::X:
      return 'X';
    case Basis::Y:
      return 'Y';
  }
  return '?';
}

StabilizerState::StabilizerState(size_t n) : n_(n) {
  stab_.reserve(n);
  destab_.reserve(n);
  for (size_t q = 0; q < n; q++) {
    stab_.push_back(PauliProduct::single(n, q, 'Z'));
    destab_.push_back(PauliProduct::single(n, q, 'X'));
  }
}

StabilizerState StabilizerState::from_rows(std::vector<PauliProduct> stab,
                                           std::vector<PauliProduct> destab) {
  if (stab.empty() || stab.size() != destab.size() ||
      stab.size() != stab[0].num_qubits()) {
    throw std::invalid_argument("from_rows needs n stabilizer and n destabilizer rows");
  }
  StabilizerState st(stab.size());
  st.stab_ = std::move(stab);
  st.destab_ = std::move(destab);
  return st;
}

void StabilizerState::apply_h(size_t q) {
  for (auto rows : {&stab_, &destab_}) {
    for (auto &r : *rows) {
      bool xb = r.x.get(q), zb = r.z.get(q);
      if (xb && zb) {
        r.negate();  // Y -> -Y
      } else if (xb != zb) {
        r.x.set(q, zb);
        r.z.set(q, xb);
      }
    }
  }
}

void StabilizerState::apply_cnot(size_t c, size_t t) {
  if (c == t) {
    throw std::invalid_argument("cnot control equals target");
  }
  for (auto rows : {&stab_, &destab_}) {
    for (auto &r : *rows) {
      // X_c -> X_c X_t, Z_t -> Z_c Z_t. In the bare X^x Z^z representation
      // with an explicit i^k, conjugation by cnot is a pure mask update: the
      // Hermitian-sign changes of the usual +-convention are absorbed by the
      // Y-count in sign().
      r.x.set(t, r.x.get(t) ^ r.x.get(c));
      r.z.set(c, r.z.get(c) ^ r.z.get(t));
    }
  }
}

void StabilizerState::apply_pauli(const PauliProduct &p) {
  for (auto &r : stab_) {
    if (!r.commutes_with(p)) {
      r.negate();
    }
  }
  for (auto &r : destab_) {
    if (!r.commutes_with(p)) {
      r.negate();
    }
  }
}

bool StabilizerState::row_anticommutes(const PauliProduct &row, size_t q, Basis b) const {
  bool xb = row.x.get(q), zb = row.z.get(q);
  switch (b) {
    case Basis::Z:
      return xb;
    case Basis::X:
      return zb;
    case Basis::Y:
      return xb != zb;
  }
  return false;
}

StabilizerState::MeasureResult StabilizerState::collapse(size_t q, Basis b, int desired_sign,
                                                         bool have_desired,
                                                         std::mt19937_64 *rng) {
  char letter = basis_letter(b);
  size_t pivot = n_;
  for (size_t i = 0; i < n_; i++) {
    if (row_anticommutes(stab_[i], q, b)) {
      pivot = i;
      break;
    }
  }
  if (pivot == n_) {
    // Deterministic: the measured operator is +/- a stabilizer element. Its
    // sign is the sign of the product of stabilizer rows whose destabilizer
    // partner anticommutes with the operator.
    PauliProduct acc = PauliProduct::identity(n_);
    for (size_t i = 0; i < n_; i++) {
      if (row_anticommutes(destab_[i], q, b)) {
        acc *= stab_[i];
      }
    }
    PauliProduct m = PauliProduct::single(n_, q, letter);
    if (!acc.same_masks(m)) {
      throw std::logic_error("deterministic measurement decomposition failed");
    }
    uint8_t diff = (acc.phase_k + 4 - m.phase_k) & 3;
    int sign = diff == 0 ? +1 : -1;
    return {sign, true};
  }

  int sign;
  if (have_desired) {
    sign = desired_sign;
  } else {
    sign = ((*rng)() & 1) ? -1 : +1;
  }
  PauliProduct old_pivot = stab_[pivot];
  for (size_t i = 0; i < n_; i++) {
    if (i != pivot && row_anticommutes(stab_[i], q, b)) {
      stab_[i] *= old_pivot;
    }
    if (row_anticommutes(destab_[i], q, b)) {
      destab_[i] *= old_pivot;
    }
  }
  destab_[pivot] = old_pivot;
  PauliProduct m = PauliProduct::single(n_, q, letter);
  if (sign < 0) {
    m.negate();
  }
  stab_[pivot] = m;
  return {sign, false};
}

StabilizerState::MeasureResult StabilizerState::measure(size_t q, Basis b, std::mt19937_64 &rng) {
  return collapse(q, b, 0, false, &rng);
}

StabilizerState::MeasureResult StabilizerState::measure_forced(size_t q, Basis b, int forced_sign) {
  return collapse(q, b, forced_sign, true, nullptr);
}

StabilizerState::PostselectResult StabilizerState::postselect(size_t q, Basis b, int sign) {
  // Peek first: deterministic mismatch must leave the state untouched.
  size_t pivot = n_;
  for (size_t i = 0; i < n_; i++) {
    if (row_anticommutes(stab_[i], q, b)) {
      pivot = i;
      break;
    }
  }
  if (pivot == n_) {
    auto r = measure_forced(q, b, sign);
    return {r.sign == sign, r.sign == sign ? 1.0 : 0.0};
  }
  measure_forced(q, b, sign);
  return {true, 0.5};
}

void StabilizerState::prepare(size_t q, Basis b) {
  auto r = measure_forced(q, b, +1);
  if (r.deterministic && r.sign < 0) {
    // Flip into the +1 eigenstate with an anticommuting single-qubit Pauli.
    char flip = (b == Basis::Z) ? 'X' : (b == Basis::X) ? 'Z' : 'X';
    apply_pauli(PauliProduct::single(n_, q, flip));
  }
}

int StabilizerState::deterministic_sign(const PauliProduct &op) const {
  if (!op.is_hermitian()) {
    throw std::invalid_argument("deterministic_sign needs a Hermitian operator");
  }
  for (const auto &s : stab_) {
    if (!s.commutes_with(op)) {
      return 0;
    }
  }
  PauliProduct acc = PauliProduct::identity(n_);
  for (size_t i = 0; i < n_; i++) {
    if (!destab_[i].commutes_with(op)) {
      acc *= stab_[i];
    }
  }
  if (!acc.same_masks(op)) {
    throw std::logic_error("operator commutes with the group but is not generated by it");
  }
  uint8_t diff = (acc.phase_k + 4 - op.phase_k) & 3;
  return diff == 0 ? +1 : -1;
}

StabilizerGroupSpec StabilizerState::stabilizer_group() const {
  StabilizerGroupSpec g;
  g.generators = stab_;
  return canonicalize(g);
}

StabilizerGroupSpec StabilizerState::stabilizer_group(const std::vector<uint32_t> &subset) const {
  // Eliminate complement support first: reorder columns so complement
  // columns lead, row-reduce, and keep rows with no complement support.
  std::vector<uint32_t> order;
  std::vector<bool> in_subset(n_, false);
  for (uint32_t q : subset) {
    in_subset[q] = true;
  }
  for (uint32_t q = 0; q < n_; q++) {
    if (!in_subset[q]) {
      order.push_back(q);
    }
  }
  size_t complement_size = order.size();
  for (uint32_t q : subset) {
    order.push_back(q);
  }

  std::vector<PauliProduct> rows = stab_;
  size_t pivot_row = 0;
  for (size_t oc = 0; oc < 2 * order.size() && pivot_row < rows.size(); oc++) {
    size_t idx = oc / 2;
    bool use_x = (oc % 2) == 0;
    uint32_t q = order[idx];
    auto bit_at = [&](const PauliProduct &p) { return use_x ? p.x.get(q) : p.z.get(q); };
    size_t found = rows.size();
    for (size_t r = pivot_row; r < rows.size(); r++) {
      if (bit_at(rows[r])) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) {
      continue;
    }
    std::swap(rows[pivot_row], rows[found]);
    for (size_t r = 0; r < rows.size(); r++) {
      if (r != pivot_row && bit_at(rows[r])) {
        rows[r] *= rows[pivot_row];
      }
    }
    pivot_row++;
  }

  std::vector<PauliProduct> kept;
  for (const auto &r : rows) {
    bool clean = true;
    for (size_t i = 0; i < complement_size; i++) {
      uint32_t q = order[i];
      if (r.x.get(q) || r.z.get(q)) {
        clean = false;
        break;
      }
    }
    if (clean && !r.has_identity_masks()) {
      kept.push_back(r.restricted(subset));
    }
  }
  if (kept.size() != subset.size()) {
    throw std::runtime_error("subsystem is entangled with its complement: rank " +
                             std::to_string(kept.size()) + " on " +
                             std::to_string(subset.size()) + " qubits");
  }
  StabilizerGroupSpec g;
  g.generators = std::move(kept);
  return canonicalize(g);
}

std::vector<std::string> StabilizerState::dump() const {
  std::vector<std::string> out;
  out.reserve(2 * n_);
  for (const auto &r : stab_) {
    out.push_back(r.str());
  }
  for (const auto &r : destab_) {
    out.push_back(r.str());
  }
  return out;
}

void StabilizerState::check_invariants() const {
  for (size_t i = 0; i < n_; i++) {
    if (!stab_[i].is_hermitian() || !destab_[i].is_hermitian()) {
      throw std::logic_error("non-Hermitian tableau row");
    }
    stab_[i].sign();
    for (size_t j = 0; j < n_; j++) {
      if (!stab_[i].commutes_with(stab_[j])) {
        throw std::logic_error("stabilizer rows anticommute");
      }
      bool anti = !destab_[i].commutes_with(stab_[j]);
      if (anti != (i == j)) {
        throw std::logic_error("destabilizer pairing broken");
      }
    }
  }
  // Independence: canonicalize must keep full rank.
  StabilizerGroupSpec g;
  g.generators = stab_;
  if (canonicalize(g).rank() != n_) {
    throw std::logic_error("stabilizer rows are dependent");
  }
}

}  // namespace postsim
