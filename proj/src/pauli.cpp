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

#include "postsim/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace postsim {

PauliProduct PauliProduct::single(size_t n, size_t q, char which) {
  PauliProduct p(n);
  switch (which) {
    case 'I':
      break;
    case 'X':
      p.x.set(q, true);
      break;
    case 'Z':
      p.z.set(q, true);
      break;
    case 'Y':
      p.x.set(q, true);
      p.z.set(q, true);
      p.phase_k = 1;  // Y = i X Z
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + which + "'");
  }
  return p;
}

PauliProduct PauliProduct::parse(std::string_view text) {
  size_t pos = 0;
  uint8_t k = 0;
  if (pos < text.size() && text[pos] == '-') {
    k = 2;
    pos++;
  }
  if (pos < text.size() && text[pos] == 'i') {
    k = (k + 1) & 3;
    pos++;
  }
  if (pos >= text.size() || text[pos] != '[' || text.back() != ']') {
    throw std::invalid_argument("Pauli string must look like \"[XZIY]\" with optional -/i/-i prefix: got \"" +
                                std::string(text) + "\"");
  }
  std::string_view body = text.substr(pos + 1, text.size() - pos - 2);
  if (body.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  PauliProduct p(body.size());
  for (size_t q = 0; q < body.size(); q++) {
    char c = body[q];
    switch (c) {
      case 'I':
        break;
      case 'X':
        p.x.set(q, true);
        break;
      case 'Z':
        p.z.set(q, true);
        break;
      case 'Y':
        p.x.set(q, true);
        p.z.set(q, true);
        k = (k + 1) & 3;
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli character '") + c + "' at position " +
                                    std::to_string(q + 1));
    }
  }
  p.phase_k = k;
  return p;
}

std::string PauliProduct::str() const {
  size_t n = num_qubits();
  // Pull one i out of every Y so the displayed word uses the Hermitian Y.
  uint8_t disp = (phase_k + 4 - (x.and_popcount(z) & 3)) & 3;
  static const char *prefix[4] = {"", "i", "-", "-i"};
  std::string out = prefix[disp];
  out += '[';
  for (size_t q = 0; q < n; q++) {
    bool xb = x.get(q), zb = z.get(q);
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  out += ']';
  return out;
}

int PauliProduct::sign() const {
  uint8_t disp = (phase_k + 4 - (x.and_popcount(z) & 3)) & 3;
  if (disp == 0) {
    return +1;
  }
  if (disp == 2) {
    return -1;
  }
  throw std::logic_error("sign() called on non-Hermitian Pauli product " + str());
}

PauliProduct &PauliProduct::operator*=(const PauliProduct &o) {
  if (num_qubits() != o.num_qubits()) {
    throw std::invalid_argument("Pauli product size mismatch: " + std::to_string(num_qubits()) +
                                " vs " + std::to_string(o.num_qubits()));
  }
  // Moving o's X block past our Z block costs (-1)^{|z & o.x|}.
  uint8_t k = (phase_k + o.phase_k + 2 * (z.and_popcount(o.x) & 1)) & 3;
  x ^= o.x;
  z ^= o.z;
  phase_k = k;
  return *this;
}

bool PauliProduct::commutes_with(const PauliProduct &o) const {
  if (num_qubits() != o.num_qubits()) {
    throw std::invalid_argument("Pauli product size mismatch in commutes()");
  }
  return (x.and_parity(o.z) ^ z.and_parity(o.x)) == 0;
}

PauliProduct PauliProduct::restricted(const std::vector<uint32_t> &qubits) const {
  PauliProduct r(qubits.size());
  BitVec seen_x = x, seen_z = z;
  uint8_t y_in = 0, y_out = 0;
  for (size_t i = 0; i < qubits.size(); i++) {
    uint32_t q = qubits[i];
    bool xb = x.get(q), zb = z.get(q);
    r.x.set(i, xb);
    r.z.set(i, zb);
    seen_x.set(q, false);
    seen_z.set(q, false);
  }
  if (seen_x.any() || seen_z.any()) {
    throw std::invalid_argument("restriction drops non-identity support: " + str());
  }
  (void)y_in;
  (void)y_out;
  r.phase_k = phase_k;
  return r;
}

PauliProduct PauliProduct::embedded(size_t n, const std::vector<uint32_t> &qubits) const {
  if (qubits.size() != num_qubits()) {
    throw std::invalid_argument("embedding map size mismatch");
  }
  PauliProduct r(n);
  for (size_t i = 0; i < qubits.size(); i++) {
    r.x.set(qubits[i], x.get(i));
    r.z.set(qubits[i], z.get(i));
  }
  r.phase_k = phase_k;
  return r;
}

StabilizerGroupSpec StabilizerGroupSpec::from_strings(const std::vector<std::string> &texts) {
  StabilizerGroupSpec g;
  g.generators.reserve(texts.size());
  for (const auto &t : texts) {
    g.generators.push_back(PauliProduct::parse(t));
  }
  return g;
}

bool mutually_commuting(const std::vector<PauliProduct> &gens) {
  for (size_t i = 0; i < gens.size(); i++) {
    for (size_t j = i + 1; j < gens.size(); j++) {
      if (!gens[i].commutes_with(gens[j])) {
        return false;
      }
    }
  }
  return true;
}

StabilizerGroupSpec canonicalize(const StabilizerGroupSpec &group) {
  std::vector<PauliProduct> rows = group.generators;
  for (const auto &g : rows) {
    if (!g.is_hermitian()) {
      throw std::invalid_argument("group generator is not Hermitian: " + g.str());
    }
  }
  size_t n = rows.empty() ? 0 : rows[0].num_qubits();
  size_t pivot_row = 0;
  for (size_t col = 0; col < 2 * n && pivot_row < rows.size(); col++) {
    auto bit_at = [&](const PauliProduct &p) {
      return col < n ? p.x.get(col) : p.z.get(col - n);
    };
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
  // Rows past the pivot count reduced to identity. +identity is a redundant
  // generator; anything else means the input signs were contradictory.
  for (size_t r = pivot_row; r < rows.size(); r++) {
    if (!rows[r].has_identity_masks()) {
      throw std::logic_error("canonicalize left a non-identity row unpivoted");
    }
    if (rows[r].phase_k != 0) {
      throw std::invalid_argument("contradictory generator set: dependent product equals " +
                                  rows[r].str());
    }
  }
  rows.resize(pivot_row);
  StabilizerGroupSpec out;
  out.generators = std::move(rows);
  return out;
}

bool same_group(const StabilizerGroupSpec &a, const StabilizerGroupSpec &b) {
  if (a.num_qubits() != b.num_qubits()) {
    return false;
  }
  auto ca = canonicalize(a), cb = canonicalize(b);
  return ca.generators == cb.generators;
}

std::vector<PauliProduct> symplectic_duals(const std::vector<PauliProduct> &gens) {
  if (gens.empty()) {
    return {};
  }
  size_t n = gens[0].num_qubits();
  size_t m = gens.size();
  // Unknown v = (x|z); constraint row for gen g is (g.z | g.x) so that
  // <v, g> = v.x . g.z + v.z . g.x.
  std::vector<BitVec> a(m, BitVec(2 * n));
  for (size_t i = 0; i < m; i++) {
    for (size_t q = 0; q < n; q++) {
      a[i].set(q, gens[i].z.get(q));
      a[i].set(n + q, gens[i].x.get(q));
    }
  }
  // Row-reduce [A | I] to solve A v = e_i for every i at once.
  std::vector<BitVec> rhs(m, BitVec(m));
  for (size_t i = 0; i < m; i++) {
    rhs[i].set(i, true);
  }
  std::vector<size_t> pivot_col(m);
  size_t rank = 0;
  for (size_t col = 0; col < 2 * n && rank < m; col++) {
    size_t found = m;
    for (size_t r = rank; r < m; r++) {
      if (a[r].get(col)) {
        found = r;
        break;
      }
    }
    if (found == m) {
      continue;
    }
    std::swap(a[rank], a[found]);
    std::swap(rhs[rank], rhs[found]);
    for (size_t r = 0; r < m; r++) {
      if (r != rank && a[r].get(col)) {
        a[r] ^= a[rank];
        rhs[r] ^= rhs[rank];
      }
    }
    pivot_col[rank] = col;
    rank++;
  }
  if (rank != m) {
    throw std::invalid_argument("symplectic_duals: generators are dependent");
  }
  std::vector<PauliProduct> duals;
  duals.reserve(m);
  for (size_t i = 0; i < m; i++) {
    PauliProduct d(n);
    for (size_t r = 0; r < m; r++) {
      if (rhs[r].get(i)) {
        size_t col = pivot_col[r];
        if (col < n) {
          d.x.flip(col);
        } else {
          d.z.flip(col - n);
        }
      }
    }
    duals.push_back(std::move(d));
  }
  return duals;
}

int group_sign_of(const StabilizerGroupSpec &canonical, const PauliProduct &op) {
  if (canonical.generators.empty()) {
    return op.has_identity_masks() ? (op.phase_k == 0 ? +1 : -1) : 0;
  }
  size_t n = canonical.num_qubits();
  PauliProduct acc = PauliProduct::identity(n);
  PauliProduct target = op;
  // Greedy reduction works because the canonical rows form an RREF basis.
  for (const auto &g : canonical.generators) {
    size_t lead_x = g.x.lowest_set();
    bool use;
    if (lead_x < n) {
      // X-block pivot at the first x bit of g.
      size_t col = lead_x;
      use = target.x.get(col);
    } else {
      size_t col = g.z.lowest_set();
      use = target.z.get(col);
    }
    if (use) {
      acc *= g;
      target.x ^= g.x;
      target.z ^= g.z;
    }
  }
  if (target.x.any() || target.z.any()) {
    return 0;
  }
  if (!acc.same_masks(op)) {
    return 0;
  }
  uint8_t diff = (acc.phase_k + 4 - op.phase_k) & 3;
  if (diff == 0) {
    return +1;
  }
  if (diff == 2) {
    return -1;
  }
  return 0;  // i-phase mismatch: op not Hermitian-compatible with group element
}

}  // namespace postsim
