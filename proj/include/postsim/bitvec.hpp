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

#ifndef POSTSIM_BITVEC_HPP
#define POSTSIM_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace postsim {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
///
/// This is the storage type for Pauli X/Z masks and tableau rows. All
/// mutating operators require equal lengths.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVec &operator^=(const BitVec &o) {
    for (size_t k = 0; k < w_.size(); k++) {
      w_[k] ^= o.w_[k];
    }
    return *this;
  }

  /// popcount(*this & o)
  size_t and_popcount(const BitVec &o) const {
    size_t c = 0;
    for (size_t k = 0; k < w_.size(); k++) {
      c += std::popcount(w_[k] & o.w_[k]);
    }
    return c;
  }

  /// parity of popcount(*this & o)
  bool and_parity(const BitVec &o) const { return and_popcount(o) & 1; }

  size_t popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) {
      c += std::popcount(w);
    }
    return c;
  }

  bool any() const {
    for (uint64_t w : w_) {
      if (w) {
        return true;
      }
    }
    return false;
  }

  /// Index of the lowest set bit, or size() if none.
  size_t lowest_set() const {
    for (size_t k = 0; k < w_.size(); k++) {
      if (w_[k]) {
        return k * 64 + std::countr_zero(w_[k]);
      }
    }
    return n_;
  }

  bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec &o) const { return !(*this == o); }

  /// Lexicographic-by-word comparison; used only to order canonical forms.
  bool operator<(const BitVec &o) const { return w_ < o.w_; }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace postsim

#endif
