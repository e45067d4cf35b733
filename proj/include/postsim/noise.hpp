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

#ifndef POSTSIM_NOISE_HPP
#define POSTSIM_NOISE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "postsim/circuit.hpp"

namespace postsim {

/// A Pauli fault on one error location: letter codes 0=I, 1=X, 2=Y, 3=Z per
/// operand qubit (p1 unused for 1-qubit locations).
struct Fault {
  uint8_t p0 = 0;
  uint8_t p1 = 0;
  bool operator==(const Fault &o) const { return p0 == o.p0 && p1 == o.p1; }
};

char fault_letter(uint8_t code);
uint8_t fault_code(char letter);

/// Per-location fault distribution: sum of probabilities <= 1, remainder is
/// the identity (no fault).
struct LocationModel {
  std::vector<std::pair<Fault, double>> faults;
  double total() const;
};

/// Error model e_{p,l}: one distribution per error location of a circuit.
struct ErrorModel {
  std::vector<LocationModel> locations;  // indexed by ErrorLocation::id

  /// Uniform depolarizing split: 1-qubit locations get X,Y,Z at eps/3 each,
  /// cnot locations get the 15 nontrivial pairs at eps/15 each.
  static ErrorModel depolarizing(const Circuit &c, double eps);

  /// Twirled |i pi/4> inputs: X with probability p on PrepY locations only.
  static ErrorModel prepy_twirled(const Circuit &c, double p);

  /// Twirled |pi/8> inputs: Y with probability p on PrepH locations only.
  static ErrorModel preph_twirled(const Circuit &c, double p);

  /// Fault-free model covering every location.
  static ErrorModel noiseless(const Circuit &c);

  /// Per-class table: probabilities for classes "prep", "h", "cnot", "meas",
  /// "delay". Entries are (fault letters, probability).
  struct ClassTable {
    std::vector<std::pair<std::string, double>> prep, h, cnot, meas, delay;
  };
  static ErrorModel from_class_table(const Circuit &c, const ClassTable &table);
};

/// A concrete assignment of faults to (a subset of) locations.
struct FaultPattern {
  std::vector<std::pair<uint32_t, Fault>> faults;  // (location id, fault)
  size_t weight() const { return faults.size(); }

  /// Probability of exactly this pattern under the model: chosen fault
  /// probabilities times the no-fault complement everywhere else.
  double probability(const ErrorModel &model) const;
};

/// Independent draw per location in location-id order; consumes exactly one
/// uniform double per location so streams are reproducible.
FaultPattern sample_faults(const ErrorModel &model, std::mt19937_64 &rng);

/// Number of patterns with weight <= max_weight (locations range over their
/// full X/Y/Z or 15-pair alphabets).
double count_patterns(const std::vector<ErrorLocation> &locs, int max_weight);

/// Enumerates every fault pattern of weight <= max_weight over the full
/// per-location alphabets, invoking fn for each (including the empty
/// pattern). Throws if the count exceeds `budget` (default 1e7).
void for_each_pattern(const std::vector<ErrorLocation> &locs, int max_weight,
                      const std::function<void(const FaultPattern &)> &fn,
                      double budget = 1e7);

/// The fault as a circuit-width Pauli product acting on the location's
/// operand wires. Wire labels must be the location's resolved columns.
PauliProduct fault_operator(size_t n, const ErrorLocation &loc, const Fault &f,
                            uint32_t col0, uint32_t col1);

}  // namespace postsim

#endif
