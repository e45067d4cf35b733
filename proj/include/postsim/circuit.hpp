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

#ifndef POSTSIM_CIRCUIT_HPP
#define POSTSIM_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "postsim/pauli.hpp"

namespace postsim {

/// The paper's gate alphabet plus two bookkeeping kinds:
///   - LogicalSwap relabels two wires (zero cost, no error location);
///   - Delay marks a declared memory-delay slot (an error location with no
///     quantum action), used for the single terminal delay of the decode
///     pipeline and the Fig. 8 idle qubit.
enum class GateKind : uint8_t {
  PrepZ,
  PrepX,
  PrepY,  // |i pi/4>: stabilizer +Y eigenstate
  PrepH,  // |pi/8>: Hadamard +1 eigenstate (dense oracle only)
  H,
  CNOT,
  MeasZ,
  MeasX,
  MeasZPost,
  MeasXPost,
  LogicalSwap,
  Delay,
};

bool is_measurement(GateKind k);
bool is_postselected(GateKind k);
bool is_preparation(GateKind k);
const char *gate_name(GateKind k);

struct Gate {
  GateKind kind;
  uint32_t a = 0;       // qubit wire label (control for CNOT)
  uint32_t b = 0;       // target for CNOT, second label for LogicalSwap
  int8_t post_sign = 1; // postselected sign for MeasZPost/MeasXPost

  static Gate cnot(uint32_t c, uint32_t t) { return {GateKind::CNOT, c, t, 1}; }
  static Gate h(uint32_t q) { return {GateKind::H, q, 0, 1}; }
  static Gate prep(GateKind k, uint32_t q) { return {k, q, 0, 1}; }
  static Gate meas(GateKind k, uint32_t q, int sign = 1) {
    return {k, q, 0, static_cast<int8_t>(sign)};
  }
  static Gate lswap(uint32_t a, uint32_t b) { return {GateKind::LogicalSwap, a, b, 1}; }
  static Gate delay(uint32_t q) { return {GateKind::Delay, q, 0, 1}; }

  bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::LogicalSwap; }
};

/// Timestep-ordered gate list. Gates address wire labels 0..n-1; LogicalSwap
/// permutes the label->column map during simulation, so swapped circuits and
/// relabeled circuits simulate identically.
struct Circuit {
  uint32_t n = 0;
  std::vector<std::vector<Gate>> steps;

  void append_step(std::vector<Gate> gates) { steps.push_back(std::move(gates)); }
  /// Appends the gate to the last step if its wires are free there,
  /// otherwise opens a new step.
  void append_packed(const Gate &g);
  size_t gate_count() const;
};

struct Violation {
  size_t step;
  uint32_t qubit;
  std::string what;
};

/// Checks timestep disjointness, label ranges, cnot distinctness and the
/// prepare/measure/reuse discipline. Returns all violations found.
std::vector<Violation> validate(const Circuit &c);

/// Number of timesteps containing at least one gate other than LogicalSwap.
int depth(const Circuit &c);

struct ErrorLocation {
  uint32_t id;
  uint32_t step;
  uint32_t gate_index;  // index in the step's gate list
  GateKind kind;
  uint32_t q0;
  uint32_t q1;     // second qubit for cnot locations
  uint8_t arity;   // 1 or 2
  bool before;     // true for measurement locations (fault acts before)
};

/// One location per non-LogicalSwap gate, ordered by (timestep, first wire).
/// Preparations, H, Delay: after the gate; cnot: both wires after;
/// measurements: the measured wire just before the gate.
std::vector<ErrorLocation> error_locations(const Circuit &c);

/// Line-oriented text: one timestep per line, gates as "KIND q1 [q2]"
/// separated by " | ", postselected signs as "KIND q -" when negative.
std::string to_text(const Circuit &c);
Circuit from_text(const std::string &text);

/// Removes LogicalSwap gates by rewriting subsequent gate labels.
Circuit without_logical_swaps(const Circuit &c);

}  // namespace postsim

#endif
