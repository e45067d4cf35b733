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

#ifndef POSTSIM_BUNDLE_HPP
#define POSTSIM_BUNDLE_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "postsim/circuit.hpp"
#include "postsim/noise.hpp"
#include "postsim/pauli.hpp"
#include "postsim/tableau.hpp"

namespace postsim {

/// Acceptance mode. Strict postselects every MeasZ+/MeasX+ gate on its
/// declared sign (success probability halves per random postselection even
/// without faults). Parity accepts iff the outcome parities that are
/// deterministic in the fault-free run keep their fault-free values, so an
/// error-free run is always accepted; logical teleportation randomness is
/// never constrained.
enum class Mode : uint8_t { Strict, Parity };

const char *mode_name(Mode m);

/// A block of qubits entering the circuit in a declared stabilizer state
/// instead of being prepared by gates (used by concatenated gadgets, where
/// lower-level resource states arrive from a previous pipeline stage).
struct ResourceInput {
  std::vector<uint32_t> qubits;
  StabilizerGroupSpec state;
};

/// One logical degree of freedom of the output, as anticommuting X/Z
/// operators over the output qubits (width = outputs.size()).
struct LogicalSpec {
  std::string name;
  PauliProduct x_op, z_op;
};

/// An operator whose sign discrepancy is detectable downstream: code
/// stabilizers and spectator operators with known ideal eigenvalues.
struct CheckSpec {
  std::string name;
  PauliProduct op;
};

/// A declared classical readout: the parity of the outcomes of the listed
/// measured wires is the logical measurement result. Readout parities are
/// excluded from the acceptance tags; their flips are logical errors.
/// `flip_exemplar` is a Pauli (circuit width) that flips exactly this
/// readout when injected after step `exemplar_step`; it lets the tag
/// derivation separate syndrome content from readout content.
struct ReadoutDecl {
  std::string name;
  std::vector<uint32_t> wires;
  PauliProduct flip_exemplar;
  uint32_t exemplar_step = 0;
};

/// One measurement event of the circuit, in execution order.
struct MeasurementEvent {
  uint32_t step;
  uint32_t gate_index;
  uint32_t wire;
  Basis basis;
  bool postselected;
  int8_t post_sign;
};

/// An acceptance tag: the parity of the listed measurement events (indices
/// into the event list) is deterministic fault-free with value ref_parity.
struct TagSet {
  std::vector<uint32_t> events;
  int8_t ref_parity;
};

struct ReferenceTape {
  std::vector<MeasurementEvent> events;
  std::vector<uint8_t> random_flags;  // per event
  std::vector<int8_t> ref_signs;      // per event
  std::vector<TagSet> tags;           // parity-mode acceptance checks
  struct Readout {
    std::string name;
    std::vector<uint32_t> events;
    int8_t ref_parity;
  };
  std::vector<Readout> readouts;
};

/// A constructed network: circuit, declared structure, and the finalized
/// reference data needed to run shots against it.
struct NetworkBundle {
  std::string name;
  Circuit circuit;
  std::vector<ResourceInput> resources;

  std::vector<uint32_t> outputs;  // wire labels carrying the output state
  StabilizerGroupSpec ideal_output;  // declared (may be empty: filled by finalize)
  std::vector<LogicalSpec> logicals;
  std::vector<CheckSpec> checks;
  std::vector<ReadoutDecl> readout_decls;

  // Filled by finalize():
  ReferenceTape tape;
  StabilizerGroupSpec ideal_canonical;
  std::vector<PauliProduct> ideal_duals;
  std::vector<uint32_t> output_columns;  // labels resolved through final swaps
  std::vector<ErrorLocation> locations;

  bool finalized = false;
};

/// Validates the circuit, simulates the fault-free reference (random
/// outcomes forced to declared postselection signs, +1 otherwise), derives
/// the deterministic-parity acceptance tags by probe replays, resolves
/// readouts, and checks the declared ideal output group against the
/// simulated one (or fills it in when empty). Throws on any inconsistency.
void finalize_bundle(NetworkBundle &b);

struct ShotResult {
  bool accepted = false;
  double weight = 1.0;  // strict acceptance weight when run without rng
  bool logical_error = false;
  bool detectable_residue = false;
  bool identity_residue = true;
  // Per logical DOF: 0=I, 1=X, 2=Z, 3=Y. Coset representatives: classes are
  // reported modulo the output state's own stabilizer.
  std::vector<uint8_t> logical_class;
  std::vector<int8_t> readout_values;    // per declared readout
  std::vector<uint8_t> readout_flipped;  // per declared readout
};

/// Runs one shot with the given fault pattern.
///
/// Parity mode is deterministic per pattern (rng unused): random outcomes
/// are replayed on the reference branch, acceptance checks the tags, and the
/// residual is classified against the ideal group via the canonical duals.
/// Strict mode with rng samples postselected branches; without rng it
/// computes the branch weight exactly (used by exhaustive scans).
ShotResult run_shot(const NetworkBundle &b, const FaultPattern &pattern, Mode mode,
                    std::mt19937_64 *rng);

/// Classification of a residual discrepancy pattern against the ideal group.
struct ResidualClass {
  bool identity = true;
  bool detectable = false;
  std::vector<uint8_t> logical_class;
  bool logical = false;
};
ResidualClass classify_residual(const NetworkBundle &b, const std::vector<int> &delta);

/// Builds the initial tableau with resource blocks set to their declared
/// states and every other qubit in |0>.
StabilizerState initial_state(size_t n, const std::vector<ResourceInput> &resources);

/// Internal replay engine, exposed for tests and for finalize().
struct ReplayOptions {
  const FaultPattern *faults = nullptr;
  Mode mode = Mode::Parity;
  std::mt19937_64 *rng = nullptr;
  const ReferenceTape *tape = nullptr;  // null: reference-building pass
  size_t flip_event = std::numeric_limits<size_t>::max();
  const std::vector<std::pair<uint32_t, PauliProduct>> *injections = nullptr;
};

struct ReplayOutput {
  std::vector<MeasurementEvent> events;
  std::vector<uint8_t> random_flags;
  std::vector<int8_t> signs;
  bool strict_feasible = true;
  double strict_weight = 1.0;
  StabilizerState state;
  std::vector<uint32_t> final_map;
  ReplayOutput() : state(0) {}
};

ReplayOutput replay_circuit(const Circuit &c, const std::vector<ResourceInput> &resources,
                            const std::vector<ErrorLocation> &locations,
                            const ReplayOptions &opt);

}  // namespace postsim

#endif
