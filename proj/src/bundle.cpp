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

#include "postsim/bundle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace postsim {

const char *mode_name(Mode m) { return m == Mode::Strict ? "strict" : "parity"; }

StabilizerState initial_state(size_t n, const std::vector<ResourceInput> &resources) {
  if (resources.empty()) {
    return StabilizerState(n);
  }
  std::vector<PauliProduct> stab, destab;
  stab.reserve(n);
  destab.reserve(n);
  std::vector<bool> covered(n, false);
  for (const auto &r : resources) {
    auto canon = canonicalize(r.state);
    if (canon.rank() != r.qubits.size()) {
      throw std::invalid_argument("resource state rank " + std::to_string(canon.rank()) +
                                  " does not pin " + std::to_string(r.qubits.size()) + " qubits");
    }
    auto duals = symplectic_duals(canon.generators);
    for (size_t i = 0; i < canon.rank(); i++) {
      stab.push_back(canon.generators[i].embedded(n, r.qubits));
      destab.push_back(duals[i].embedded(n, r.qubits));
    }
    for (uint32_t q : r.qubits) {
      if (covered[q]) {
        throw std::invalid_argument("resource blocks overlap on qubit " + std::to_string(q));
      }
      covered[q] = true;
    }
  }
  for (uint32_t q = 0; q < n; q++) {
    if (!covered[q]) {
      stab.push_back(PauliProduct::single(n, q, 'Z'));
      destab.push_back(PauliProduct::single(n, q, 'X'));
    }
  }
  return StabilizerState::from_rows(std::move(stab), std::move(destab));
}

namespace {

Basis meas_basis(GateKind k) {
  return (k == GateKind::MeasZ || k == GateKind::MeasZPost) ? Basis::Z : Basis::X;
}

}  // namespace

ReplayOutput replay_circuit(const Circuit &c, const std::vector<ResourceInput> &resources,
                            const std::vector<ErrorLocation> &locations,
                            const ReplayOptions &opt) {
  ReplayOutput out;
  out.state = initial_state(c.n, resources);
  std::vector<uint32_t> map(c.n);
  for (uint32_t q = 0; q < c.n; q++) {
    map[q] = q;
  }

  // Location lookup by (step, gate index).
  std::map<std::pair<uint32_t, uint32_t>, const ErrorLocation *> loc_at;
  for (const auto &l : locations) {
    loc_at[{l.step, l.gate_index}] = &l;
  }
  std::vector<const Fault *> fault_by_loc(locations.size(), nullptr);
  if (opt.faults) {
    for (const auto &[id, f] : opt.faults->faults) {
      fault_by_loc.at(id) = &f;
    }
  }

  auto apply_fault = [&](const ErrorLocation *loc) {
    if (!loc) {
      return;
    }
    const Fault *f = fault_by_loc[loc->id];
    if (!f) {
      return;
    }
    out.state.apply_pauli(fault_operator(c.n, *loc, *f, map[loc->q0], map[loc->q1]));
  };

  size_t event_index = 0;
  for (uint32_t si = 0; si < c.steps.size(); si++) {
    for (uint32_t gi = 0; gi < c.steps[si].size(); gi++) {
      const Gate &g = c.steps[si][gi];
      const ErrorLocation *loc = nullptr;
      if (g.kind != GateKind::LogicalSwap) {
        auto it = loc_at.find({si, gi});
        loc = it == loc_at.end() ? nullptr : it->second;
      }
      switch (g.kind) {
        case GateKind::PrepZ:
          out.state.prepare(map[g.a], Basis::Z);
          apply_fault(loc);
          break;
        case GateKind::PrepX:
          out.state.prepare(map[g.a], Basis::X);
          apply_fault(loc);
          break;
        case GateKind::PrepY:
          out.state.prepare(map[g.a], Basis::Y);
          apply_fault(loc);
          break;
        case GateKind::PrepH:
          throw std::invalid_argument("PrepH (|pi/8>) is not a stabilizer preparation; "
                                      "use the dense oracle path");
        case GateKind::H:
          out.state.apply_h(map[g.a]);
          apply_fault(loc);
          break;
        case GateKind::CNOT:
          out.state.apply_cnot(map[g.a], map[g.b]);
          apply_fault(loc);
          break;
        case GateKind::Delay:
          apply_fault(loc);
          break;
        case GateKind::LogicalSwap:
          std::swap(map[g.a], map[g.b]);
          break;
        case GateKind::MeasZ:
        case GateKind::MeasX:
        case GateKind::MeasZPost:
        case GateKind::MeasXPost: {
          apply_fault(loc);  // measurement faults act just before the gate
          Basis basis = meas_basis(g.kind);
          bool post = is_postselected(g.kind);
          size_t ev = event_index++;

          bool tape_random;
          int8_t ref_sign;
          if (opt.tape) {
            if (ev >= opt.tape->events.size()) {
              throw std::logic_error("measurement event beyond reference tape");
            }
            tape_random = opt.tape->random_flags[ev];
            ref_sign = opt.tape->ref_signs[ev];
          } else {
            tape_random = false;  // discovered below
            ref_sign = post ? g.post_sign : int8_t{1};
          }

          int sign;
          bool deterministic;
          if (opt.mode == Mode::Strict && opt.rng != nullptr) {
            auto r = out.state.measure(map[g.a], basis, *opt.rng);
            sign = r.sign;
            deterministic = r.deterministic;
            if (post && sign != g.post_sign) {
              out.strict_feasible = false;
            }
          } else {
            int force = ref_sign;
            if (opt.flip_event == ev) {
              force = -force;
            }
            auto r = out.state.measure_forced(map[g.a], basis, force);
            sign = r.sign;
            deterministic = r.deterministic;
            if (opt.mode == Mode::Strict) {
              if (post) {
                if (deterministic) {
                  if (sign != g.post_sign) {
                    out.strict_feasible = false;
                    out.strict_weight = 0.0;
                  }
                } else {
                  out.strict_weight *= 0.5;
                }
              }
            }
          }
          if (opt.tape && tape_random == deterministic) {
            throw std::logic_error("random/deterministic structure deviated from the reference");
          }
          out.events.push_back({si, gi, g.a, basis, post, g.post_sign});
          out.random_flags.push_back(!deterministic);
          out.signs.push_back(static_cast<int8_t>(sign));
          break;
        }
      }
      (void)loc;
    }
    if (opt.injections) {
      for (const auto &[after_step, pauli] : *opt.injections) {
        if (after_step == si) {
          // Injections are given on wire labels; remap to columns.
          PauliProduct remapped(c.n);
          for (uint32_t q = 0; q < c.n; q++) {
            remapped.x.set(map[q], pauli.x.get(q));
            remapped.z.set(map[q], pauli.z.get(q));
          }
          remapped.phase_k = pauli.phase_k;
          out.state.apply_pauli(remapped);
        }
      }
    }
  }
  out.final_map = std::move(map);
  return out;
}

void finalize_bundle(NetworkBundle &b) {
  auto violations = validate(b.circuit);
  if (!violations.empty()) {
    std::string msg = "invalid circuit for bundle '" + b.name + "':";
    for (const auto &v : violations) {
      msg += "\n  step " + std::to_string(v.step) + " qubit " + std::to_string(v.qubit) + ": " +
             v.what;
    }
    throw std::invalid_argument(msg);
  }
  b.locations = error_locations(b.circuit);

  // Reference pass.
  ReplayOptions ref_opt;
  ReplayOutput ref = replay_circuit(b.circuit, b.resources, b.locations, ref_opt);
  b.tape.events = ref.events;
  b.tape.random_flags = ref.random_flags;
  b.tape.ref_signs = ref.signs;
  b.tape.tags.clear();
  b.tape.readouts.clear();

  // A fault-free strict run must be feasible: deterministic postselections
  // have to agree with their declared signs.
  for (size_t ev = 0; ev < ref.events.size(); ev++) {
    if (ref.events[ev].postselected && !ref.random_flags[ev] &&
        ref.signs[ev] != ref.events[ev].post_sign) {
      throw std::logic_error("bundle '" + b.name +
                             "' postselects a deterministic -1 outcome fault-free");
    }
  }

  // Output columns and the simulated ideal group.
  b.output_columns.clear();
  for (uint32_t label : b.outputs) {
    b.output_columns.push_back(ref.final_map[label]);
  }
  if (!b.outputs.empty()) {
    StabilizerGroupSpec simulated = ref.state.stabilizer_group(b.output_columns);
    if (b.ideal_output.generators.empty()) {
      b.ideal_output = simulated;
    } else if (!same_group(b.ideal_output, simulated)) {
      throw std::logic_error("bundle '" + b.name +
                             "' declared ideal output group differs from the simulated one");
    }
    b.ideal_canonical = canonicalize(b.ideal_output);
    b.ideal_duals = symplectic_duals(b.ideal_canonical.generators);
  } else {
    b.ideal_canonical = {};
    b.ideal_duals.clear();
  }

  // Probe passes: dependence of each deterministic outcome on each random
  // outcome. Deterministic outcome values are affine over GF(2) in the
  // forced random outcomes, so single flips recover the linear form.
  size_t n_events = ref.events.size();
  std::vector<std::vector<uint32_t>> dep(n_events);
  for (size_t i = 0; i < n_events; i++) {
    if (!ref.random_flags[i]) {
      continue;
    }
    ReplayOptions probe_opt;
    probe_opt.tape = &b.tape;
    probe_opt.flip_event = i;
    ReplayOutput probe = replay_circuit(b.circuit, b.resources, b.locations, probe_opt);
    for (size_t j = 0; j < n_events; j++) {
      if (!ref.random_flags[j] && probe.signs[j] != ref.signs[j]) {
        dep[j].push_back(static_cast<uint32_t>(i));
      }
    }
  }
  for (size_t j = 0; j < n_events; j++) {
    if (ref.random_flags[j]) {
      continue;
    }
    TagSet t;
    t.events.push_back(static_cast<uint32_t>(j));
    for (uint32_t i : dep[j]) {
      t.events.push_back(i);
    }
    int parity = 1;
    for (uint32_t e : t.events) {
      parity *= ref.signs[e];
    }
    t.ref_parity = static_cast<int8_t>(parity);
    b.tape.tags.push_back(std::move(t));
  }

  // Resolve readouts and remove their content from the tags.
  std::map<uint32_t, uint32_t> event_of_wire;
  for (size_t ev = 0; ev < n_events; ev++) {
    // Builders measure each wire at most once.
    if (event_of_wire.count(ref.events[ev].wire)) {
      if (!b.readout_decls.empty()) {
        throw std::logic_error("bundle '" + b.name +
                               "' measures a wire twice; readouts need unique wires");
      }
    }
    event_of_wire[ref.events[ev].wire] = static_cast<uint32_t>(ev);
  }
  for (const auto &decl : b.readout_decls) {
    ReferenceTape::Readout r;
    r.name = decl.name;
    for (uint32_t w : decl.wires) {
      auto it = event_of_wire.find(w);
      if (it == event_of_wire.end()) {
        throw std::invalid_argument("readout wire " + std::to_string(w) + " is never measured");
      }
      r.events.push_back(it->second);
    }
    int parity = 1;
    for (uint32_t e : r.events) {
      parity *= ref.signs[e];
    }
    r.ref_parity = static_cast<int8_t>(parity);

    // Which tags co-vary with this readout: probe with the flip exemplar.
    std::vector<std::pair<uint32_t, PauliProduct>> inj = {{decl.exemplar_step, decl.flip_exemplar}};
    ReplayOptions ex_opt;
    ex_opt.tape = &b.tape;
    ex_opt.injections = &inj;
    ReplayOutput ex = replay_circuit(b.circuit, b.resources, b.locations, ex_opt);
    std::vector<size_t> flipped_tags;
    for (size_t ti = 0; ti < b.tape.tags.size(); ti++) {
      int parity_now = 1;
      for (uint32_t e : b.tape.tags[ti].events) {
        parity_now *= ex.signs[e];
      }
      if (parity_now != b.tape.tags[ti].ref_parity) {
        flipped_tags.push_back(ti);
      }
    }
    // The readout parity itself must flip under its exemplar.
    int readout_now = 1;
    for (uint32_t e : r.events) {
      readout_now *= ex.signs[e];
    }
    if (readout_now == r.ref_parity) {
      throw std::logic_error("readout exemplar for '" + decl.name + "' does not flip it");
    }
    if (flipped_tags.empty()) {
      throw std::logic_error("readout '" + decl.name + "' has no deterministic content");
    }
    // Fold the representative tag into the others, then drop it: remaining
    // tags are insensitive to the readout value.
    size_t rep = flipped_tags.front();
    for (size_t k = 1; k < flipped_tags.size(); k++) {
      TagSet &t = b.tape.tags[flipped_tags[k]];
      // Symmetric difference of event sets; parity multiplies.
      std::set<uint32_t> sym(t.events.begin(), t.events.end());
      for (uint32_t e : b.tape.tags[rep].events) {
        if (sym.count(e)) {
          sym.erase(e);
        } else {
          sym.insert(e);
        }
      }
      t.events.assign(sym.begin(), sym.end());
      t.ref_parity = static_cast<int8_t>(t.ref_parity * b.tape.tags[rep].ref_parity);
    }
    b.tape.tags.erase(b.tape.tags.begin() + static_cast<long>(rep));
    b.tape.readouts.push_back(std::move(r));
  }

  b.finalized = true;
}

ResidualClass classify_residual(const NetworkBundle &b, const std::vector<int> &delta) {
  ResidualClass rc;
  rc.logical_class.assign(b.logicals.size(), 0);
  size_t m = b.ideal_canonical.rank();
  PauliProduct residual = PauliProduct::identity(b.outputs.size());
  bool any = false;
  for (size_t i = 0; i < m; i++) {
    if (delta[i] < 0) {
      residual.x ^= b.ideal_duals[i].x;
      residual.z ^= b.ideal_duals[i].z;
      any = true;
    }
  }
  if (!any) {
    return rc;
  }
  rc.identity = false;
  for (const auto &c : b.checks) {
    if (!c.op.commutes_with(residual)) {
      rc.detectable = true;
    }
  }
  bool any_logical = false;
  for (size_t l = 0; l < b.logicals.size(); l++) {
    bool xc = !b.logicals[l].z_op.commutes_with(residual);  // X component
    bool zc = !b.logicals[l].x_op.commutes_with(residual);  // Z component
    rc.logical_class[l] = static_cast<uint8_t>((xc ? 1 : 0) | (zc ? 2 : 0));
    any_logical |= rc.logical_class[l] != 0;
  }
  rc.logical = !rc.detectable && any_logical;
  if (!rc.detectable && !any_logical) {
    throw std::logic_error("residual discrepancy with neither check nor logical content in '" +
                           b.name + "'");
  }
  return rc;
}

ShotResult run_shot(const NetworkBundle &b, const FaultPattern &pattern, Mode mode,
                    std::mt19937_64 *rng) {
  if (!b.finalized) {
    throw std::logic_error("bundle not finalized");
  }
  for (const auto &[id, f] : pattern.faults) {
    if (id >= b.locations.size()) {
      throw std::invalid_argument("fault pattern references foreign location id " +
                                  std::to_string(id));
    }
  }
  ReplayOptions opt;
  opt.faults = &pattern;
  opt.mode = mode;
  opt.rng = mode == Mode::Strict ? rng : nullptr;
  opt.tape = &b.tape;
  ReplayOutput run = replay_circuit(b.circuit, b.resources, b.locations, opt);

  ShotResult res;
  res.logical_class.assign(b.logicals.size(), 0);

  if (mode == Mode::Strict) {
    res.accepted = run.strict_feasible;
    res.weight = rng ? (run.strict_feasible ? 1.0 : 0.0) : run.strict_weight;
  } else {
    res.accepted = true;
    for (const auto &t : b.tape.tags) {
      int parity = 1;
      for (uint32_t e : t.events) {
        parity *= run.signs[e];
      }
      if (parity != t.ref_parity) {
        res.accepted = false;
        break;
      }
    }
  }

  for (const auto &r : b.tape.readouts) {
    int parity = 1;
    for (uint32_t e : r.events) {
      parity *= run.signs[e];
    }
    res.readout_values.push_back(static_cast<int8_t>(parity));
    res.readout_flipped.push_back(parity != r.ref_parity);
  }

  if (!res.accepted) {
    return res;
  }

  if (!b.outputs.empty()) {
    std::vector<int> delta(b.ideal_canonical.rank(), +1);
    for (size_t i = 0; i < b.ideal_canonical.rank(); i++) {
      PauliProduct g = b.ideal_canonical.generators[i].embedded(b.circuit.n, b.output_columns);
      int s = run.state.deterministic_sign(g);
      if (s == 0) {
        throw std::logic_error("accepted run left an ideal generator undetermined in '" + b.name +
                               "'");
      }
      delta[i] = s;
    }
    auto rc = classify_residual(b, delta);
    res.identity_residue = rc.identity;
    res.detectable_residue = rc.detectable;
    res.logical_class = rc.logical_class;
    res.logical_error = rc.logical;
  }
  for (bool f : res.readout_flipped) {
    if (f) {
      res.logical_error = true;
      res.identity_residue = false;
    }
  }
  return res;
}

}  // namespace postsim
