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

#include "postsim/networks.hpp"

#include <map>
#include <stdexcept>

namespace postsim {

const char *spectator_name(SpectatorMode m) { return m == SpectatorMode::XPlus ? "X+" : "Z+"; }

PauliProduct block_word(size_t width, const std::array<uint32_t, 4> &slots, const char *word) {
  PauliProduct p = PauliProduct::identity(width);
  for (size_t i = 0; i < 4; i++) {
    if (word[i] != 'I') {
      p *= PauliProduct::single(width, slots[i], word[i]);
    }
  }
  return p;
}

namespace {

std::array<uint32_t, 4> blk(uint32_t base) { return {base, base + 1, base + 2, base + 3}; }

// Bell-pair pairings of the two fundamental encoders: zx pairs (1,3),(2,4),
// xz pairs (1,2),(3,4).
void enc4_preps(std::vector<Gate> &step, Enc4Kind k, const std::array<uint32_t, 4> &w) {
  if (k == Enc4Kind::ZX) {
    step.push_back(Gate::prep(GateKind::PrepX, w[0]));
    step.push_back(Gate::prep(GateKind::PrepX, w[1]));
    step.push_back(Gate::prep(GateKind::PrepZ, w[2]));
    step.push_back(Gate::prep(GateKind::PrepZ, w[3]));
  } else {
    step.push_back(Gate::prep(GateKind::PrepX, w[0]));
    step.push_back(Gate::prep(GateKind::PrepZ, w[1]));
    step.push_back(Gate::prep(GateKind::PrepX, w[2]));
    step.push_back(Gate::prep(GateKind::PrepZ, w[3]));
  }
}

void enc4_cnots(std::vector<Gate> &step, Enc4Kind k, const std::array<uint32_t, 4> &w) {
  if (k == Enc4Kind::ZX) {
    step.push_back(Gate::cnot(w[0], w[2]));
    step.push_back(Gate::cnot(w[1], w[3]));
  } else {
    step.push_back(Gate::cnot(w[0], w[1]));
    step.push_back(Gate::cnot(w[2], w[3]));
  }
}

void add_block_checks(NetworkBundle &b, const std::array<uint32_t, 4> &slots, SpectatorMode mode,
                      const std::string &prefix) {
  size_t w = b.outputs.size();
  b.checks.push_back({prefix + "XXXX", block_word(w, slots, kWordXXXX)});
  b.checks.push_back({prefix + "ZZZZ", block_word(w, slots, kWordZZZZ)});
  if (mode == SpectatorMode::XPlus) {
    b.checks.push_back({prefix + "XS", block_word(w, slots, kWordXS)});
  } else {
    b.checks.push_back({prefix + "ZS", block_word(w, slots, kWordZS)});
  }
}

void add_block_logicals(NetworkBundle &b, const std::array<uint32_t, 4> &slots,
                        const std::string &name) {
  size_t w = b.outputs.size();
  b.logicals.push_back({name, block_word(w, slots, kWordXL), block_word(w, slots, kWordZL)});
}

std::vector<uint32_t> iota_labels(uint32_t first, uint32_t count) {
  std::vector<uint32_t> v(count);
  for (uint32_t i = 0; i < count; i++) {
    v[i] = first + i;
  }
  return v;
}

const std::vector<std::string> kGroupZX = {"[XXXX]", "[ZZZZ]", "[ZIZI]", "[IXIX]"};
const std::vector<std::string> kGroupXZ = {"[XXXX]", "[ZZZZ]", "[XXII]", "[IIZZ]"};
const std::vector<std::string> kGroupZZ = {"[XXXX]", "[ZZZZ]", "[ZIZI]", "[IIZZ]"};
const std::vector<std::string> kGroupXX = {"[XXXX]", "[ZZZZ]", "[XXII]", "[IXIX]"};

std::vector<std::string> pair_group(const std::vector<std::string> &a,
                                    const std::vector<std::string> &bg) {
  std::vector<std::string> out;
  for (const auto &s : a) {
    out.push_back("[" + s.substr(1, 4) + "IIII]");
  }
  for (const auto &s : bg) {
    out.push_back("[IIII" + s.substr(1, 4) + "]");
  }
  return out;
}

// Emits the 4->1 purification stage pair across `positions` wires per copy.
// Copy wire = base[copy] + position. Order ZX purifies X syndromes first.
struct PurifySteps {
  std::vector<Gate> stage1_cnots;
  std::vector<Gate> stage1_meas;
  std::vector<Gate> stage2_cnots;
  std::vector<Gate> stage2_meas;
};

PurifySteps purification(PurifyOrder order, const std::array<uint32_t, 4> &base,
                         uint32_t positions) {
  PurifySteps s;
  for (uint32_t p = 0; p < positions; p++) {
    if (order == PurifyOrder::ZX) {
      // X-syndrome comparison: cnot measured->kept, X-measure the source.
      s.stage1_cnots.push_back(Gate::cnot(base[1] + p, base[0] + p));
      s.stage1_cnots.push_back(Gate::cnot(base[3] + p, base[2] + p));
      s.stage1_meas.push_back(Gate::meas(GateKind::MeasXPost, base[1] + p));
      s.stage1_meas.push_back(Gate::meas(GateKind::MeasXPost, base[3] + p));
      // Z-syndrome comparison: cnot kept->measured, Z-measure the target.
      s.stage2_cnots.push_back(Gate::cnot(base[0] + p, base[2] + p));
      s.stage2_meas.push_back(Gate::meas(GateKind::MeasZPost, base[2] + p));
    } else {
      s.stage1_cnots.push_back(Gate::cnot(base[0] + p, base[1] + p));
      s.stage1_cnots.push_back(Gate::cnot(base[2] + p, base[3] + p));
      s.stage1_meas.push_back(Gate::meas(GateKind::MeasZPost, base[1] + p));
      s.stage1_meas.push_back(Gate::meas(GateKind::MeasZPost, base[3] + p));
      s.stage2_cnots.push_back(Gate::cnot(base[2] + p, base[0] + p));
      s.stage2_meas.push_back(Gate::meas(GateKind::MeasXPost, base[2] + p));
    }
  }
  return s;
}

// Appends the full B_zx body (telestate copies + purification) to a circuit
// whose copies live at wire offsets base+32*c... The caller owns wiring.
struct BzxLayout {
  uint32_t base;                   // first wire of copy 0
  std::array<uint32_t, 4> a_half;  // copy-0 block A wires (Z_S spectator)
  std::array<uint32_t, 4> b_half;  // copy-0 block B wires (X_S spectator)
};

BzxLayout emit_bzx(Circuit &c, uint32_t base, size_t first_step) {
  // Steps used: first_step .. first_step+5.
  while (c.steps.size() < first_step + 6) {
    c.steps.emplace_back();
  }
  for (uint32_t copy = 0; copy < 4; copy++) {
    uint32_t cb = base + 8 * copy;
    enc4_preps(c.steps[first_step], Enc4Kind::XZ, blk(cb));
    enc4_preps(c.steps[first_step], Enc4Kind::ZX, blk(cb + 4));
    enc4_cnots(c.steps[first_step + 1], Enc4Kind::XZ, blk(cb));
    enc4_cnots(c.steps[first_step + 1], Enc4Kind::ZX, blk(cb + 4));
    for (uint32_t i = 0; i < 4; i++) {
      c.steps[first_step + 2].push_back(Gate::cnot(cb + i, cb + 4 + i));
    }
  }
  PurifySteps ps = purification(PurifyOrder::ZX, {base, base + 8, base + 16, base + 24}, 8);
  auto &s3 = c.steps[first_step + 3];
  s3.insert(s3.end(), ps.stage1_cnots.begin(), ps.stage1_cnots.end());
  auto &s4 = c.steps[first_step + 4];
  s4.insert(s4.end(), ps.stage1_meas.begin(), ps.stage1_meas.end());
  s4.insert(s4.end(), ps.stage2_cnots.begin(), ps.stage2_cnots.end());
  auto &s5 = c.steps[first_step + 5];
  s5.insert(s5.end(), ps.stage2_meas.begin(), ps.stage2_meas.end());
  return {base, blk(base), blk(base + 4)};
}

}  // namespace

NetworkBundle build_enc4(Enc4Kind kind) {
  NetworkBundle b;
  b.name = kind == Enc4Kind::ZX ? "enc4-zx" : "enc4-xz";
  b.circuit.n = 4;
  b.circuit.steps.assign(2, {});
  enc4_preps(b.circuit.steps[0], kind, blk(0));
  enc4_cnots(b.circuit.steps[1], kind, blk(0));
  b.outputs = iota_labels(0, 4);
  b.ideal_output = StabilizerGroupSpec::from_strings(kind == Enc4Kind::ZX ? kGroupZX : kGroupXZ);
  add_block_checks(b, {0, 1, 2, 3},
                   kind == Enc4Kind::ZX ? SpectatorMode::XPlus : SpectatorMode::ZPlus, "");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_telestate() {
  NetworkBundle b;
  b.name = "telestate";
  b.circuit.n = 8;
  b.circuit.steps.assign(3, {});
  enc4_preps(b.circuit.steps[0], Enc4Kind::XZ, blk(0));
  enc4_preps(b.circuit.steps[0], Enc4Kind::ZX, blk(4));
  enc4_cnots(b.circuit.steps[1], Enc4Kind::XZ, blk(0));
  enc4_cnots(b.circuit.steps[1], Enc4Kind::ZX, blk(4));
  for (uint32_t i = 0; i < 4; i++) {
    b.circuit.steps[2].push_back(Gate::cnot(i, 4 + i));
  }
  b.outputs = iota_labels(0, 8);
  b.ideal_output = StabilizerGroupSpec::from_strings({
      "[XXIIXXII]", "[ZIZIZIZI]", "[IIZZIIII]", "[XXXXIIII]", "[ZZZZIIII]",
      "[IIIIIXIX]", "[IIIIXXXX]", "[IIIIZZZZ]",
  });
  add_block_checks(b, {0, 1, 2, 3}, SpectatorMode::ZPlus, "A.");
  add_block_checks(b, {4, 5, 6, 7}, SpectatorMode::XPlus, "B.");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  add_block_logicals(b, {4, 5, 6, 7}, "L'");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_purify1(PurifyOrder order) {
  NetworkBundle b;
  b.name = order == PurifyOrder::ZX ? "purify1-zx" : "purify1-xz";
  b.circuit.n = 16;
  b.circuit.steps.assign(5, {});
  for (uint32_t copy = 0; copy < 4; copy++) {
    enc4_preps(b.circuit.steps[0], Enc4Kind::ZX, blk(4 * copy));
    enc4_cnots(b.circuit.steps[1], Enc4Kind::ZX, blk(4 * copy));
  }
  PurifySteps ps = purification(order, {0, 4, 8, 12}, 4);
  auto &s2 = b.circuit.steps[2];
  s2.insert(s2.end(), ps.stage1_cnots.begin(), ps.stage1_cnots.end());
  auto &s3 = b.circuit.steps[3];
  s3.insert(s3.end(), ps.stage1_meas.begin(), ps.stage1_meas.end());
  s3.insert(s3.end(), ps.stage2_cnots.begin(), ps.stage2_cnots.end());
  auto &s4 = b.circuit.steps[4];
  s4.insert(s4.end(), ps.stage2_meas.begin(), ps.stage2_meas.end());
  b.outputs = iota_labels(0, 4);
  b.ideal_output = StabilizerGroupSpec::from_strings(kGroupZX);
  add_block_checks(b, {0, 1, 2, 3}, SpectatorMode::XPlus, "");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_bzx(StepParity parity) {
  NetworkBundle b;
  b.name = parity == StepParity::Even ? "bzx-even" : "bzx-odd";
  b.circuit.n = 32;
  emit_bzx(b.circuit, 0, 0);
  b.outputs = iota_labels(0, 8);
  b.ideal_output = StabilizerGroupSpec::from_strings({
      "[XXIIXXII]", "[ZIZIZIZI]", "[IIZZIIII]", "[XXXXIIII]", "[ZZZZIIII]",
      "[IIIIIXIX]", "[IIIIXXXX]", "[IIIIZZZZ]",
  });
  add_block_checks(b, {0, 1, 2, 3}, SpectatorMode::ZPlus, "A.");
  add_block_checks(b, {4, 5, 6, 7}, SpectatorMode::XPlus, "B.");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  add_block_logicals(b, {4, 5, 6, 7}, "L'");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_encoded_prep(Basis basis, StepParity parity) {
  if (basis == Basis::Y) {
    throw std::invalid_argument("encoded preparations exist for X and Z only");
  }
  NetworkBundle b;
  b.name = std::string("encoded-prep-") + (basis == Basis::X ? "x" : "z") + "-" +
           (parity == StepParity::Even ? "even" : "odd");
  b.circuit.n = 32;
  BzxLayout lay = emit_bzx(b.circuit, 0, 0);
  // Even steps output the X_S half and measure the Z_S half; odd the reverse.
  const auto &meas_half = parity == StepParity::Even ? lay.a_half : lay.b_half;
  const auto &out_half = parity == StepParity::Even ? lay.b_half : lay.a_half;
  b.circuit.steps.emplace_back();
  for (uint32_t q : meas_half) {
    b.circuit.steps.back().push_back(
        Gate::meas(basis == Basis::X ? GateKind::MeasXPost : GateKind::MeasZPost, q));
  }
  b.outputs.assign(out_half.begin(), out_half.end());
  if (basis == Basis::X) {
    b.ideal_output = StabilizerGroupSpec::from_strings(parity == StepParity::Even ? kGroupXX
                                                                                  : kGroupXZ);
  } else {
    b.ideal_output = StabilizerGroupSpec::from_strings(parity == StepParity::Even ? kGroupZX
                                                                                  : kGroupZZ);
  }
  add_block_checks(b, {0, 1, 2, 3},
                   parity == StepParity::Even ? SpectatorMode::XPlus : SpectatorMode::ZPlus, "");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_encoded_measurement(Basis basis) {
  if (basis == Basis::Y) {
    throw std::invalid_argument("encoded measurements exist for X and Z only");
  }
  NetworkBundle b;
  b.name = std::string("encoded-meas-") + (basis == Basis::X ? "x" : "z");
  b.circuit.n = 4;
  b.circuit.steps.assign(3, {});
  // X measurement reads a Pi(X_L, Z_S) block; Z reads Pi(Z_L, X_S).
  Enc4Kind kind = basis == Basis::X ? Enc4Kind::XZ : Enc4Kind::ZX;
  enc4_preps(b.circuit.steps[0], kind, blk(0));
  enc4_cnots(b.circuit.steps[1], kind, blk(0));
  for (uint32_t q = 0; q < 4; q++) {
    b.circuit.steps[2].push_back(
        Gate::meas(basis == Basis::X ? GateKind::MeasXPost : GateKind::MeasZPost, q));
  }
  ReadoutDecl r;
  if (basis == Basis::X) {
    r.name = "XL";
    r.wires = {0, 1};
    r.flip_exemplar = PauliProduct::parse("[ZIZI]");
  } else {
    r.name = "ZL";
    r.wires = {0, 2};
    r.flip_exemplar = PauliProduct::parse("[XXII]");
  }
  r.exemplar_step = 1;
  b.readout_decls.push_back(std::move(r));
  finalize_bundle(b);
  return b;
}

NetworkBundle build_encoded_measurement_x_on_xplus() {
  NetworkBundle b;
  b.name = "encoded-meas-x-xplus";
  b.circuit.n = 4;
  b.circuit.steps.assign(3, {});
  enc4_preps(b.circuit.steps[0], Enc4Kind::ZX, blk(0));
  enc4_cnots(b.circuit.steps[1], Enc4Kind::ZX, blk(0));
  for (uint32_t q = 0; q < 4; q++) {
    b.circuit.steps[2].push_back(Gate::meas(GateKind::MeasXPost, q));
  }
  // The logical X outcome is random here; both X-type syndromes (XXXX and
  // X_S) become acceptance tags automatically.
  finalize_bundle(b);
  return b;
}

NetworkBundle build_encoded_hadamard() {
  NetworkBundle b;
  b.name = "encoded-hadamard";
  b.circuit.n = 4;
  b.circuit.steps.assign(4, {});
  enc4_preps(b.circuit.steps[0], Enc4Kind::XZ, blk(0));
  enc4_cnots(b.circuit.steps[1], Enc4Kind::XZ, blk(0));
  for (uint32_t q = 0; q < 4; q++) {
    b.circuit.steps[2].push_back(Gate::h(q));
  }
  b.circuit.steps[3].push_back(Gate::lswap(1, 2));
  b.outputs = iota_labels(0, 4);
  // H_L x H_S maps Pi(X_L, Z_S) to Pi(Z_L, X_S).
  b.ideal_output = StabilizerGroupSpec::from_strings(kGroupZX);
  add_block_checks(b, {0, 1, 2, 3}, SpectatorMode::XPlus, "");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_encoded_cnot(StepParity parity) {
  NetworkBundle b;
  b.name = parity == StepParity::Even ? "encoded-cnot-even" : "encoded-cnot-odd";
  b.circuit.n = 72;
  b.circuit.steps.assign(8, {});
  // Inputs must match the Bell sources' spectator mode: odd steps consume
  // X-plus blocks, even steps Z-plus blocks.
  Enc4Kind in_kind = parity == StepParity::Odd ? Enc4Kind::ZX : Enc4Kind::XZ;
  std::array<uint32_t, 4> c_in = blk(0), t_in = blk(4);
  enc4_preps(b.circuit.steps[0], in_kind, c_in);
  enc4_preps(b.circuit.steps[0], in_kind, t_in);
  enc4_cnots(b.circuit.steps[1], in_kind, c_in);
  enc4_cnots(b.circuit.steps[1], in_kind, t_in);

  BzxLayout bell_c = emit_bzx(b.circuit, 8, 0);
  BzxLayout bell_t = emit_bzx(b.circuit, 40, 0);
  auto dst_of = [&](const BzxLayout &l) { return parity == StepParity::Odd ? l.a_half : l.b_half; };
  auto src_of = [&](const BzxLayout &l) { return parity == StepParity::Odd ? l.b_half : l.a_half; };

  // Step 5 (the B_zx final measurement step): Bell-measurement cnots fire as
  // soon as the destination copies are free.
  for (uint32_t i = 0; i < 4; i++) {
    b.circuit.steps[5].push_back(Gate::cnot(c_in[i], src_of(bell_c)[i]));
    b.circuit.steps[5].push_back(Gate::cnot(t_in[i], src_of(bell_t)[i]));
  }
  // Step 6: the transversal cnot realizing the operation, interleaved so the
  // eight source measurements fire immediately...
  for (uint32_t i = 0; i < 4; i++) {
    b.circuit.steps[6].push_back(Gate::cnot(c_in[i], t_in[i]));
    b.circuit.steps[6].push_back(Gate::meas(GateKind::MeasZPost, src_of(bell_c)[i]));
    b.circuit.steps[6].push_back(Gate::meas(GateKind::MeasZPost, src_of(bell_t)[i]));
  }
  // ...and step 7: the eight input measurements, delayed by one step.
  for (uint32_t i = 0; i < 4; i++) {
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasXPost, c_in[i]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasXPost, t_in[i]));
  }

  b.outputs.clear();
  for (uint32_t q : dst_of(bell_c)) {
    b.outputs.push_back(q);
  }
  for (uint32_t q : dst_of(bell_t)) {
    b.outputs.push_back(q);
  }
  const auto &g = parity == StepParity::Odd ? kGroupZZ : kGroupXX;
  b.ideal_output = StabilizerGroupSpec::from_strings(pair_group(g, g));
  SpectatorMode out_mode =
      parity == StepParity::Odd ? SpectatorMode::ZPlus : SpectatorMode::XPlus;
  add_block_checks(b, {0, 1, 2, 3}, out_mode, "C.");
  add_block_checks(b, {4, 5, 6, 7}, out_mode, "T.");
  add_block_logicals(b, {0, 1, 2, 3}, "C");
  add_block_logicals(b, {4, 5, 6, 7}, "T");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_encode_arbitrary(EncodeMethod method, StepParity parity, Basis input_basis) {
  NetworkBundle b;
  GateKind input_prep = input_basis == Basis::Z   ? GateKind::PrepZ
                        : input_basis == Basis::X ? GateKind::PrepX
                                                  : GateKind::PrepY;
  if (method == EncodeMethod::Direct) {
    bool even = parity == StepParity::Even;
    b.name = std::string("encode-arbitrary-direct-") + (even ? "even" : "odd");
    b.circuit.n = 21;
    b.circuit.steps.assign(8, {});
    for (uint32_t copy = 0; copy < 4; copy++) {
      uint32_t q0 = 5 * copy, q1 = q0 + 1, q2 = q0 + 2, q3 = q0 + 3, q4 = q0 + 4;
      auto &s0 = b.circuit.steps[0];
      s0.push_back(Gate::prep(GateKind::PrepX, q0));
      s0.push_back(Gate::prep(GateKind::PrepZ, q1));
      s0.push_back(Gate::prep(GateKind::PrepZ, q2));
      s0.push_back(Gate::prep(GateKind::PrepX, q3));
      s0.push_back(Gate::prep(even ? GateKind::PrepZ : GateKind::PrepX, q4));
      if (even) {
        // Bell(0,1), then the Z_S-block encoder on wires 1..4.
        b.circuit.steps[1].push_back(Gate::cnot(q0, q1));
        b.circuit.steps[1].push_back(Gate::cnot(q3, q4));
        b.circuit.steps[2].push_back(Gate::cnot(q1, q2));
        b.circuit.steps[3].push_back(Gate::cnot(q3, q1));
        b.circuit.steps[3].push_back(Gate::cnot(q4, q2));
      } else {
        // The X_S-block variant.
        b.circuit.steps[1].push_back(Gate::cnot(q0, q1));
        b.circuit.steps[1].push_back(Gate::cnot(q4, q2));
        b.circuit.steps[2].push_back(Gate::cnot(q3, q1));
        b.circuit.steps[3].push_back(Gate::cnot(q1, q2));
        b.circuit.steps[3].push_back(Gate::cnot(q3, q4));
      }
      if (copy == 0) {
        // The one unavoidable memory delay of the preparation.
        b.circuit.steps[2].push_back(Gate::delay(q4));
      }
    }
    b.circuit.steps[0].push_back(Gate::prep(input_prep, 20));
    PurifySteps ps = purification(PurifyOrder::ZX, {0, 5, 10, 15}, 5);
    auto &s4 = b.circuit.steps[4];
    s4.insert(s4.end(), ps.stage1_cnots.begin(), ps.stage1_cnots.end());
    auto &s5 = b.circuit.steps[5];
    s5.insert(s5.end(), ps.stage1_meas.begin(), ps.stage1_meas.end());
    s5.insert(s5.end(), ps.stage2_cnots.begin(), ps.stage2_cnots.end());
    auto &s6 = b.circuit.steps[6];
    s6.insert(s6.end(), ps.stage2_meas.begin(), ps.stage2_meas.end());
    s6.push_back(Gate::cnot(20, 0));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasXPost, 20));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasZPost, 0));
    b.outputs = {1, 2, 3, 4};
    add_block_checks(b, {0, 1, 2, 3},
                     even ? SpectatorMode::ZPlus : SpectatorMode::XPlus, "");
    add_block_logicals(b, {0, 1, 2, 3}, "L");
    finalize_bundle(b);
    return b;
  }

  bool even = parity == StepParity::Even;
  b.name = "encode-arbitrary-belldecode";
  b.circuit.n = 33;
  BzxLayout lay = emit_bzx(b.circuit, 0, 0);
  b.circuit.steps[0].push_back(Gate::prep(input_prep, 32));
  while (b.circuit.steps.size() < 9) {
    b.circuit.steps.emplace_back();
  }
  // Decode the coupling half, teleport the input through the freed qubit.
  const auto &dec = even ? lay.a_half : lay.b_half;
  const auto &out = even ? lay.b_half : lay.a_half;
  if (even) {  // D_z on the Z_S half
    b.circuit.steps[5].push_back(Gate::cnot(dec[2], dec[0]));
    b.circuit.steps[5].push_back(Gate::cnot(dec[3], dec[1]));
    b.circuit.steps[6].push_back(Gate::cnot(dec[0], dec[1]));
    b.circuit.steps[6].push_back(Gate::cnot(dec[2], dec[3]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasZPost, dec[1]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasXPost, dec[2]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasZPost, dec[3]));
  } else {  // D_x on the X_S half
    b.circuit.steps[5].push_back(Gate::cnot(dec[0], dec[1]));
    b.circuit.steps[5].push_back(Gate::cnot(dec[2], dec[3]));
    b.circuit.steps[6].push_back(Gate::cnot(dec[2], dec[0]));
    b.circuit.steps[6].push_back(Gate::cnot(dec[3], dec[1]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasZPost, dec[1]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasXPost, dec[2]));
    b.circuit.steps[7].push_back(Gate::meas(GateKind::MeasXPost, dec[3]));
  }
  b.circuit.steps[7].push_back(Gate::cnot(32, dec[0]));
  b.circuit.steps[8].push_back(Gate::meas(GateKind::MeasXPost, 32));
  b.circuit.steps[8].push_back(Gate::meas(GateKind::MeasZPost, dec[0]));
  b.outputs.assign(out.begin(), out.end());
  add_block_checks(b, {0, 1, 2, 3}, even ? SpectatorMode::XPlus : SpectatorMode::ZPlus, "");
  add_block_logicals(b, {0, 1, 2, 3}, "L");
  finalize_bundle(b);
  return b;
}

NetworkBundle build_decoder(DecoderKind kind) {
  NetworkBundle b;
  b.name = kind == DecoderKind::Dz ? "decoder-dz" : "decoder-dx";
  b.circuit.n = 4;
  b.circuit.steps.assign(5, {});
  // D_z decodes Z-plus blocks, D_x decodes X-plus blocks.
  Enc4Kind kind4 = kind == DecoderKind::Dz ? Enc4Kind::XZ : Enc4Kind::ZX;
  enc4_preps(b.circuit.steps[0], kind4, blk(0));
  enc4_cnots(b.circuit.steps[1], kind4, blk(0));
  if (kind == DecoderKind::Dz) {
    b.circuit.steps[2].push_back(Gate::cnot(2, 0));
    b.circuit.steps[2].push_back(Gate::cnot(3, 1));
    b.circuit.steps[3].push_back(Gate::cnot(0, 1));
    b.circuit.steps[3].push_back(Gate::cnot(2, 3));
    b.circuit.steps[4].push_back(Gate::meas(GateKind::MeasZPost, 1));  // ZZZZ
    b.circuit.steps[4].push_back(Gate::meas(GateKind::MeasXPost, 2));  // XXXX
    b.circuit.steps[4].push_back(Gate::meas(GateKind::MeasZPost, 3));  // Z_S
  } else {
    b.circuit.steps[2].push_back(Gate::cnot(0, 1));
    b.circuit.steps[2].push_back(Gate::cnot(2, 3));
    b.circuit.steps[3].push_back(Gate::cnot(2, 0));
    b.circuit.steps[3].push_back(Gate::cnot(3, 1));
    b.circuit.steps[4].push_back(Gate::meas(GateKind::MeasZPost, 1));  // ZZZZ
    b.circuit.steps[4].push_back(Gate::meas(GateKind::MeasXPost, 2));  // XXXX
    b.circuit.steps[4].push_back(Gate::meas(GateKind::MeasXPost, 3));  // X_S
  }
  // The terminal wait for the last decoder outcome (one memory delay).
  b.circuit.steps[4].push_back(Gate::delay(0));
  b.outputs = {0};
  b.ideal_output =
      StabilizerGroupSpec::from_strings({kind == DecoderKind::Dz ? "[X]" : "[Z]"});
  b.logicals.push_back({"q", PauliProduct::parse("[X]"), PauliProduct::parse("[Z]")});
  finalize_bundle(b);
  return b;
}

NetworkBundle build_ipi4_purify() {
  NetworkBundle b;
  b.name = "ipi4-purify";
  b.circuit.n = 2;
  b.circuit.steps.assign(6, {});
  b.circuit.steps[0].push_back(Gate::prep(GateKind::PrepY, 0));
  b.circuit.steps[0].push_back(Gate::prep(GateKind::PrepY, 1));
  // Controlled-XZ from wire 1 onto wire 0: CZ then cnot.
  b.circuit.steps[1].push_back(Gate::h(0));
  b.circuit.steps[2].push_back(Gate::cnot(1, 0));
  b.circuit.steps[3].push_back(Gate::h(0));
  b.circuit.steps[4].push_back(Gate::cnot(1, 0));
  b.circuit.steps[5].push_back(Gate::meas(GateKind::MeasXPost, 1));
  b.outputs = {0};
  b.ideal_output = StabilizerGroupSpec::from_strings({"[Y]"});
  b.logicals.push_back({"q", PauliProduct::parse("[X]"), PauliProduct::parse("[Z]")});
  finalize_bundle(b);
  return b;
}

NetworkBundle build_rotation_xpi4(Basis input_basis) {
  NetworkBundle b;
  b.name = "rotation-xpi4";
  b.circuit.n = 2;
  b.circuit.steps.assign(3, {});
  GateKind input_prep = input_basis == Basis::Z   ? GateKind::PrepZ
                        : input_basis == Basis::X ? GateKind::PrepX
                                                  : GateKind::PrepY;
  b.circuit.steps[0].push_back(Gate::prep(input_prep, 0));
  b.circuit.steps[0].push_back(Gate::prep(GateKind::PrepY, 1));
  b.circuit.steps[1].push_back(Gate::cnot(1, 0));
  b.circuit.steps[2].push_back(Gate::meas(GateKind::MeasXPost, 1, -1));
  b.outputs = {0};
  // e^{-i sigma_x pi/4} maps Z -> -Y, X -> X, Y -> Z eigenstates.
  std::string ideal = input_basis == Basis::Z ? "-[Y]" : input_basis == Basis::X ? "[X]" : "[Z]";
  b.ideal_output = StabilizerGroupSpec::from_strings({ideal});
  b.logicals.push_back({"q", PauliProduct::parse("[X]"), PauliProduct::parse("[Z]")});
  finalize_bundle(b);
  return b;
}

std::vector<std::string> network_names() {
  return {
      "enc4-zx",        "enc4-xz",
      "telestate",      "purify1-zx",
      "purify1-xz",     "bzx-even",
      "bzx-odd",        "encoded-prep-x-even",
      "encoded-prep-z-even", "encoded-prep-x-odd",
      "encoded-prep-z-odd",  "encoded-meas-x",
      "encoded-meas-z", "encoded-meas-x-xplus",
      "encoded-hadamard",    "encoded-cnot-odd",
      "encoded-cnot-even",   "encode-arbitrary-direct-even",
      "encode-arbitrary-direct-odd", "encode-arbitrary-belldecode",
      "decoder-dz",     "decoder-dx",
      "ipi4-purify",    "rotation-xpi4",
  };
}

NetworkBundle build_network(const std::string &name) {
  if (name == "enc4-zx") return build_enc4(Enc4Kind::ZX);
  if (name == "enc4-xz") return build_enc4(Enc4Kind::XZ);
  if (name == "telestate") return build_telestate();
  if (name == "purify1-zx") return build_purify1(PurifyOrder::ZX);
  if (name == "purify1-xz") return build_purify1(PurifyOrder::XZ);
  if (name == "bzx-even") return build_bzx(StepParity::Even);
  if (name == "bzx-odd") return build_bzx(StepParity::Odd);
  if (name == "encoded-prep-x-even") return build_encoded_prep(Basis::X, StepParity::Even);
  if (name == "encoded-prep-z-even") return build_encoded_prep(Basis::Z, StepParity::Even);
  if (name == "encoded-prep-x-odd") return build_encoded_prep(Basis::X, StepParity::Odd);
  if (name == "encoded-prep-z-odd") return build_encoded_prep(Basis::Z, StepParity::Odd);
  if (name == "encoded-meas-x") return build_encoded_measurement(Basis::X);
  if (name == "encoded-meas-z") return build_encoded_measurement(Basis::Z);
  if (name == "encoded-meas-x-xplus") return build_encoded_measurement_x_on_xplus();
  if (name == "encoded-hadamard") return build_encoded_hadamard();
  if (name == "encoded-cnot-odd") return build_encoded_cnot(StepParity::Odd);
  if (name == "encoded-cnot-even") return build_encoded_cnot(StepParity::Even);
  if (name == "encode-arbitrary-direct-even")
    return build_encode_arbitrary(EncodeMethod::Direct, StepParity::Even);
  if (name == "encode-arbitrary-direct-odd")
    return build_encode_arbitrary(EncodeMethod::Direct, StepParity::Odd);
  if (name == "encode-arbitrary-belldecode")
    return build_encode_arbitrary(EncodeMethod::BellDecode, StepParity::Even);
  if (name == "decoder-dz") return build_decoder(DecoderKind::Dz);
  if (name == "decoder-dx") return build_decoder(DecoderKind::Dx);
  if (name == "ipi4-purify") return build_ipi4_purify();
  if (name == "rotation-xpi4") return build_rotation_xpi4();
  throw std::invalid_argument("unknown network '" + name + "'; see network_names()");
}

}  // namespace postsim
