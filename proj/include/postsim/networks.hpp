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

#ifndef POSTSIM_NETWORKS_HPP
#define POSTSIM_NETWORKS_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "postsim/bundle.hpp"

namespace postsim {

/// The four-qubit code's two operating modes: the spectator qubit is kept in
/// a known X or Z eigenstate, alternating with the step parity (even steps
/// emit X-plus blocks, odd steps Z-plus blocks).
enum class SpectatorMode : uint8_t { XPlus, ZPlus };

enum class StepParity : uint8_t { Even, Odd };

const char *spectator_name(SpectatorMode m);

/// Encoded operator words of the four-qubit code, embedded at the given
/// output slots (indices into a bundle's output list) of a width-m operator.
PauliProduct block_word(size_t width, const std::array<uint32_t, 4> &slots,
                        const char *word);

// Operator words (qubits 1..4 left to right): logical X/Z, spectator X/Z.
inline constexpr const char *kWordXL = "XXII";
inline constexpr const char *kWordZL = "ZIZI";
inline constexpr const char *kWordXS = "IXIX";
inline constexpr const char *kWordZS = "IIZZ";
inline constexpr const char *kWordXXXX = "XXXX";
inline constexpr const char *kWordZZZZ = "ZZZZ";

enum class Enc4Kind : uint8_t { ZX, XZ };  // |0+>_LS and |+0>_LS

/// Fundamental encoding networks: two Bell pairs on crossed pairings.
/// ZX outputs Pi(Z_L, X_S, XXXX, ZZZZ); XZ outputs Pi(X_L, Z_S, ...).
NetworkBundle build_enc4(Enc4Kind kind);

/// The encoded-Bell teleportation state: |+0> on qubits 1-4, |0+> on 5-8,
/// then four transversal cnots; depth three.
NetworkBundle build_telestate();

enum class PurifyOrder : uint8_t { ZX, XZ };  // X syndromes first / Z first

/// One-qubit-output purification applied transversally across four
/// identically prepared |0+> blocks; postselected on every measurement in
/// strict mode.
NetworkBundle build_purify1(PurifyOrder order);

/// B_zx: four telestate copies purified down to one (X syndromes then Z).
/// Parity picks which half is the destination: even -> the X_S half,
/// odd -> the Z_S half.
NetworkBundle build_bzx(StepParity parity);

/// Encoded one-qubit preparations: B_zx plus transversal measurements on the
/// coupling half. X-basis preparation yields Pi(X_L), Z-basis Pi(Z_L).
NetworkBundle build_encoded_prep(Basis basis, StepParity parity);

/// Transversal measurement of an encoded block with syndrome acceptance and
/// a logical readout. basis X measures a Pi(X_L, Z_S) block; basis Z a
/// Pi(Z_L, X_S) block.
NetworkBundle build_encoded_measurement(Basis basis);

/// X measurement of a Pi(Z_L, X_S) block: the logical outcome is random, and
/// both X-type syndromes (XXXX and X_S) are checked.
NetworkBundle build_encoded_measurement_x_on_xplus();

/// Transversal Hadamard with the middle-two logical swap: maps X_L<->Z_L and
/// X_S<->Z_S, toggling the spectator mode.
NetworkBundle build_encoded_hadamard();

/// Teleported encoded cnot: two input blocks, two destination Bell states of
/// the given parity, a transversal cnot interleaved with the Bell-measurement
/// cnots so eight measurements fire immediately and eight one step later.
NetworkBundle build_encoded_cnot(StepParity parity);

enum class EncodeMethod : uint8_t { Direct, BellDecode };

/// Encoding an arbitrary one-qubit state into the code by teleportation.
/// Direct builds the one-error-detecting five-qubit entangled state
/// Pi([IXXXX],[IZZZZ],[IIIZZ],[XXXII],[ZZIZI]) (even parity; the odd variant
/// has spectator X_S), purifies four copies, and teleports. BellDecode
/// decodes one half of a purified encoded Bell pair with D_z and teleports.
/// The input wire is prepared in `input_basis` for tableau runs.
NetworkBundle build_encode_arbitrary(EncodeMethod method, StepParity parity,
                                     Basis input_basis = Basis::Z);

enum class DecoderKind : uint8_t { Dz, Dx };

/// 4 -> 1 decoding networks. D_z decodes a Z-plus block (syndromes ZZZZ,
/// XXXX, Z_S on the three measured qubits); D_x an X-plus block. The bundle
/// prepares a matching enc4 input and carries the one terminal memory-delay
/// location on the surviving qubit.
NetworkBundle build_decoder(DecoderKind kind);

/// Fig. 12: |i pi/4> purification. Two PrepY resources, a controlled-X*Z
/// composite (two cnots and two Hadamards), X measurement postselected +1;
/// the first resource is the output.
NetworkBundle build_ipi4_purify();

/// Teleported e^{-i sigma_x pi/4}: PrepY resource as cnot control onto the
/// input, X measurement postselected on -1.
NetworkBundle build_rotation_xpi4(Basis input_basis = Basis::Z);

/// Registry of every named network for the CLI and the test suites.
std::vector<std::string> network_names();
NetworkBundle build_network(const std::string &name);

}  // namespace postsim

#endif
