// Copyright 2026 The qislab Authors
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

/**
 * @file
 * One execution of the two-receiver splitting protocol.
 *
 * Alice knows the two-qubit input and measures her two resource qubits in a
 * basis built from its coefficients. She sends her 2-bit outcome to Charlie.
 * Bob measures his single qubit in the X basis and sends 1 bit to Charlie,
 * who then applies a two-qubit correction and holds the input state.
 *
 * Resource qubits are numbered 0..4. Cluster: Alice {0,4}, Bob {1},
 * Charlie {2,3}. Brown: Alice {0,1}, Bob {2}, Charlie {3,4}.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qislab/qstate.hpp"
#include "qislab/states.hpp"

namespace qislab {

enum class Scheme { Cluster, Brown };

std::string to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

}  // namespace qislab

namespace qislab::protocol {

struct PartyLayout {
    std::vector<std::size_t> alice;
    std::vector<std::size_t> bob;
    std::vector<std::size_t> charlie;

    static PartyLayout for_scheme(Scheme scheme);
};

/// Charlie is told the common phase of beta and delta (the equatorial phi)
/// and may use a phi-dependent gate.
struct ReceiverKnowsPhase {
    double phi = 0.0;
};
/// Charlie may only use corrections that work for every admissible input.
struct InputIndependentOnly {};

using CorrectionMode = std::variant<ReceiverKnowsPhase, InputIndependentOnly>;

enum class Party { Alice, Bob, Charlie };
std::string to_string(Party party);

struct ClassicalMessage {
    int step = 0;
    Party sender = Party::Alice;
    Party receiver = Party::Charlie;
    /// '0'/'1' characters, most significant bit first.
    std::string bits;
    std::string label;
};

struct ForcedBranch {
    int alice = 0;
    int bob = 0;
};

inline constexpr int kAliceMessageBits = 2;
inline constexpr int kBobMessageBits = 1;
/// Cost of the sender-unknown protocol this one is compared against.
inline constexpr int kUnknownStateBaselineBits = 4;
/// A run succeeds when fidelity >= 1 - kSuccessTolerance.
inline constexpr double kSuccessTolerance = 1e-9;

struct RunResult {
    Scheme scheme = Scheme::Cluster;
    int alice_outcome = 0;
    int bob_outcome = 0;
    double alice_probability = 0.0;
    /// Conditional on Alice's outcome.
    double bob_probability = 0.0;
    std::vector<ClassicalMessage> transcript;
    /// Charlie's two qubits after Bob's measurement, before correction.
    PureState pre_correction_state;
    PureState charlie_state;
    double fidelity = 0.0;
    bool success = false;
    Unitary correction_used;
    /// False when the branch had no exact correction under the given mode.
    bool correction_exact = true;
};

/// The sender's coefficients do not define an orthonormal basis.
class InadmissibleInput : public Error {
  public:
    explicit InadmissibleInput(states::BasisDiagnostic diagnostic)
        : Error(diagnostic.message), diagnostic_(std::move(diagnostic)) {
    }
    const states::BasisDiagnostic &diagnostic() const {
        return diagnostic_;
    }

  private:
    states::BasisDiagnostic diagnostic_;
};

/// No input-independent correction exists for the requested branch.
class UncorrectableBranch : public Error {
  public:
    using Error::Error;
};

class TranscriptError : public Error {
  public:
    using Error::Error;
};

/// True for branches whose post-Bob state carries conjugated beta and delta,
/// so exact recovery needs the phase. These are Alice's outcomes 0 and 2 in
/// both schemes; verify::correctability re-derives it.
bool branch_requires_phase(Scheme scheme, int alice_outcome);

/// Fixed basis change taking Charlie's post-Bob state to the input (up to the
/// conjugation of beta and delta on phase-dependent branches).
Unitary input_independent_correction(Scheme scheme, int alice_outcome, int bob_outcome);

/// diag(1, 1, e^{2i phi}, e^{2i phi}): phase e^{2i phi} whenever Charlie's
/// first qubit is |1>.
Unitary charlie_phase_gate(double phi);

/// diag(1, e^{2i phi}, 1, e^{2i phi}) in the input's own basis: restores
/// beta and delta from their conjugates for phase-locked inputs.
Unitary conjugate_phase_fix(double phi);

/// Correction for one branch. Throws UncorrectableBranch when the branch needs
/// the phase and `mode` is InputIndependentOnly.
Unitary correction_unitary(Scheme scheme, int alice_outcome, int bob_outcome, const CorrectionMode &mode);

/// Throws InadmissibleInput before any quantum operation when the sender's
/// basis is not orthonormal, and DimensionError on an out-of-range forced branch.
RunResult run_qis(Scheme scheme, const states::InputParams &input, const CorrectionMode &mode,
                  std::optional<ForcedBranch> forced, Rng &rng);

std::string encode_alice_outcome(int outcome);
std::string encode_bob_outcome(int outcome);

struct ClassicalCost {
    int alice_bits = 0;
    int bob_bits = 0;
    int baseline_bits = kUnknownStateBaselineBits;

    bool operator==(const ClassicalCost &) const = default;
};

/// Counts the bits each sender put on the wire. Throws TranscriptError unless
/// the transcript holds exactly Alice's 2-bit and then Bob's 1-bit message to Charlie.
ClassicalCost classical_cost(std::span<const ClassicalMessage> transcript);
ClassicalCost classical_cost(const RunResult &result);

}  // namespace qislab::protocol
