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

#include "qislab/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace qislab {

std::string to_string(Scheme scheme) {
    return scheme == Scheme::Cluster ? "cluster" : "brown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "cluster") {
        return Scheme::Cluster;
    }
    if (name == "brown") {
        return Scheme::Brown;
    }
    return std::nullopt;
}

}  // namespace qislab

namespace qislab::protocol {

namespace {

using SignMatrix = std::array<std::array<int, 4>, 4>;

// Inverse of the map input -> Charlie's post-Bob state, indexed
// [alice_outcome][bob_outcome]. Cluster entries are exact; Brown entries are
// scaled by 1/sqrt2. Regenerated from the branch oracle in verify_test.
constexpr std::array<std::array<SignMatrix, 2>, 4> kClusterCorrections = {{
    {{
        {{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
        {{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, -1, 0}}},
    }},
    {{
        {{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 0, -1, 0}, {0, 1, 0, 0}}},
        {{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}}},
    }},
    {{
        {{{0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}},
        {{{0, 1, 0, 0}, {0, 0, -1, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}},
    }},
    {{
        {{{0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}},
        {{{0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}},
    }},
}};

constexpr std::array<std::array<SignMatrix, 2>, 4> kBrownCorrections = {{
    {{
        {{{0, 1, -1, 0}, {1, 0, 0, -1}, {0, 1, 1, 0}, {1, 0, 0, 1}}},
        {{{0, -1, 1, 0}, {1, 0, 0, -1}, {0, 1, 1, 0}, {-1, 0, 0, -1}}},
    }},
    {{
        {{{-1, 0, 0, 1}, {0, 1, -1, 0}, {-1, 0, 0, -1}, {0, 1, 1, 0}}},
        {{{-1, 0, 0, 1}, {0, -1, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}}},
    }},
    {{
        {{{0, -1, -1, 0}, {1, 0, 0, 1}, {0, 1, -1, 0}, {-1, 0, 0, 1}}},
        {{{0, -1, -1, 0}, {-1, 0, 0, -1}, {0, -1, 1, 0}, {-1, 0, 0, 1}}},
    }},
    {{
        {{{-1, 0, 0, -1}, {0, -1, -1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}}},
        {{{1, 0, 0, 1}, {0, -1, -1, 0}, {1, 0, 0, -1}, {0, -1, 1, 0}}},
    }},
}};

void check_branch(int alice_outcome, int bob_outcome) {
    if (alice_outcome < 0 || alice_outcome > 3 || bob_outcome < 0 || bob_outcome > 1) {
        throw DimensionError("branch (" + std::to_string(alice_outcome) + ", " + std::to_string(bob_outcome) +
                             ") out of range");
    }
}

std::vector<std::size_t> shifted(const std::vector<std::size_t> &qubits, std::size_t offset) {
    std::vector<std::size_t> out;
    out.reserve(qubits.size());
    for (std::size_t q : qubits) {
        out.push_back(q + offset);
    }
    return out;
}

// Positions of `qubits` within `order` (the register after earlier removals).
std::vector<std::size_t> positions_in(const std::vector<std::size_t> &order, const std::vector<std::size_t> &qubits) {
    std::vector<std::size_t> out;
    for (std::size_t q : qubits) {
        const auto it = std::find(order.begin(), order.end(), q);
        out.push_back(static_cast<std::size_t>(it - order.begin()));
    }
    return out;
}

void remove_all(std::vector<std::size_t> &order, const std::vector<std::size_t> &qubits) {
    std::erase_if(order, [&](std::size_t q) { return std::find(qubits.begin(), qubits.end(), q) != qubits.end(); });
}

}  // namespace

PartyLayout PartyLayout::for_scheme(Scheme scheme) {
    if (scheme == Scheme::Cluster) {
        return {{0, 4}, {1}, {2, 3}};
    }
    return {{0, 1}, {2}, {3, 4}};
}

std::string to_string(Party party) {
    switch (party) {
        case Party::Alice:
            return "alice";
        case Party::Bob:
            return "bob";
        case Party::Charlie:
            return "charlie";
    }
    return "unknown";
}

bool branch_requires_phase(Scheme, int alice_outcome) {
    return alice_outcome == 0 || alice_outcome == 2;
}

Unitary input_independent_correction(Scheme scheme, int alice_outcome, int bob_outcome) {
    check_branch(alice_outcome, bob_outcome);
    const auto a = static_cast<std::size_t>(alice_outcome);
    const auto b = static_cast<std::size_t>(bob_outcome);
    const SignMatrix &signs = scheme == Scheme::Cluster ? kClusterCorrections[a][b] : kBrownCorrections[a][b];
    const double scale = scheme == Scheme::Cluster ? 1.0 : 1.0 / std::numbers::sqrt2;
    Eigen::MatrixXcd m(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            m(i, j) = scale * signs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return Unitary(std::move(m));
}

Unitary charlie_phase_gate(double phi) {
    const Amplitude e = std::polar(1.0, 2.0 * phi);
    const std::array<Amplitude, 4> d = {1.0, 1.0, e, e};
    return Unitary::diagonal(d);
}

Unitary conjugate_phase_fix(double phi) {
    const Amplitude e = std::polar(1.0, 2.0 * phi);
    const std::array<Amplitude, 4> d = {1.0, e, 1.0, e};
    return Unitary::diagonal(d);
}

Unitary correction_unitary(Scheme scheme, int alice_outcome, int bob_outcome, const CorrectionMode &mode) {
    Unitary base = input_independent_correction(scheme, alice_outcome, bob_outcome);
    if (!branch_requires_phase(scheme, alice_outcome)) {
        return base;
    }
    if (const auto *known = std::get_if<ReceiverKnowsPhase>(&mode)) {
        return conjugate_phase_fix(known->phi) * base;
    }
    throw UncorrectableBranch("branch (" + std::to_string(alice_outcome) + ", " + std::to_string(bob_outcome) +
                              ") of the " + to_string(scheme) + " scheme has no input-independent correction");
}

std::string encode_alice_outcome(int outcome) {
    if (outcome < 0 || outcome > 3) {
        throw DimensionError("Alice outcome must be 0..3");
    }
    return {static_cast<char>('0' + ((outcome >> 1) & 1)), static_cast<char>('0' + (outcome & 1))};
}

std::string encode_bob_outcome(int outcome) {
    if (outcome < 0 || outcome > 1) {
        throw DimensionError("Bob outcome must be 0..1");
    }
    return outcome == 0 ? "0" : "1";
}

RunResult run_qis(Scheme scheme, const states::InputParams &input, const CorrectionMode &mode,
                  std::optional<ForcedBranch> forced, Rng &rng) {
    if (forced) {
        check_branch(forced->alice, forced->bob);
    }
    const PartyLayout layout = PartyLayout::for_scheme(scheme);
    auto basis = states::alice_basis(input);
    if (const auto *diag = std::get_if<states::BasisDiagnostic>(&basis)) {
        throw InadmissibleInput(*diag);
    }

    // Register: input on qubits 0-1, resource on 2-6.
    constexpr std::size_t kOffset = 2;
    const PureState psi = states::input_state(input);
    const PureState resource = scheme == Scheme::Cluster ? states::cluster5() : states::brown5();
    const PureState joint = tensor(psi, resource);
    std::vector<std::size_t> order = {0, 1, 2, 3, 4, 5, 6};

    const auto alice_qubits = shifted(layout.alice, kOffset);
    const auto alice_measurement = std::get<OrthonormalBasis>(basis).retargeted(positions_in(order, alice_qubits));
    std::optional<std::size_t> forced_alice;
    if (forced) {
        forced_alice = static_cast<std::size_t>(forced->alice);
    }
    const MeasurementResult after_alice = measure(joint, alice_measurement, forced_alice, rng);
    remove_all(order, alice_qubits);
    const int alice_outcome = static_cast<int>(after_alice.outcome_index);

    std::vector<ClassicalMessage> transcript;
    transcript.push_back({1, Party::Alice, Party::Charlie, encode_alice_outcome(alice_outcome),
                          "alice_outcome=" + std::to_string(alice_outcome)});

    const auto bob_qubits = shifted(layout.bob, kOffset);
    const auto bob_measurement = states::bob_basis(positions_in(order, bob_qubits).front());
    std::optional<std::size_t> forced_bob;
    if (forced) {
        forced_bob = static_cast<std::size_t>(forced->bob);
    }
    const MeasurementResult after_bob = measure(after_alice.post_state, bob_measurement, forced_bob, rng);
    remove_all(order, bob_qubits);
    const int bob_outcome = static_cast<int>(after_bob.outcome_index);
    transcript.push_back({2, Party::Bob, Party::Charlie, encode_bob_outcome(bob_outcome),
                          std::string("bob_outcome=") + (bob_outcome == 0 ? "+" : "-")});

    // Alice's copy of the input never interacts; strip it to get Charlie's qubits.
    const std::vector<std::size_t> input_positions = positions_in(order, {0, 1});
    const PureState pre = discard_factor(after_bob.post_state, input_positions, psi);

    bool exact = true;
    std::optional<Unitary> correction;
    try {
        correction = correction_unitary(scheme, alice_outcome, bob_outcome, mode);
    } catch (const UncorrectableBranch &) {
        correction = input_independent_correction(scheme, alice_outcome, bob_outcome);
        exact = false;
    }
    const std::vector<std::size_t> charlie_targets = {0, 1};
    PureState corrected = apply_unitary(pre, charlie_targets, *correction);
    const double fidelity = fidelity_up_to_global_phase(corrected, psi);

    return RunResult{
        .scheme = scheme,
        .alice_outcome = alice_outcome,
        .bob_outcome = bob_outcome,
        .alice_probability = after_alice.probability,
        .bob_probability = after_bob.probability,
        .transcript = std::move(transcript),
        .pre_correction_state = pre,
        .charlie_state = std::move(corrected),
        .fidelity = fidelity,
        .success = fidelity >= 1.0 - kSuccessTolerance,
        .correction_used = *correction,
        .correction_exact = exact,
    };
}

ClassicalCost classical_cost(std::span<const ClassicalMessage> transcript) {
    if (transcript.size() != 2) {
        throw TranscriptError("a completed run has exactly two messages, got " + std::to_string(transcript.size()));
    }
    for (const auto &m : transcript) {
        if (m.bits.empty() || m.bits.find_first_not_of("01") != std::string::npos) {
            throw TranscriptError("message bits must be a nonempty 0/1 string");
        }
        if (m.receiver != Party::Charlie) {
            throw TranscriptError("every message goes to Charlie");
        }
    }
    const ClassicalMessage &first = transcript[0];
    const ClassicalMessage &second = transcript[1];
    if (first.sender != Party::Alice || second.sender != Party::Bob) {
        throw TranscriptError("expected Alice's message followed by Bob's");
    }
    if (static_cast<int>(first.bits.size()) != kAliceMessageBits ||
        static_cast<int>(second.bits.size()) != kBobMessageBits) {
        throw TranscriptError("Alice sends 2 bits and Bob sends 1 bit");
    }
    return {static_cast<int>(first.bits.size()), static_cast<int>(second.bits.size()), kUnknownStateBaselineBits};
}

ClassicalCost classical_cost(const RunResult &result) {
    return classical_cost(result.transcript);
}

}  // namespace qislab::protocol
