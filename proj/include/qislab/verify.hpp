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
 * Brute-force branch oracle.
 *
 * Everything here is computed from explicit ket expansions of the resource
 * states and direct inner products. It shares no code path with
 * protocol::run_qis or qislab::measure, so agreement between the two is a
 * real check.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qislab/protocol.hpp"
#include "qislab/qstate.hpp"
#include "qislab/states.hpp"

namespace qislab::verify {

enum class Stage { AfterAlice, AfterBob };

struct BranchRecord {
    int alice_outcome = 0;
    std::optional<int> bob_outcome;
    /// Joint probability of the branch.
    double probability = 0.0;
    /// P(bob | alice) for AfterBob records; equals `probability` for AfterAlice.
    double conditional_probability = 0.0;
    /// Bob+Charlie (3 qubits) after Alice, Charlie (2 qubits) after Bob.
    /// Phase is exactly that of the direct projection.
    PureState residual_state;
};

/// Resource states expanded term by term from their printed definitions.
PureState oracle_cluster5();
PureState oracle_brown5();

/// 4 records (AfterAlice) or 8 records (AfterBob), ordered by (alice, bob).
/// Throws protocol::InadmissibleInput when the sender's basis is not orthonormal.
std::vector<BranchRecord> enumerate_branches(Scheme scheme, const states::InputParams &p, Stage stage);

/// Oracle solve for the fixed part of a branch correction: the inverse of the
/// linear map from the input coefficients to Charlie's post-Bob state, taken
/// from the four computational-basis inputs.
Unitary derive_correction(Scheme scheme, int alice_outcome, int bob_outcome);

/// Charlie's equatorial post-Bob state for Alice's outcome 0 as printed, with
/// the bracket typos repaired:
///   cluster: (|00> + e^{-i phi}|11> +- |01> +- e^{-i phi}|10>)/2
///   brown:   +-(|01>-|10>) + e^{-i phi}(|00>-|11>) + (|01>+|10>) +- e^{-i phi}(|00>+|11>), normalized
/// The sign is + for bob_outcome 0.
PureState printed_post_bob_state(Scheme scheme, double phi, int bob_outcome);

enum class DeviationKind { Sign, Conjugation, Normalization, Bracket };
std::string to_string(DeviationKind kind);

struct Deviation {
    std::string location;
    std::string printed;
    std::string derived;
    DeviationKind classification = DeviationKind::Sign;

    bool operator==(const Deviation &) const = default;
};

struct DeviationReport {
    std::vector<Deviation> entries;

    bool operator==(const DeviationReport &) const = default;
};

/// Compares the printed sender basis, branch tables, eta states, Bob's basis
/// and collapse formulas against the oracle for one input. Deterministic.
/// Throws protocol::InadmissibleInput like enumerate_branches.
DeviationReport check_table(Scheme scheme, const states::InputParams &p);

/// check_table at two fixed inputs, an equatorial one (phi = pi/3, which
/// also exercises the collapse formulas) and a phase-locked one with unequal
/// magnitudes (which exposes conjugation errors), merged without duplicates.
DeviationReport standard_deviation_report(Scheme scheme);

/// Rotates a state so its first amplitude with modulus above 1e-12 is real
/// and positive.
PureState canonical_phase(const PureState &s);

/// True when both states agree entrywise within `tolerance` after canonical_phase.
bool equal_up_to_global_phase(const PureState &a, const PureState &b, double tolerance);

inline constexpr double kGramTolerance = 1e-9;
inline constexpr std::size_t kMinCorrectabilitySamples = 8;
inline constexpr std::uint64_t kCorrectabilitySeed = 0x5eedu;
inline constexpr std::size_t kCorrectabilitySampleCount = 16;

/// The fixed-seed sample family: random_alpha_gamma_real_input draws.
std::vector<states::InputParams> correctability_samples(std::uint64_t seed = kCorrectabilitySeed,
                                                        std::size_t count = kCorrectabilitySampleCount);

/// True iff, for each of Bob's outcomes separately, the Gram matrix of
/// Charlie's post-Bob states equals the Gram matrix of the inputs within
/// kGramTolerance, i.e. one fixed unitary maps every post-state to its
/// input. Throws ValueError with fewer than 8 samples, inadmissible samples,
/// or a parallel pair.
bool correctability(Scheme scheme, int alice_outcome, std::span<const states::InputParams> samples);

struct SweepRow {
    Scheme scheme = Scheme::Cluster;
    double phi = 0.0;
    int alice_outcome = 0;
    int bob_outcome = 0;
    double fidelity = 0.0;
    bool success = false;
};

/// Runs the protocol over equatorial inputs with ReceiverKnowsPhase(phi).
/// With forced_all_branches every (alice, bob) pair is forced, giving 8 rows
/// per angle; otherwise one sampled run per angle from a generator seeded
/// with `seed`. Throws ValueError on an empty grid.
std::vector<SweepRow> sweep(Scheme scheme, std::span<const double> phi_grid, bool forced_all_branches,
                            std::uint64_t seed = 0);

}  // namespace qislab::verify
