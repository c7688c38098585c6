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

#include "qislab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qislab/protocol.hpp"
#include "qislab/report.hpp"
#include "qislab/sampling.hpp"
#include "qislab/states.hpp"

namespace qislab::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using protocol::ForcedBranch;

constexpr std::array<Scheme, 2> kSchemes = {Scheme::Cluster, Scheme::Brown};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

const PureState &resource_for(Scheme scheme) {
    static const PureState cluster = states::cluster5();
    static const PureState brown = states::brown5();
    return scheme == Scheme::Cluster ? cluster : brown;
}

std::vector<states::InputParams> equatorial_inputs() {
    std::vector<states::InputParams> out;
    for (double phi : sampling::phi_grid(kEquatorialGridPoints)) {
        out.push_back(states::equatorial_input(phi));
    }
    return out;
}

// 1: amplitudes of the two resource states.
CriterionResult resource_states(const Options &opt) {
    const auto start = Clock::now();
    const PureState cluster = opt.cluster_override.value_or(states::cluster5());
    const PureState brown = opt.brown_override.value_or(states::brown5());

    std::vector<Amplitude> want_cluster(32);
    for (std::size_t k : {0b00000, 0b00111, 0b11101, 0b11010}) {
        want_cluster[k] = 0.5;
    }
    const double m = 1.0 / (2.0 * std::numbers::sqrt2);
    std::vector<Amplitude> want_brown(32);
    const std::pair<std::size_t, double> brown_terms[] = {
        {0b00101, +m}, {0b00110, -m}, {0b01000, +m}, {0b01011, -m},
        {0b10001, +m}, {0b10010, +m}, {0b11100, +m}, {0b11111, +m},
    };
    for (const auto &[k, v] : brown_terms) {
        want_brown[k] = v;
    }

    double err = 0.0;
    bool sizes_ok = cluster.dim() == 32 && brown.dim() == 32;
    if (sizes_ok) {
        for (std::size_t i = 0; i < 32; ++i) {
            err = std::max(err, std::abs(cluster[i] - want_cluster[i]));
            err = std::max(err, std::abs(brown[i] - want_brown[i]));
        }
    }
    const double t = seconds_since(start);
    const bool pass = sizes_ok && err <= kAmplitudeTolerance && t < kResourceTimeLimitSeconds;
    return {1, "resource-state amplitudes", pass, "max amplitude error " + sci(err), t};
}

// 2: two ebits across {1,5} of the cluster state.
CriterionResult cluster_entanglement(const Options &opt) {
    const auto start = Clock::now();
    const PureState cluster = opt.cluster_override.value_or(states::cluster5());
    const std::vector<std::size_t> subset = {0, 4};
    const double s = entanglement_entropy(cluster, subset);
    const bool pass = std::abs(s - 2.0) <= kEntropyTolerance;
    return {2, "cluster entanglement across {1,5}|{2,3,4}", pass, "entropy " + report::format_double(s) + " bits",
            seconds_since(start)};
}

// 3: Alice's four outcomes each occur with probability 1/4.
CriterionResult uniform_probabilities(const Options &opt) {
    const auto start = Clock::now();
    Rng rng(opt.seed);
    std::vector<states::InputParams> inputs = equatorial_inputs();
    for (std::size_t i = 0; i < kRandomInputs; ++i) {
        inputs.push_back(sampling::random_real_input(rng));
    }
    for (std::size_t i = 0; i < kRandomInputs; ++i) {
        inputs.push_back(sampling::random_alpha_gamma_real_input(rng));
    }
    double worst = 0.0;
    std::size_t checked = 0;
    std::size_t inadmissible = 0;
    for (Scheme scheme : kSchemes) {
        const auto layout = protocol::PartyLayout::for_scheme(scheme);
        std::vector<std::size_t> targets;
        for (std::size_t q : layout.alice) {
            targets.push_back(q + 2);
        }
        for (const auto &p : inputs) {
            const auto basis = states::alice_basis(p, targets);
            const auto *b = std::get_if<OrthonormalBasis>(&basis);
            if (b == nullptr) {
                ++inadmissible;
                continue;
            }
            const auto probs = born_probabilities(tensor(states::input_state(p), resource_for(scheme)), *b);
            for (double q : probs) {
                worst = std::max(worst, std::abs(q - 0.25));
            }
            ++checked;
        }
    }
    const bool pass = inadmissible == 0 && worst <= kProbabilityTolerance;
    return {3, "uniform Alice-outcome probabilities", pass,
            std::to_string(checked) + " inputs, max |p - 1/4| " + sci(worst) + ", " + std::to_string(inadmissible) +
                " without a measurement basis",
            seconds_since(start)};
}

// 4: every branch corrects perfectly on equatorial and real inputs.
CriterionResult protected_class_success(const Options &opt) {
    const auto start = Clock::now();
    Rng draws(opt.seed ^ 0x4u);
    std::vector<states::InputParams> reals;
    for (std::size_t i = 0; i < kRandomInputs; ++i) {
        reals.push_back(sampling::random_real_input(draws));
    }
    Rng rng(opt.seed);
    double worst = 1.0;
    std::size_t runs = 0;
    for (Scheme scheme : kSchemes) {
        for (double phi : sampling::phi_grid(kEquatorialGridPoints)) {
            const auto p = states::equatorial_input(phi);
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const auto r = protocol::run_qis(scheme, p, protocol::ReceiverKnowsPhase{phi}, ForcedBranch{a, b}, rng);
                    worst = std::min(worst, r.fidelity);
                    ++runs;
                }
            }
        }
        // Real inputs need no phase knowledge at all.
        for (const auto &p : reals) {
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const auto r =
                        protocol::run_qis(scheme, p, protocol::InputIndependentOnly{}, ForcedBranch{a, b}, rng);
                    worst = std::min(worst, r.fidelity);
                    ++runs;
                }
            }
        }
    }
    const double t = seconds_since(start);
    const bool pass = worst >= 1.0 - kFidelityTolerance && t < kEndToEndTimeLimitSeconds;
    return {4, "end-to-end fidelity on equatorial and real inputs", pass,
            std::to_string(runs) + " forced runs, min fidelity " + report::format_double(worst), t};
}

// 5: branch 0 is the only one without an input-independent correction.
CriterionResult branch_restriction(const Options &) {
    const auto start = Clock::now();
    const auto samples = verify::correctability_samples();
    bool pass = true;
    std::string detail;
    for (Scheme scheme : kSchemes) {
        detail += to_string(scheme) + ":";
        for (int a = 0; a < 4; ++a) {
            const bool ok = verify::correctability(scheme, a, samples);
            detail += ok ? " T" : " F";
            pass = pass && (ok == (a != 0));
        }
        detail += scheme == Scheme::Cluster ? "; " : "";
    }
    return {5, "outcome-0 restriction (correctability F T T T)", pass, detail, seconds_since(start)};
}

// 6: complex gamma never yields a basis; real alpha and gamma always should.
CriterionResult admissibility_boundary(const Options &opt) {
    const auto start = Clock::now();
    Rng rng(opt.seed ^ 0x6u);
    std::size_t diagnostics = 0;
    for (std::size_t i = 0; i < kAdmissibilityDraws; ++i) {
        const auto p = sampling::random_complex_gamma_input(kMinImagGamma, rng);
        if (std::holds_alternative<states::BasisDiagnostic>(states::alice_basis(p))) {
            ++diagnostics;
        }
    }
    std::size_t bases = 0;
    double worst_gram = 0.0;
    for (std::size_t i = 0; i < kAdmissibilityDraws; ++i) {
        const auto p = sampling::random_alpha_gamma_real_input(rng);
        const auto basis = states::alice_basis(p);
        if (const auto *b = std::get_if<OrthonormalBasis>(&basis)) {
            const double dev = gram_deviation(gram_matrix(b->vectors()));
            worst_gram = std::max(worst_gram, dev);
            bases += dev < kBasisGramTolerance ? 1 : 0;
        }
    }
    const bool pass = diagnostics == kAdmissibilityDraws && bases == kAdmissibilityDraws;
    return {6, "admissibility boundary", pass,
            std::to_string(diagnostics) + "/" + std::to_string(kAdmissibilityDraws) + " diagnostics, " +
                std::to_string(bases) + "/" + std::to_string(kAdmissibilityDraws) + " bases (max Gram error " +
                sci(worst_gram) + ")",
            seconds_since(start)};
}

// 7: 2 bits from Alice, 1 from Bob, against the 4-bit baseline.
CriterionResult classical_cost(const Options &opt) {
    const auto start = Clock::now();
    Rng rng(opt.seed ^ 0x7u);
    bool pass = true;
    std::size_t runs = 0;
    for (Scheme scheme : kSchemes) {
        for (double phi : sampling::phi_grid(kEquatorialGridPoints)) {
            const auto p = states::equatorial_input(phi);
            for (int repeat = 0; repeat < 4; ++repeat) {
                const auto r = protocol::run_qis(scheme, p, protocol::ReceiverKnowsPhase{phi}, std::nullopt, rng);
                const auto cost = protocol::classical_cost(r);
                const bool wire = r.transcript.size() == 2 && r.transcript[0].sender == protocol::Party::Alice &&
                                  r.transcript[0].receiver == protocol::Party::Charlie &&
                                  r.transcript[0].bits.size() == 2 && r.transcript[1].sender == protocol::Party::Bob &&
                                  r.transcript[1].receiver == protocol::Party::Charlie &&
                                  r.transcript[1].bits.size() == 1;
                pass = pass && wire && cost == protocol::ClassicalCost{2, 1, 4};
                ++runs;
            }
        }
    }
    return {7, "classical cost (2 + 1 bits vs 4-bit baseline)", pass,
            std::to_string(runs) + " sampled runs, cost (2, 1, 4)", seconds_since(start)};
}

// 8: the printed cluster collapse and its phase-gate correction.
CriterionResult cluster_collapse(const Options &) {
    const auto start = Clock::now();
    double worst_state = 0.0;
    double worst_fidelity = 1.0;
    for (double phi : sampling::phi_grid(kEquatorialGridPoints)) {
        const auto p = states::equatorial_input(phi);
        const PureState psi = states::input_state(p);
        const auto records = verify::enumerate_branches(Scheme::Cluster, p, verify::Stage::AfterBob);
        for (int b = 0; b < 2; ++b) {
            const PureState &oracle = records[static_cast<std::size_t>(b)].residual_state;
            const PureState printed = verify::printed_post_bob_state(Scheme::Cluster, phi, b);
            const PureState co = verify::canonical_phase(oracle);
            const PureState cp = verify::canonical_phase(printed);
            for (std::size_t i = 0; i < co.dim(); ++i) {
                worst_state = std::max(worst_state, std::abs(co[i] - cp[i]));
            }
            const Unitary fix = verify::derive_correction(Scheme::Cluster, 0, b) * protocol::charlie_phase_gate(phi);
            const std::vector<std::size_t> both = {0, 1};
            worst_fidelity = std::min(worst_fidelity, fidelity_up_to_global_phase(apply_unitary(oracle, both, fix), psi));
        }
    }
    const bool pass = worst_state <= kCollapseTolerance && worst_fidelity >= 1.0 - kFidelityTolerance;
    return {8, "cluster post-Bob collapse and phase-gate correction", pass,
            "max state error " + sci(worst_state) + ", min fidelity " + report::format_double(worst_fidelity),
            seconds_since(start)};
}

// 9: the deviations ledger is exact and reproducible.
CriterionResult deviations_ledger(const Options &) {
    const auto start = Clock::now();
    const auto first = combined_deviation_report();
    const auto second = combined_deviation_report();
    const std::string a = report::to_json(first).dump(2);
    const std::string b = report::to_json(second).dump(2);

    std::vector<std::pair<std::string, verify::DeviationKind>> got;
    for (const auto &e : first.entries) {
        got.emplace_back(e.location, e.classification);
    }
    const auto want = expected_deviations();
    const bool pass = a == b && got == want;
    std::string detail = std::to_string(first.entries.size()) + " entries";
    if (got != want) {
        detail += " (expected " + std::to_string(want.size()) + ")";
        for (const auto &[loc, kind] : got) {
            detail += "; " + loc + "=" + verify::to_string(kind);
        }
    }
    if (a != b) {
        detail += "; reports differ between runs";
    }
    return {9, "deviations ledger", pass, detail, seconds_since(start)};
}

// 10: protocol and oracle agree on every pre-correction state.
CriterionResult oracle_cross_check(const Options &opt) {
    const auto start = Clock::now();
    Rng draws(opt.seed ^ 0xau);
    Rng rng(opt.seed);
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < kCrossCheckInputs; ++i) {
        const auto p = sampling::random_admissible_input(draws);
        for (Scheme scheme : kSchemes) {
            const auto records = verify::enumerate_branches(scheme, p, verify::Stage::AfterBob);
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const auto r =
                        protocol::run_qis(scheme, p, protocol::InputIndependentOnly{}, ForcedBranch{a, b}, rng);
                    const auto &oracle = records[static_cast<std::size_t>(2 * a + b)].residual_state;
                    if (!verify::equal_up_to_global_phase(r.pre_correction_state, oracle, kCrossCheckTolerance)) {
                        ++mismatches;
                    }
                    ++compared;
                }
            }
        }
    }
    return {10, "oracle/protocol cross-validation", mismatches == 0,
            std::to_string(compared) + " branch states, " + std::to_string(mismatches) + " mismatches",
            seconds_since(start)};
}

CriterionResult guarded(int id, const std::string &name, const std::function<CriterionResult()> &body) {
    try {
        return body();
    } catch (const std::exception &e) {
        return {id, name, false, std::string("threw: ") + e.what(), 0.0};
    }
}

}  // namespace

verify::DeviationReport combined_deviation_report() {
    verify::DeviationReport merged;
    for (Scheme scheme : kSchemes) {
        for (auto &e : verify::standard_deviation_report(scheme).entries) {
            if (std::find(merged.entries.begin(), merged.entries.end(), e) == merged.entries.end()) {
                merged.entries.push_back(std::move(e));
            }
        }
    }
    return merged;
}

std::vector<std::pair<std::string, verify::DeviationKind>> expected_deviations() {
    using K = verify::DeviationKind;
    return {
        {"input_state/normalization_condition", K::Normalization},
        {"sender_basis/row3", K::Conjugation},
        {"cluster_branch_table/row3", K::Conjugation},
        {"cluster_post_bob_state/brackets", K::Bracket},
        {"brown_branch_table/row2", K::Sign},
        {"brown_branch_table/row3", K::Conjugation},
        {"eta_states/prefactor", K::Normalization},
        {"brown_bob_basis/prefactor", K::Normalization},
        {"brown_post_bob_states/brackets", K::Bracket},
    };
}

std::vector<CriterionResult> run_all(const Options &options) {
    const std::vector<std::pair<std::string, std::function<CriterionResult(const Options &)>>> criteria = {
        {"resource-state amplitudes", resource_states},
        {"cluster entanglement across {1,5}|{2,3,4}", cluster_entanglement},
        {"uniform Alice-outcome probabilities", uniform_probabilities},
        {"end-to-end fidelity on equatorial and real inputs", protected_class_success},
        {"outcome-0 restriction (correctability F T T T)", branch_restriction},
        {"admissibility boundary", admissibility_boundary},
        {"classical cost (2 + 1 bits vs 4-bit baseline)", classical_cost},
        {"cluster post-Bob collapse and phase-gate correction", cluster_collapse},
        {"deviations ledger", deviations_ledger},
        {"oracle/protocol cross-validation", oracle_cross_check},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto &[name, fn] = criteria[i];
        results.push_back(guarded(static_cast<int>(i + 1), name, [&] { return fn(options); }));
    }
    return results;
}

}  // namespace qislab::acceptance
