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

#include "qislab/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qislab/sampling.hpp"

namespace qislab::verify {
namespace {

constexpr std::array<Scheme, 2> kSchemes = {Scheme::Cluster, Scheme::Brown};

bool same_matrix(const Unitary &a, const Unitary &b, double tol) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= tol;
}

TEST(Oracle, ResourceExpansionsMatchConstructors) {
    EXPECT_EQ(oracle_cluster5(), states::cluster5());
    const PureState a = oracle_brown5();
    const PureState b = states::brown5();
    for (std::size_t i = 0; i < 32; ++i) {
        EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-15);
    }
}

TEST(EnumerateBranches, ClusterEquatorialZero) {
    const auto records = enumerate_branches(Scheme::Cluster, states::equatorial_input(0.0), Stage::AfterAlice);
    ASSERT_EQ(records.size(), 4u);
    const PureState want = PureState::normalized({1, 0, 0, 1, 0, 1, 1, 0});
    EXPECT_TRUE(equal_up_to_global_phase(records[0].residual_state, want, 1e-12));
    EXPECT_NEAR(records[0].probability, 0.25, 1e-12);
    EXPECT_FALSE(records[0].bob_outcome.has_value());
}

TEST(EnumerateBranches, BrownEquatorialZero) {
    const auto records = enumerate_branches(Scheme::Brown, states::equatorial_input(0.0), Stage::AfterAlice);
    std::vector<Amplitude> sum(8);
    for (int k = 1; k <= 4; ++k) {
        const PureState e = states::eta(k);
        for (std::size_t i = 0; i < 8; ++i) {
            sum[i] += 0.5 * e[i];
        }
    }
    EXPECT_TRUE(equal_up_to_global_phase(records[0].residual_state, PureState(sum), 1e-12));
    EXPECT_NEAR(records[0].probability, 0.25, 1e-12);
}

TEST(EnumerateBranches, ProbabilitiesOnAdmissibleInputs) {
    Rng rng(1);
    for (Scheme scheme : kSchemes) {
        for (int i = 0; i < 50; ++i) {
            const auto p = sampling::random_admissible_input(rng);
            for (const auto &r : enumerate_branches(scheme, p, Stage::AfterAlice)) {
                EXPECT_NEAR(r.probability, 0.25, 1e-9);
            }
            double total = 0.0;
            for (const auto &r : enumerate_branches(scheme, p, Stage::AfterBob)) {
                EXPECT_NEAR(r.conditional_probability, 0.5, 1e-9);
                total += r.probability;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
    }
}

TEST(EnumerateBranches, ClusterCollapseFormula) {
    for (double phi : sampling::phi_grid(16)) {
        const auto records = enumerate_branches(Scheme::Cluster, states::equatorial_input(phi), Stage::AfterBob);
        for (int b = 0; b < 2; ++b) {
            const double s = b == 0 ? 1.0 : -1.0;
            const Amplitude e = std::polar(1.0, -phi);
            // |00> + e^{-i phi}|11> +- |01> +- e^{-i phi}|10>, written out here.
            const PureState want = PureState::normalized({1.0, s, s * e, e});
            EXPECT_TRUE(equal_up_to_global_phase(records[static_cast<std::size_t>(b)].residual_state, want, 1e-10));
            EXPECT_TRUE(equal_up_to_global_phase(printed_post_bob_state(Scheme::Cluster, phi, b), want, 1e-12));
        }
    }
}

TEST(EnumerateBranches, BrownCollapseFormula) {
    for (double phi : sampling::phi_grid(16)) {
        const auto records = enumerate_branches(Scheme::Brown, states::equatorial_input(phi), Stage::AfterBob);
        for (int b = 0; b < 2; ++b) {
            EXPECT_TRUE(equal_up_to_global_phase(records[static_cast<std::size_t>(b)].residual_state,
                                                 printed_post_bob_state(Scheme::Brown, phi, b), 1e-10));
        }
    }
}

TEST(EnumerateBranches, RejectsInadmissible) {
    const auto p = states::InputParams::normalize(0.4, Amplitude{0.3, 0.4}, -0.45, Amplitude{-0.2, 0.35});
    EXPECT_THROW(enumerate_branches(Scheme::Cluster, p, Stage::AfterAlice), protocol::InadmissibleInput);
    const auto g = states::InputParams::normalize(0.5, 0.5, Amplitude{0.0, 0.5}, 0.5);
    EXPECT_THROW(enumerate_branches(Scheme::Brown, g, Stage::AfterBob), protocol::InadmissibleInput);
}

// The measurement row the oracle uses for outcome 2 is the orthogonal
// complement of the other three, checked here with a direct cofactor
// construction rather than against a hard-coded pattern.
TEST(EnumerateBranches, OutcomeTwoRowIsTheOrthogonalComplement) {
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const auto p = sampling::random_admissible_input(rng);
        const auto c = p.coefficients();
        const auto [a, b, g, d] = c;
        const std::array<std::array<Amplitude, 4>, 3> rows = {{
            {a, b, g, d},
            {std::conj(b), -a, std::conj(d), -g},
            {std::conj(d), g, -std::conj(b), -a},
        }};
        // Generalized cross product: v_k = (-1)^k det(minor without column k)
        // of the conjugated rows is orthogonal to all three.
        std::array<Amplitude, 4> v{};
        for (int k = 0; k < 4; ++k) {
            Eigen::Matrix3cd m;
            int col = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == k) {
                    continue;
                }
                for (int r = 0; r < 3; ++r) {
                    m(r, col) = std::conj(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
                }
                ++col;
            }
            v[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) * m.determinant();
        }
        const PureState complement = PureState::normalized({v[0], v[1], v[2], v[3]});
        const PureState repaired = PureState::normalized({g, -d, -a, b});
        EXPECT_NEAR(fidelity_up_to_global_phase(complement, repaired), 1.0, 1e-9);
        // The printed conjugation pattern is not the complement unless beta, delta are real.
        const PureState printed = PureState::normalized({g, -std::conj(d), -a, std::conj(b)});
        if (std::abs(p.beta().imag()) + std::abs(p.delta().imag()) > 0.05) {
            EXPECT_LT(fidelity_up_to_global_phase(complement, printed), 1.0 - 1e-6);
        }
    }
}

TEST(DeriveCorrection, RegeneratesFrozenTables) {
    for (Scheme scheme : kSchemes) {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 2; ++b) {
                EXPECT_TRUE(same_matrix(derive_correction(scheme, a, b),
                                        protocol::input_independent_correction(scheme, a, b), 1e-12))
                    << to_string(scheme) << " " << a << b;
            }
        }
    }
    EXPECT_THROW(derive_correction(Scheme::Cluster, -1, 0), DimensionError);
}

// The printed phase gate is the derived correction for outcome 0 read in
// Charlie's basis: W^dagger * diag(1,1,e,e) equals the correction run_qis uses.
TEST(DeriveCorrection, PrintedPhaseGateComposesToRunCorrection) {
    for (double phi : sampling::phi_grid(16)) {
        for (int b = 0; b < 2; ++b) {
            const Unitary printed = derive_correction(Scheme::Cluster, 0, b) * protocol::charlie_phase_gate(phi);
            const Unitary used =
                protocol::correction_unitary(Scheme::Cluster, 0, b, protocol::ReceiverKnowsPhase{phi});
            EXPECT_TRUE(same_matrix(printed, used, 1e-12));
        }
    }
}

TEST(Correctability, PhaseLockedFamilySplitsZeroAndTwoFromOneAndThree) {
    Rng rng(3);
    std::vector<states::InputParams> samples;
    for (int i = 0; i < 16; ++i) {
        samples.push_back(sampling::random_admissible_input(rng));
    }
    for (Scheme scheme : kSchemes) {
        EXPECT_FALSE(correctability(scheme, 0, samples));
        EXPECT_TRUE(correctability(scheme, 1, samples));
        EXPECT_FALSE(correctability(scheme, 2, samples));
        EXPECT_TRUE(correctability(scheme, 3, samples));
    }
}

TEST(Correctability, SingleEquatorialPhase) {
    Rng rng(4);
    std::vector<states::InputParams> samples;
    for (int i = 0; i < 12; ++i) {
        samples.push_back(sampling::random_phase_locked_input(0.8, rng));
    }
    for (Scheme scheme : kSchemes) {
        for (int a = 0; a < 4; ++a) {
            EXPECT_TRUE(correctability(scheme, a, samples)) << a;
        }
    }
}

TEST(Correctability, RealInputsAreAlwaysCorrectable) {
    Rng rng(5);
    std::vector<states::InputParams> samples;
    for (int i = 0; i < 10; ++i) {
        samples.push_back(sampling::random_real_input(rng));
    }
    for (int a = 0; a < 4; ++a) {
        EXPECT_TRUE(correctability(Scheme::Brown, a, samples));
    }
}

TEST(Correctability, Preconditions) {
    Rng rng(6);
    std::vector<states::InputParams> few;
    for (int i = 0; i < 7; ++i) {
        few.push_back(sampling::random_real_input(rng));
    }
    EXPECT_THROW(correctability(Scheme::Cluster, 1, few), ValueError);
    few.push_back(few.front());
    EXPECT_THROW(correctability(Scheme::Cluster, 1, few), ValueError);
    few.back() = sampling::random_real_input(rng);
    EXPECT_THROW(correctability(Scheme::Cluster, 4, few), DimensionError);
    EXPECT_NO_THROW(correctability(Scheme::Cluster, 1, few));
}

TEST(Correctability, StandardSampleFamilyIsNotAdmissible) {
    const auto samples = correctability_samples();
    ASSERT_EQ(samples.size(), kCorrectabilitySampleCount);
    EXPECT_EQ(samples, correctability_samples());
    for (const auto &p : samples) {
        EXPECT_TRUE(states::belongs_to(p, states::InputKind::GeneralAlphaGammaReal));
    }
    EXPECT_THROW(correctability(Scheme::Cluster, 1, samples), ValueError);
}

// When correctability holds, the fixed correction recovers fresh inputs.
TEST(Correctability, SoundOnFreshInputs) {
    Rng rng(7);
    std::vector<states::InputParams> samples;
    for (int i = 0; i < 16; ++i) {
        samples.push_back(sampling::random_admissible_input(rng));
    }
    Rng run_rng(8);
    for (Scheme scheme : kSchemes) {
        for (int a : {1, 3}) {
            ASSERT_TRUE(correctability(scheme, a, samples));
            for (int i = 0; i < 20; ++i) {
                const auto p = sampling::random_admissible_input(rng);
                for (int b = 0; b < 2; ++b) {
                    const auto r = protocol::run_qis(scheme, p, protocol::InputIndependentOnly{},
                                                     protocol::ForcedBranch{a, b}, run_rng);
                    EXPECT_GE(r.fidelity, 1.0 - 1e-9);
                }
            }
        }
    }
}

TEST(CrossCheck, ProtocolMatchesOracle) {
    Rng draws(9);
    Rng rng(10);
    for (int i = 0; i < 20; ++i) {
        const auto p = sampling::random_admissible_input(draws);
        for (Scheme scheme : kSchemes) {
            const auto records = enumerate_branches(scheme, p, Stage::AfterBob);
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const auto r = protocol::run_qis(scheme, p, protocol::InputIndependentOnly{},
                                                     protocol::ForcedBranch{a, b}, rng);
                    EXPECT_TRUE(equal_up_to_global_phase(
                        r.pre_correction_state, records[static_cast<std::size_t>(2 * a + b)].residual_state, 1e-9));
                }
            }
        }
    }
}

TEST(CheckTable, ReportsKnownDeviations) {
    const DeviationReport cluster = standard_deviation_report(Scheme::Cluster);
    std::vector<std::string> locations;
    for (const auto &e : cluster.entries) {
        locations.push_back(e.location);
    }
    EXPECT_EQ(locations, (std::vector<std::string>{"input_state/normalization_condition", "sender_basis/row3",
                                                   "cluster_branch_table/row3", "cluster_post_bob_state/brackets"}));
    EXPECT_EQ(cluster.entries[1].classification, DeviationKind::Conjugation);

    const DeviationReport brown = standard_deviation_report(Scheme::Brown);
    bool row2 = false;
    bool eta = false;
    for (const auto &e : brown.entries) {
        if (e.location == "brown_branch_table/row2") {
            row2 = true;
            EXPECT_EQ(e.classification, DeviationKind::Sign);
            EXPECT_EQ(e.printed, "β|η1⟩ + α|η2⟩ + δ|η3⟩ − γ|η4⟩");
            EXPECT_EQ(e.derived, "β|η1⟩ − α|η2⟩ + δ|η3⟩ − γ|η4⟩");
        }
        if (e.location == "eta_states/prefactor") {
            eta = true;
            EXPECT_EQ(e.classification, DeviationKind::Normalization);
        }
    }
    EXPECT_TRUE(row2);
    EXPECT_TRUE(eta);
}

TEST(CheckTable, RealInputsHideConjugationErrors) {
    const DeviationReport r = check_table(Scheme::Cluster, states::InputParams::make(0.5, 0.5, 0.5, -0.5));
    for (const auto &e : r.entries) {
        EXPECT_NE(e.classification, DeviationKind::Conjugation) << e.location;
    }
}

TEST(CheckTable, Deterministic) {
    for (Scheme scheme : kSchemes) {
        EXPECT_EQ(standard_deviation_report(scheme), standard_deviation_report(scheme));
        const auto p = states::equatorial_input(2.0);
        EXPECT_EQ(check_table(scheme, p), check_table(scheme, p));
    }
    EXPECT_EQ(to_string(DeviationKind::Bracket), "bracket");
}

TEST(Phase, CanonicalPhase) {
    const PureState s = PureState::normalized({Amplitude{0.0, 1.0}, 1.0});
    const PureState c = canonical_phase(s);
    EXPECT_NEAR(c[0].imag(), 0.0, 1e-15);
    EXPECT_GT(c[0].real(), 0.0);
    EXPECT_TRUE(equal_up_to_global_phase(s, s.with_global_phase(std::polar(1.0, 2.0)), 1e-12));
    EXPECT_FALSE(equal_up_to_global_phase(s, PureState::basis_state(1, 0), 1e-3));
    EXPECT_FALSE(equal_up_to_global_phase(s, PureState::basis_state(2, 0), 1e-3));
}

TEST(Sweep, Rows) {
    const auto grid = sampling::phi_grid(16);
    const auto rows = sweep(Scheme::Cluster, grid, true);
    EXPECT_EQ(rows.size(), 128u);
    for (const auto &r : rows) {
        EXPECT_TRUE(r.success);
        EXPECT_GE(r.fidelity, 1.0 - 1e-9);
    }
    const std::vector<double> zero = {0.0};
    const auto brown = sweep(Scheme::Brown, zero, true);
    ASSERT_EQ(brown.size(), 8u);
    EXPECT_EQ(brown[5].alice_outcome, 2);
    EXPECT_EQ(brown[5].bob_outcome, 1);
    const std::vector<double> empty;
    EXPECT_THROW(sweep(Scheme::Cluster, empty, true), ValueError);
}

TEST(Sweep, SampledIsSeeded) {
    const auto grid = sampling::phi_grid(8);
    const auto a = sweep(Scheme::Brown, grid, false, 42);
    const auto b = sweep(Scheme::Brown, grid, false, 42);
    ASSERT_EQ(a.size(), 8u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].alice_outcome, b[i].alice_outcome);
        EXPECT_EQ(a[i].bob_outcome, b[i].bob_outcome);
        EXPECT_TRUE(a[i].success);
    }
}

}  // namespace
}  // namespace qislab::verify
