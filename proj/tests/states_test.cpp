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

#include "qislab/states.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qislab/sampling.hpp"

namespace qislab::states {
namespace {

constexpr double kEps = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void expect_amp(Amplitude got, Amplitude want, double tol = kEps) {
    EXPECT_NEAR(got.real(), want.real(), tol);
    EXPECT_NEAR(got.imag(), want.imag(), tol);
}

std::size_t nonzero_count(const PureState &s) {
    std::size_t n = 0;
    for (const auto &a : s.amplitudes()) {
        n += std::abs(a) > kEps ? 1 : 0;
    }
    return n;
}

TEST(InputParams, MakeValidates) {
    EXPECT_THROW(InputParams::make(1.0, 0.5, 0.0, 0.0), ValueError);
    EXPECT_THROW(InputParams::make(std::nan(""), 0.0, 0.0, 0.0), ValueError);
    EXPECT_THROW(InputParams::normalize(0.0, 0.0, 0.0, 0.0), ValueError);
    const InputParams p = InputParams::normalize(1.0, 1.0, 1.0, 1.0);
    EXPECT_NEAR(p.alpha(), 0.5, kEps);
    expect_amp(p.delta(), 0.5);
}

TEST(InputState, Examples) {
    const PureState s = input_state(InputParams::make(1.0, 0.0, 0.0, 0.0));
    EXPECT_EQ(s, PureState::basis_state(2, 0));

    const PureState e0 = input_state(equatorial_input(0.0));
    for (std::size_t i = 0; i < 4; ++i) {
        expect_amp(e0[i], 0.5);
    }
    const PureState e90 = input_state(equatorial_input(std::numbers::pi / 2));
    expect_amp(e90[0], 0.5);
    expect_amp(e90[1], {0.0, 0.5});
    expect_amp(e90[2], 0.5);
    expect_amp(e90[3], {0.0, 0.5});
}

TEST(EquatorialInput, Examples) {
    const InputParams zero = equatorial_input(0.0);
    EXPECT_EQ(zero.alpha(), 0.5);
    expect_amp(zero.beta(), 0.5);
    expect_amp(zero.gamma(), 0.5);
    expect_amp(zero.delta(), 0.5);

    const InputParams pi = equatorial_input(std::numbers::pi);
    expect_amp(pi.beta(), -0.5);
    expect_amp(pi.delta(), -0.5);

    const InputParams third = equatorial_input(std::numbers::pi / 3);
    expect_amp(third.beta(), {0.25, 0.4330127018922193});
    EXPECT_EQ(third.gamma(), Amplitude(0.5));
}

TEST(EquatorialInput, ReducesModTwoPi) {
    const InputParams a = equatorial_input(0.7);
    const InputParams b = equatorial_input(0.7 + 4.0 * std::numbers::pi);
    const InputParams c = equatorial_input(0.7 - 2.0 * std::numbers::pi);
    expect_amp(a.beta(), b.beta(), 1e-12);
    expect_amp(a.beta(), c.beta(), 1e-12);
    EXPECT_NEAR(classify(b).phi, 0.7, 1e-12);
}

TEST(Classify, Families) {
    EXPECT_EQ(classify(equatorial_input(1.0)).kind, InputKind::Equatorial);
    EXPECT_NEAR(classify(equatorial_input(1.0)).phi, 1.0, 1e-12);
    EXPECT_EQ(classify(InputParams::normalize(0.5, 0.5, 0.5, -0.5)).kind, InputKind::Real);

    const InputParams locked = InputParams::normalize(0.3, std::polar(0.4, 1.2), -0.5, -std::polar(0.6, 1.2));
    EXPECT_EQ(classify(locked).kind, InputKind::PhaseLocked);
    // The phase is only defined mod pi; e^{2i phi} is what matters.
    EXPECT_NEAR(std::abs(std::polar(1.0, 2.0 * classify(locked).phi) - std::polar(1.0, 2.4)), 0.0, 1e-12);

    const InputParams agr = InputParams::normalize(0.3, Amplitude{0.1, 0.4}, -0.5, Amplitude{0.6, 0.0});
    EXPECT_EQ(classify(agr).kind, InputKind::GeneralAlphaGammaReal);
    const InputParams gc = InputParams::normalize(0.3, 0.1, Amplitude{0.2, 0.5}, 0.6);
    EXPECT_EQ(classify(gc).kind, InputKind::GeneralComplex);
}

TEST(Classify, EquatorialIsRealIffSinPhiIsZero) {
    for (double phi : sampling::phi_grid(16)) {
        const InputParams p = equatorial_input(phi);
        EXPECT_TRUE(belongs_to(p, InputKind::Equatorial));
        EXPECT_EQ(belongs_to(p, InputKind::Real), std::abs(std::sin(phi)) < 1e-9) << phi;
        EXPECT_TRUE(belongs_to(p, InputKind::PhaseLocked));
        EXPECT_TRUE(belongs_to(p, InputKind::GeneralAlphaGammaReal));
        EXPECT_TRUE(belongs_to(p, InputKind::GeneralComplex));
    }
}

TEST(Classify, Nesting) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const InputParams r = sampling::random_real_input(rng);
        EXPECT_TRUE(belongs_to(r, InputKind::Real));
        EXPECT_TRUE(belongs_to(r, InputKind::PhaseLocked));
        const InputParams a = sampling::random_admissible_input(rng);
        EXPECT_TRUE(belongs_to(a, InputKind::PhaseLocked));
        EXPECT_FALSE(belongs_to(a, InputKind::Equatorial));
        const InputParams g = sampling::random_complex_gamma_input(0.05, rng);
        EXPECT_FALSE(belongs_to(g, InputKind::GeneralAlphaGammaReal));
        EXPECT_TRUE(belongs_to(g, InputKind::GeneralComplex));
    }
    EXPECT_EQ(to_string(InputKind::PhaseLocked), "phase-locked");
}

TEST(Cluster5, Amplitudes) {
    const PureState c = cluster5();
    ASSERT_EQ(c.num_qubits(), 5u);
    for (std::size_t k : {0b00000, 0b00111, 0b11101, 0b11010}) {
        expect_amp(c[k], 0.5);
    }
    EXPECT_EQ(nonzero_count(c), 4u);
    const std::vector<std::size_t> ends = {0, 4};
    EXPECT_NEAR(entanglement_entropy(c, ends), 2.0, 1e-9);
}

TEST(Brown5, Amplitudes) {
    const PureState b = brown5();
    ASSERT_EQ(b.num_qubits(), 5u);
    const double m = 1.0 / (2.0 * std::numbers::sqrt2);
    const std::pair<std::size_t, double> want[] = {
        {0b00101, +m}, {0b00110, -m}, {0b01000, +m}, {0b01011, -m},
        {0b10001, +m}, {0b10010, +m}, {0b11100, +m}, {0b11111, +m},
    };
    for (const auto &[k, v] : want) {
        expect_amp(b[k], v);
    }
    EXPECT_EQ(nonzero_count(b), 8u);
}

TEST(Bell, States) {
    expect_amp(bell_state(Bell::PsiPlus)[3], kInvSqrt2);
    expect_amp(bell_state(Bell::PsiMinus)[3], -kInvSqrt2);
    expect_amp(bell_state(Bell::PhiPlus)[2], kInvSqrt2);
    expect_amp(bell_state(Bell::PhiMinus)[2], -kInvSqrt2);
    EXPECT_NEAR(std::abs(inner_product(bell_state(Bell::PsiPlus), bell_state(Bell::PhiMinus))), 0.0, kEps);
}

TEST(Eta, NormalizedStates) {
    const PureState e1 = eta(1);
    expect_amp(e1[0b101], kInvSqrt2);
    expect_amp(e1[0b110], -kInvSqrt2);
    const PureState e4 = eta(4);
    expect_amp(e4[0b100], kInvSqrt2);
    expect_amp(e4[0b111], kInvSqrt2);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            EXPECT_NEAR(std::abs(inner_product(eta(i), eta(j))), i == j ? 1.0 : 0.0, kEps);
        }
    }
    EXPECT_THROW(eta(0), DimensionError);
    EXPECT_THROW(eta(5), DimensionError);
}

TEST(AliceBasis, EquatorialZeroRows) {
    const auto basis = alice_basis(equatorial_input(0.0));
    const auto *b = std::get_if<OrthonormalBasis>(&basis);
    ASSERT_NE(b, nullptr);
    const double want[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            expect_amp(b->vectors()[r][c], 0.5 * want[r][c]);
        }
    }
}

TEST(AliceBasis, RealInput) {
    EXPECT_TRUE(std::holds_alternative<OrthonormalBasis>(alice_basis(InputParams::make(0.5, 0.5, 0.5, -0.5))));
}

TEST(AliceBasis, OrthonormalOnEveryEquatorialAngle) {
    for (double phi : sampling::phi_grid(64)) {
        const auto basis = alice_basis(equatorial_input(phi));
        ASSERT_TRUE(std::holds_alternative<OrthonormalBasis>(basis)) << phi;
        EXPECT_LT(gram_deviation(gram_matrix(std::get<OrthonormalBasis>(basis).vectors())), 1e-12);
    }
}

TEST(AliceBasis, OrthonormalOnPhaseLockedInputs) {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        const auto basis = alice_basis(sampling::random_admissible_input(rng));
        ASSERT_TRUE(std::holds_alternative<OrthonormalBasis>(basis));
        EXPECT_LT(gram_deviation(gram_matrix(std::get<OrthonormalBasis>(basis).vectors())), 1e-8);
    }
}

TEST(AliceBasis, DiagnosticForComplexGamma) {
    Rng rng(103);
    for (int i = 0; i < 1000; ++i) {
        const auto basis = alice_basis(sampling::random_complex_gamma_input(0.05, rng));
        ASSERT_TRUE(std::holds_alternative<BasisDiagnostic>(basis));
        EXPECT_GT(std::get<BasisDiagnostic>(basis).max_deviation, 1e-8);
    }
}

// Rows 2 and 4 overlap by <r2|r4> = beta delta* - beta* delta = 2i Im(beta delta*),
// which no sign or conjugation choice on row 3 can remove.
TEST(AliceBasis, DiagnosticWhenBetaAndDeltaPhasesDiffer) {
    const InputParams p = InputParams::normalize(0.4, Amplitude{0.3, 0.4}, -0.45, Amplitude{-0.2, 0.35});
    const auto basis = alice_basis(p);
    ASSERT_TRUE(std::holds_alternative<BasisDiagnostic>(basis));
    const BasisDiagnostic &d = std::get<BasisDiagnostic>(basis);
    const Amplitude cross = p.beta() * std::conj(p.delta());
    expect_amp(d.gram[1][3], {0.0, 2.0 * cross.imag()}, 1e-12);
    expect_amp(d.gram[0][2], {0.0, 2.0 * cross.imag()}, 1e-12);
    EXPECT_NEAR(d.max_deviation, 2.0 * std::abs(cross.imag()), 1e-12);
    EXPECT_FALSE(d.message.empty());
}

TEST(AliceBasis, Retargets) {
    const std::vector<std::size_t> targets = {2, 6};
    const auto basis = alice_basis(equatorial_input(0.3), targets);
    EXPECT_EQ(std::get<OrthonormalBasis>(basis).targets(), targets);
}

TEST(BobBasis, XBasis) {
    const OrthonormalBasis b = bob_basis();
    ASSERT_EQ(b.size(), 2u);
    const auto &v = b.vectors();
    EXPECT_NEAR(std::abs(v[0][0] * std::conj(v[1][0]) + v[0][1] * std::conj(v[1][1])), 0.0, kEps);
    for (const auto &x : v) {
        EXPECT_NEAR(std::norm(x[0]) + std::norm(x[1]), 1.0, kEps);
    }
    expect_amp(v[0][1], kInvSqrt2);
    expect_amp(v[1][1], -kInvSqrt2);
    const auto probs = born_probabilities(PureState::basis_state(2, 0), bob_basis(1));
    EXPECT_NEAR(probs[0], 0.5, kEps);
    EXPECT_NEAR(probs[1], 0.5, kEps);
}

}  // namespace
}  // namespace qislab::states
