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

#include <cmath>
#include <numbers>
#include <sstream>

namespace qislab::states {

namespace {

bool finite(Amplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

double squared_norm(double alpha, Amplitude beta, Amplitude gamma, Amplitude delta) {
    return alpha * alpha + std::norm(beta) + std::norm(gamma) + std::norm(delta);
}

double reduce_angle(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // fmod can return exactly two_pi after the shift for tiny negative inputs.
    return r >= two_pi ? 0.0 : r;
}

PureState ket_sum(std::size_t num_qubits, std::initializer_list<std::pair<std::size_t, double>> terms) {
    std::vector<Amplitude> v(std::size_t{1} << num_qubits);
    for (const auto &[index, weight] : terms) {
        v[index] += weight;
    }
    return PureState::normalized(std::move(v));
}

}  // namespace

InputParams InputParams::make(double alpha, Amplitude beta, Amplitude gamma, Amplitude delta) {
    if (!std::isfinite(alpha) || !finite(beta) || !finite(gamma) || !finite(delta)) {
        throw ValueError("input coefficients must be finite");
    }
    const double n2 = squared_norm(alpha, beta, gamma, delta);
    if (std::abs(n2 - 1.0) > kTolerance) {
        std::ostringstream msg;
        msg << "input coefficients are not normalized (squared norm " << n2 << ")";
        throw ValueError(msg.str());
    }
    return InputParams(alpha, beta, gamma, delta);
}

InputParams InputParams::normalize(double alpha, Amplitude beta, Amplitude gamma, Amplitude delta) {
    const double n2 = squared_norm(alpha, beta, gamma, delta);
    if (!(n2 > kZeroProbability) || !std::isfinite(n2)) {
        throw ValueError("cannot normalize a zero or non-finite input");
    }
    const double s = 1.0 / std::sqrt(n2);
    return make(alpha * s, beta * s, gamma * s, delta * s);
}

InputParams equatorial_input(double phi) {
    const double r = reduce_angle(phi);
    const Amplitude e{0.5 * std::cos(r), 0.5 * std::sin(r)};
    return InputParams::make(0.5, e, Amplitude{0.5, 0.0}, e);
}

InputClass classify(const InputParams &p) {
    const double t = kClassTolerance;
    const bool gamma_real = std::abs(p.gamma().imag()) <= t;
    const bool all_real = gamma_real && std::abs(p.beta().imag()) <= t && std::abs(p.delta().imag()) <= t;

    const bool equal_magnitudes = std::abs(p.alpha() - 0.5) <= t && std::abs(p.gamma() - Amplitude{0.5, 0.0}) <= t &&
                                  std::abs(std::abs(p.beta()) - 0.5) <= t && std::abs(p.beta() - p.delta()) <= t;
    if (equal_magnitudes) {
        return {InputKind::Equatorial, reduce_angle(std::arg(p.beta()))};
    }
    if (all_real) {
        return {InputKind::Real, 0.0};
    }
    if (gamma_real && std::abs((p.beta() * std::conj(p.delta())).imag()) <= t) {
        const Amplitude lead = std::abs(p.beta()) >= std::abs(p.delta()) ? p.beta() : p.delta();
        return {InputKind::PhaseLocked, reduce_angle(std::arg(lead))};
    }
    if (gamma_real) {
        return {InputKind::GeneralAlphaGammaReal, 0.0};
    }
    return {InputKind::GeneralComplex, 0.0};
}

bool belongs_to(const InputParams &p, InputKind kind) {
    const InputClass c = classify(p);
    switch (kind) {
        case InputKind::Equatorial:
            return c.kind == InputKind::Equatorial;
        case InputKind::Real:
            if (c.kind == InputKind::Equatorial) {
                return std::abs(std::sin(c.phi)) <= kClassTolerance;
            }
            return c.kind == InputKind::Real;
        case InputKind::PhaseLocked:
            return c.kind == InputKind::Equatorial || c.kind == InputKind::Real || c.kind == InputKind::PhaseLocked;
        case InputKind::GeneralAlphaGammaReal:
            return c.kind != InputKind::GeneralComplex;
        case InputKind::GeneralComplex:
            return true;
    }
    return false;
}

std::string to_string(InputKind kind) {
    switch (kind) {
        case InputKind::Equatorial:
            return "equatorial";
        case InputKind::Real:
            return "real";
        case InputKind::PhaseLocked:
            return "phase-locked";
        case InputKind::GeneralAlphaGammaReal:
            return "alpha-gamma-real";
        case InputKind::GeneralComplex:
            return "general-complex";
    }
    return "unknown";
}

PureState input_state(const InputParams &p) {
    const auto c = p.coefficients();
    return PureState(std::vector<Amplitude>(c.begin(), c.end()));
}

PureState cluster5() {
    return ket_sum(5, {{0b00000, 1.0}, {0b00111, 1.0}, {0b11101, 1.0}, {0b11010, 1.0}});
}

PureState bell_state(Bell which) {
    switch (which) {
        case Bell::PsiPlus:
            return ket_sum(2, {{0b00, 1.0}, {0b11, 1.0}});
        case Bell::PsiMinus:
            return ket_sum(2, {{0b00, 1.0}, {0b11, -1.0}});
        case Bell::PhiPlus:
            return ket_sum(2, {{0b01, 1.0}, {0b10, 1.0}});
        case Bell::PhiMinus:
            return ket_sum(2, {{0b01, 1.0}, {0b10, -1.0}});
    }
    throw ValueError("unknown Bell state");
}

PureState brown5() {
    const std::pair<std::size_t, Bell> terms[] = {
        {0b001, Bell::PhiMinus},
        {0b010, Bell::PsiMinus},
        {0b100, Bell::PhiPlus},
        {0b111, Bell::PsiPlus},
    };
    std::vector<Amplitude> v(32);
    for (const auto &[head, bell] : terms) {
        const PureState part = tensor(PureState::basis_state(3, head), bell_state(bell));
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += 0.5 * part[i];
        }
    }
    return PureState(std::move(v));
}

PureState eta(int k) {
    switch (k) {
        case 1:
            return ket_sum(3, {{0b101, 1.0}, {0b110, -1.0}});
        case 2:
            return ket_sum(3, {{0b000, 1.0}, {0b011, -1.0}});
        case 3:
            return ket_sum(3, {{0b001, 1.0}, {0b010, 1.0}});
        case 4:
            return ket_sum(3, {{0b100, 1.0}, {0b111, 1.0}});
        default:
            throw DimensionError("eta index must be 1..4, got " + std::to_string(k));
    }
}

std::variant<OrthonormalBasis, BasisDiagnostic> alice_basis(const InputParams &p, std::vector<std::size_t> targets) {
    const Amplitude a = p.alpha();
    const Amplitude b = p.beta();
    const Amplitude c = p.gamma();
    const Amplitude d = p.delta();
    std::vector<std::vector<Amplitude>> rows = {
        {a, b, c, d},
        {std::conj(b), -a, std::conj(d), -c},
        {c, -d, -a, b},
        {std::conj(d), c, -std::conj(b), -a},
    };
    const Eigen::MatrixXcd g = gram_matrix(rows);
    const double dev = gram_deviation(g);
    if (dev <= kAliceBasisTolerance) {
        return OrthonormalBasis(std::move(targets), std::move(rows), kAliceBasisTolerance);
    }
    BasisDiagnostic diag;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            diag.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
        }
    }
    diag.max_deviation = dev;
    std::ostringstream msg;
    msg << "measurement vectors are not orthonormal (max Gram deviation " << dev
        << "); alpha and gamma must be real and beta, delta must share one phase";
    diag.message = msg.str();
    return diag;
}

OrthonormalBasis bob_basis(std::size_t target) {
    const double h = 1.0 / std::numbers::sqrt2;
    return OrthonormalBasis({target}, {{h, h}, {h, -h}});
}

}  // namespace qislab::states
