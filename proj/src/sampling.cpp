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

#include "qislab/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qislab::sampling {

namespace {

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Amplitude uniform_disc(Rng &rng) {
    const double r = std::sqrt(uniform(rng, 0.0, 1.0));
    const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    return std::polar(r, theta);
}

}  // namespace

states::InputParams random_real_input(Rng &rng) {
    std::normal_distribution<double> n;
    for (;;) {
        const double a = n(rng), b = n(rng), c = n(rng), d = n(rng);
        if (a * a + b * b + c * c + d * d > 1e-6) {
            return states::InputParams::normalize(a, b, c, d);
        }
    }
}

states::InputParams random_alpha_gamma_real_input(Rng &rng) {
    for (;;) {
        const double a = uniform(rng, -1.0, 1.0);
        const Amplitude b = uniform_disc(rng);
        const double c = uniform(rng, -1.0, 1.0);
        const Amplitude d = uniform_disc(rng);
        if (a * a + std::norm(b) + c * c + std::norm(d) > 1e-6) {
            return states::InputParams::normalize(a, b, c, d);
        }
    }
}

states::InputParams random_phase_locked_input(double phi, Rng &rng) {
    const Amplitude phase = std::polar(1.0, phi);
    for (;;) {
        const double a = uniform(rng, -1.0, 1.0);
        const double b = uniform(rng, -1.0, 1.0);
        const double c = uniform(rng, -1.0, 1.0);
        const double d = uniform(rng, -1.0, 1.0);
        if (a * a + b * b + c * c + d * d > 1e-6) {
            return states::InputParams::normalize(a, b * phase, c, d * phase);
        }
    }
}

states::InputParams random_admissible_input(Rng &rng) {
    const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    return random_phase_locked_input(phi, rng);
}

states::InputParams random_complex_gamma_input(double min_imag_gamma, Rng &rng) {
    for (;;) {
        const double a = uniform(rng, -1.0, 1.0);
        const Amplitude b = uniform_disc(rng);
        const Amplitude c = uniform_disc(rng);
        const Amplitude d = uniform_disc(rng);
        const double n2 = a * a + std::norm(b) + std::norm(c) + std::norm(d);
        if (n2 <= 1e-6) {
            continue;
        }
        if (std::abs(c.imag()) / std::sqrt(n2) >= min_imag_gamma) {
            return states::InputParams::normalize(a, b, c, d);
        }
    }
}

std::vector<double> phi_grid(std::size_t n) {
    std::vector<double> grid;
    grid.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        grid.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
    return grid;
}

PureState random_state(std::size_t num_qubits, Rng &rng) {
    std::normal_distribution<double> n;
    std::vector<Amplitude> v(std::size_t{1} << num_qubits);
    for (auto &a : v) {
        a = {n(rng), n(rng)};
    }
    return PureState::normalized(std::move(v));
}

Unitary random_unitary(std::size_t num_qubits, Rng &rng) {
    std::normal_distribution<double> n;
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            g(i, j) = {n(rng), n(rng)};
        }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Amplitude d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return Unitary(std::move(q));
}

}  // namespace qislab::sampling
