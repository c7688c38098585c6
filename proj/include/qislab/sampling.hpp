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

#pragma once

#include <vector>

#include "qislab/qstate.hpp"
#include "qislab/states.hpp"

/// Seeded generators for the input families. Every function draws only from
/// the generator it is handed.
namespace qislab::sampling {

/// All four coefficients real, isotropic direction on the unit 3-sphere.
states::InputParams random_real_input(Rng &rng);

/// alpha, gamma uniform on [-1, 1]; beta, delta uniform on the unit complex
/// disc; then renormalized.
states::InputParams random_alpha_gamma_real_input(Rng &rng);

/// Like random_alpha_gamma_real_input but with beta and delta sharing the
/// phase e^{i phi}: beta = b e^{i phi}, delta = d e^{i phi} with b, d real.
states::InputParams random_phase_locked_input(double phi, Rng &rng);

/// random_phase_locked_input with phi uniform on [0, 2pi): a random draw from
/// the class on which the sender's basis is orthonormal.
states::InputParams random_admissible_input(Rng &rng);

/// Normalized input whose gamma has |Im gamma| >= min_imag_gamma after
/// normalization (rejection sampled).
states::InputParams random_complex_gamma_input(double min_imag_gamma, Rng &rng);

/// n uniformly spaced angles k * 2pi / n, k = 0..n-1.
std::vector<double> phi_grid(std::size_t n);

/// Random normalized state on `num_qubits` qubits (Gaussian amplitudes).
PureState random_state(std::size_t num_qubits, Rng &rng);

/// Haar-distributed unitary via QR of a complex Gaussian matrix.
Unitary random_unitary(std::size_t num_qubits, Rng &rng);

}  // namespace qislab::sampling
