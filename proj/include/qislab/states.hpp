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
 * Input families, resource states, and the measurement bases the splitting
 * protocols use.
 *
 * The two-qubit input is a|00> + b|01> + c|10> + d|11> with `alpha` real.
 * Coefficients are always listed in basis-index order (alpha, beta, gamma,
 * delta) = amplitudes of (|00>, |01>, |10>, |11>).
 */

#pragma once

#include <array>
#include <string>
#include <variant>

#include "qislab/qstate.hpp"

namespace qislab::states {

/// Normalized coefficients of a two-qubit input with real `alpha`.
class InputParams {
  public:
    /// Throws ValueError unless |a|^2+|b|^2+|c|^2+|d|^2 = 1 within kTolerance
    /// and every value is finite.
    static InputParams make(double alpha, Amplitude beta, Amplitude gamma, Amplitude delta);
    /// Rescales to unit norm; throws ValueError on a zero vector.
    static InputParams normalize(double alpha, Amplitude beta, Amplitude gamma, Amplitude delta);

    double alpha() const {
        return alpha_;
    }
    Amplitude beta() const {
        return beta_;
    }
    Amplitude gamma() const {
        return gamma_;
    }
    Amplitude delta() const {
        return delta_;
    }
    /// (alpha, beta, gamma, delta).
    std::array<Amplitude, 4> coefficients() const {
        return {Amplitude{alpha_, 0.0}, beta_, gamma_, delta_};
    }

    bool operator==(const InputParams &) const = default;

  private:
    InputParams(double alpha, Amplitude beta, Amplitude gamma, Amplitude delta)
        : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    }

    double alpha_;
    Amplitude beta_;
    Amplitude gamma_;
    Amplitude delta_;
};

/// Input families, from most to least specific. Membership is nested:
/// Equatorial(0) and Equatorial(pi) are also Real; Equatorial and Real inputs
/// are PhaseLocked; PhaseLocked inputs are GeneralAlphaGammaReal; everything
/// is GeneralComplex.
///
/// PhaseLocked: alpha, gamma real and beta = b e^{i phi}, delta = d e^{i phi}
/// with b, d real, i.e. beta * conj(delta) real. This is the class on which
/// the sender's basis is orthonormal.
enum class InputKind { Equatorial, Real, PhaseLocked, GeneralAlphaGammaReal, GeneralComplex };

struct InputClass {
    InputKind kind = InputKind::GeneralComplex;
    /// Common phase of beta and delta in [0, 2pi); meaningful for Equatorial
    /// and PhaseLocked. Only e^{2i phi} matters downstream.
    double phi = 0.0;
};

/// Tolerance used when deciding class membership.
inline constexpr double kClassTolerance = 1e-9;

/// The most specific class the input belongs to.
InputClass classify(const InputParams &p);
bool belongs_to(const InputParams &p, InputKind kind);

std::string to_string(InputKind kind);

/// alpha = gamma = 1/2, beta = delta = e^{i phi}/2, with phi reduced mod 2pi.
InputParams equatorial_input(double phi);

/// Amplitudes placed at |00>, |01>, |10>, |11> in that order.
PureState input_state(const InputParams &p);

/// Five-qubit cluster state (|00000> + |00111> + |11101> + |11010>)/2.
PureState cluster5();

enum class Bell { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

/// psi+- = (|00> +- |11>)/sqrt2, phi+- = (|01> +- |10>)/sqrt2.
PureState bell_state(Bell which);

/// Five-qubit Brown state
/// (|001>phi- + |010>psi- + |100>phi+ + |111>psi+)/2.
PureState brown5();

/// Normalized three-qubit eta states, k in 1..4:
///   eta1 = (|101> - |110>)/sqrt2, eta2 = (|000> - |011>)/sqrt2,
///   eta3 = (|001> + |010>)/sqrt2, eta4 = (|100> + |111>)/sqrt2.
PureState eta(int k);

/// Why a coefficient set cannot define the sender's measurement basis.
struct BasisDiagnostic {
    /// Gram matrix of the four candidate vectors (row-major).
    std::array<std::array<Amplitude, 4>, 4> gram{};
    double max_deviation = 0.0;
    std::string message;
};

/// Orthonormality threshold for the sender's basis.
inline constexpr double kAliceBasisTolerance = 1e-8;

/// The sender's information-dependent two-qubit basis, outcome k = row k:
///   (a, b, c, d), (b*, -a, d*, -c), (c, -d, -a, b), (d*, c, -b*, -a)
/// with a..d = alpha..delta. Orthonormal on PhaseLocked inputs; otherwise a
/// BasisDiagnostic is returned.
std::variant<OrthonormalBasis, BasisDiagnostic> alice_basis(const InputParams &p,
                                                            std::vector<std::size_t> targets = {0, 1});

/// {(|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2}; outcome 0 is "+".
OrthonormalBasis bob_basis(std::size_t target = 0);

}  // namespace qislab::states
