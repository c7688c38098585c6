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
 * Dense state-vector core.
 *
 * Qubits are indexed from 0 and qubit 0 is the most significant bit of the
 * basis index, so the ket |q0 q1 ... q(n-1)> reads left to right. All
 * operations are pure functions of their arguments.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qislab {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

/// Equality tolerance for norms, probabilities and unitarity.
inline constexpr double kTolerance = 1e-10;
/// Outcomes with probability at or below this are treated as impossible.
inline constexpr double kZeroProbability = 1e-12;
inline constexpr std::size_t kDefaultMaxQubits = 12;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Mismatched sizes, out-of-range or repeated qubit indices.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Register would exceed the configured qubit limit.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Invalid state, matrix, or basis data (non-finite, not normalized, not unitary).
class ValueError : public Error {
  public:
    using Error::Error;
};

/// Requested a measurement outcome that cannot occur.
class MeasurementError : public Error {
  public:
    using Error::Error;
};

/// A normalized vector of 2^n amplitudes.
class PureState {
  public:
    /// Validates length (power of two), finiteness and unit norm within kTolerance.
    explicit PureState(std::vector<Amplitude> amplitudes);

    /// Rescales to unit norm. Throws ValueError when the norm is below kZeroProbability.
    static PureState normalized(std::vector<Amplitude> amplitudes);
    static PureState basis_state(std::size_t num_qubits, std::size_t index);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    Amplitude operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    /// Multiplies every amplitude by a unit complex scalar.
    PureState with_global_phase(Amplitude phase) const;

    bool operator==(const PureState &other) const = default;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// Square unitary matrix acting on 2^k amplitudes.
class Unitary {
  public:
    /// Throws ValueError unless the matrix is square with power-of-two size
    /// and U^dagger U = I entrywise within kTolerance.
    explicit Unitary(Eigen::MatrixXcd matrix);

    static Unitary identity(std::size_t num_qubits);
    static Unitary diagonal(std::span<const Amplitude> phases);

    std::size_t dim() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    std::size_t num_qubits() const;
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    Amplitude operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    Unitary adjoint() const;
    /// Matrix product: (a * b) applies b first.
    friend Unitary operator*(const Unitary &a, const Unitary &b);

  private:
    Eigen::MatrixXcd matrix_;
};

/// A complete orthonormal basis on an ordered set of target qubits.
class OrthonormalBasis {
  public:
    /// Throws ValueError if the vectors are not orthonormal within `tolerance`,
    /// DimensionError on size mismatch or repeated targets.
    OrthonormalBasis(std::vector<std::size_t> targets, std::vector<std::vector<Amplitude>> vectors,
                     double tolerance = kTolerance);

    /// The computational basis on `targets`.
    static OrthonormalBasis computational(std::vector<std::size_t> targets);

    const std::vector<std::size_t> &targets() const {
        return targets_;
    }
    const std::vector<std::vector<Amplitude>> &vectors() const {
        return vectors_;
    }
    std::size_t size() const {
        return vectors_.size();
    }

    /// Same vectors, measured on a different set of qubits of equal size.
    OrthonormalBasis retargeted(std::vector<std::size_t> targets) const;

  private:
    std::vector<std::size_t> targets_;
    std::vector<std::vector<Amplitude>> vectors_;
};

struct MeasurementResult {
    std::size_t outcome_index = 0;
    double probability = 0.0;
    /// State of the unmeasured qubits, which keep their relative order.
    PureState post_state;
};

/// Gram matrix G(i, j) = <v_i|v_j> of a list of equal-length vectors.
Eigen::MatrixXcd gram_matrix(std::span<const std::vector<Amplitude>> vectors);

/// Maximum entrywise deviation of a Gram matrix from the identity.
double gram_deviation(const Eigen::MatrixXcd &gram);

PureState tensor(const PureState &a, const PureState &b, std::size_t max_qubits = kDefaultMaxQubits);

PureState apply_unitary(const PureState &s, std::span<const std::size_t> targets, const Unitary &u);

/// Projective measurement with the measured qubits removed from the register.
/// When `forced` is set that branch is returned without consulting `rng`.
MeasurementResult measure(const PureState &s, const OrthonormalBasis &basis, std::optional<std::size_t> forced,
                          Rng &rng);

std::vector<double> born_probabilities(const PureState &s, const OrthonormalBasis &basis);

/// |<a|b>|^2; equals 1 exactly when a and b differ by a global phase.
double fidelity_up_to_global_phase(const PureState &a, const PureState &b);

/// <a|b>.
Amplitude inner_product(const PureState &a, const PureState &b);

/// Von Neumann entropy in bits of the reduced state on `subset`.
double entanglement_entropy(const PureState &s, std::span<const std::size_t> subset);

/// Partial trace over every qubit not in `subset`; row/column index follows subset order.
Eigen::MatrixXcd reduced_density_matrix(const PureState &s, std::span<const std::size_t> subset);

/// Removes a known product factor: returns r where s = factor (on `targets`) (x) r.
/// Throws ValueError if s does not factor that way within kTolerance.
PureState discard_factor(const PureState &s, std::span<const std::size_t> targets, const PureState &factor);

}  // namespace qislab
