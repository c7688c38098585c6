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

#include "qislab/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace qislab {

namespace {

bool is_power_of_two(std::size_t n) {
    return n != 0 && std::has_single_bit(n);
}

double squared_norm(std::span<const Amplitude> v) {
    double total = 0.0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

void check_targets(std::span<const std::size_t> targets, std::size_t num_qubits) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= num_qubits) {
            throw DimensionError("qubit index " + std::to_string(targets[i]) + " out of range for " +
                                 std::to_string(num_qubits) + "-qubit register");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw DimensionError("repeated qubit index " + std::to_string(targets[i]));
            }
        }
    }
}

// Splits a register into target qubits and the remaining qubits (in order)
// and maps each full basis index to its (target, rest) index pair.
class Bipartition {
  public:
    Bipartition(std::size_t num_qubits, std::span<const std::size_t> targets)
        : num_qubits_(num_qubits), targets_(targets.begin(), targets.end()) {
        check_targets(targets, num_qubits);
        for (std::size_t q = 0; q < num_qubits; ++q) {
            if (std::find(targets_.begin(), targets_.end(), q) == targets_.end()) {
                rest_.push_back(q);
            }
        }
    }

    std::size_t target_dim() const {
        return std::size_t{1} << targets_.size();
    }
    std::size_t rest_dim() const {
        return std::size_t{1} << rest_.size();
    }
    const std::vector<std::size_t> &rest() const {
        return rest_;
    }

    std::size_t target_index(std::size_t full) const {
        return gather(full, targets_);
    }
    std::size_t rest_index(std::size_t full) const {
        return gather(full, rest_);
    }

    std::size_t full_index(std::size_t target, std::size_t rest) const {
        return scatter(target, targets_) | scatter(rest, rest_);
    }

  private:
    std::size_t bit(std::size_t full, std::size_t qubit) const {
        return (full >> (num_qubits_ - 1 - qubit)) & 1U;
    }

    std::size_t gather(std::size_t full, const std::vector<std::size_t> &qubits) const {
        std::size_t out = 0;
        for (std::size_t q : qubits) {
            out = (out << 1) | bit(full, q);
        }
        return out;
    }

    std::size_t scatter(std::size_t local, const std::vector<std::size_t> &qubits) const {
        std::size_t out = 0;
        const std::size_t k = qubits.size();
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t b = (local >> (k - 1 - j)) & 1U;
            out |= b << (num_qubits_ - 1 - qubits[j]);
        }
        return out;
    }

    std::size_t num_qubits_;
    std::vector<std::size_t> targets_;
    std::vector<std::size_t> rest_;
};

// (<v| on targets (x) I) s, unnormalized.
std::vector<Amplitude> project(const PureState &s, const Bipartition &parts, std::span<const Amplitude> v) {
    std::vector<Amplitude> out(parts.rest_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out[parts.rest_index(i)] += std::conj(v[parts.target_index(i)]) * s[i];
    }
    return out;
}

// Rows indexed by `subset`, columns by the complement.
Eigen::MatrixXcd schmidt_matrix(const PureState &s, const Bipartition &parts) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(parts.target_dim()),
                                                static_cast<Eigen::Index>(parts.rest_dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        m(static_cast<Eigen::Index>(parts.target_index(i)), static_cast<Eigen::Index>(parts.rest_index(i))) = s[i];
    }
    return m;
}

}  // namespace

PureState::PureState(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (!is_power_of_two(amplitudes_.size()) || amplitudes_.size() < 2) {
        throw DimensionError("state length " + std::to_string(amplitudes_.size()) + " is not 2^n with n >= 1");
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValueError("non-finite amplitude");
        }
    }
    const double n2 = squared_norm(amplitudes_);
    if (std::abs(n2 - 1.0) > kTolerance) {
        throw ValueError("state is not normalized (squared norm " + std::to_string(n2) + ")");
    }
}

PureState PureState::normalized(std::vector<Amplitude> amplitudes) {
    const double n2 = squared_norm(amplitudes);
    if (!(n2 > kZeroProbability) || !std::isfinite(n2)) {
        throw ValueError("cannot normalize a zero or non-finite vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis_state(std::size_t num_qubits, std::size_t index) {
    if (num_qubits == 0 || num_qubits > 8 * sizeof(std::size_t) - 1) {
        throw DimensionError("invalid qubit count");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw DimensionError("basis index out of range");
    }
    std::vector<Amplitude> v(dim);
    v[index] = 1.0;
    return PureState(std::move(v));
}

PureState PureState::with_global_phase(Amplitude phase) const {
    if (std::abs(std::abs(phase) - 1.0) > kTolerance) {
        throw ValueError("global phase must have unit modulus");
    }
    std::vector<Amplitude> v = amplitudes_;
    for (auto &a : v) {
        a *= phase;
    }
    return PureState::normalized(std::move(v));
}

Unitary::Unitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || !is_power_of_two(static_cast<std::size_t>(matrix_.rows()))) {
        throw DimensionError("unitary must be square with power-of-two size");
    }
    if (!matrix_.allFinite()) {
        throw ValueError("non-finite matrix entry");
    }
    const Eigen::MatrixXcd product = matrix_.adjoint() * matrix_;
    const auto id = Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
    if ((product - id).cwiseAbs().maxCoeff() > kTolerance) {
        throw ValueError("matrix is not unitary");
    }
}

Unitary Unitary::identity(std::size_t num_qubits) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    return Unitary(Eigen::MatrixXcd::Identity(dim, dim));
}

Unitary Unitary::diagonal(std::span<const Amplitude> phases) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(phases.size()),
                                                static_cast<Eigen::Index>(phases.size()));
    for (std::size_t i = 0; i < phases.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = phases[i];
    }
    return Unitary(std::move(m));
}

std::size_t Unitary::num_qubits() const {
    return static_cast<std::size_t>(std::countr_zero(dim()));
}

Unitary Unitary::adjoint() const {
    return Unitary(matrix_.adjoint());
}

Unitary operator*(const Unitary &a, const Unitary &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("unitary dimensions differ");
    }
    return Unitary(a.matrix_ * b.matrix_);
}

Eigen::MatrixXcd gram_matrix(std::span<const std::vector<Amplitude>> vectors) {
    const auto n = static_cast<Eigen::Index>(vectors.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto &u = vectors[static_cast<std::size_t>(i)];
            const auto &v = vectors[static_cast<std::size_t>(j)];
            if (u.size() != v.size()) {
                throw DimensionError("vectors have different lengths");
            }
            Amplitude acc = 0.0;
            for (std::size_t k = 0; k < u.size(); ++k) {
                acc += std::conj(u[k]) * v[k];
            }
            g(i, j) = acc;
        }
    }
    return g;
}

double gram_deviation(const Eigen::MatrixXcd &gram) {
    if (gram.size() == 0) {
        return 0.0;
    }
    return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

OrthonormalBasis::OrthonormalBasis(std::vector<std::size_t> targets, std::vector<std::vector<Amplitude>> vectors,
                                   double tolerance)
    : targets_(std::move(targets)), vectors_(std::move(vectors)) {
    if (targets_.empty()) {
        throw DimensionError("basis needs at least one target qubit");
    }
    check_targets(targets_, 8 * sizeof(std::size_t) - 1);
    const std::size_t dim = std::size_t{1} << targets_.size();
    if (vectors_.size() != dim) {
        throw DimensionError("basis on " + std::to_string(targets_.size()) + " qubits needs " + std::to_string(dim) +
                             " vectors");
    }
    for (const auto &v : vectors_) {
        if (v.size() != dim) {
            throw DimensionError("basis vector has wrong length");
        }
    }
    if (!(gram_deviation(gram_matrix(vectors_)) <= tolerance)) {
        throw ValueError("basis vectors are not orthonormal");
    }
}

OrthonormalBasis OrthonormalBasis::computational(std::vector<std::size_t> targets) {
    const std::size_t dim = std::size_t{1} << targets.size();
    std::vector<std::vector<Amplitude>> vectors(dim, std::vector<Amplitude>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        vectors[i][i] = 1.0;
    }
    return OrthonormalBasis(std::move(targets), std::move(vectors));
}

OrthonormalBasis OrthonormalBasis::retargeted(std::vector<std::size_t> targets) const {
    if (targets.size() != targets_.size()) {
        throw DimensionError("retargeted basis must keep the same number of qubits");
    }
    OrthonormalBasis copy = *this;
    check_targets(targets, 8 * sizeof(std::size_t) - 1);
    copy.targets_ = std::move(targets);
    return copy;
}

PureState tensor(const PureState &a, const PureState &b, std::size_t max_qubits) {
    const std::size_t total = a.num_qubits() + b.num_qubits();
    if (total > max_qubits) {
        throw CapacityError("tensor product has " + std::to_string(total) + " qubits; limit is " +
                            std::to_string(max_qubits));
    }
    std::vector<Amplitude> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PureState(std::move(out));
}

PureState apply_unitary(const PureState &s, std::span<const std::size_t> targets, const Unitary &u) {
    if (u.dim() != (std::size_t{1} << targets.size())) {
        throw DimensionError("unitary of dimension " + std::to_string(u.dim()) + " applied to " +
                             std::to_string(targets.size()) + " qubits");
    }
    const Bipartition parts(s.num_qubits(), targets);
    std::vector<Amplitude> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const std::size_t col = parts.target_index(i);
        const std::size_t rest = parts.rest_index(i);
        for (std::size_t row = 0; row < u.dim(); ++row) {
            out[parts.full_index(row, rest)] += u(row, col) * s[i];
        }
    }
    return PureState(std::move(out));
}

std::vector<double> born_probabilities(const PureState &s, const OrthonormalBasis &basis) {
    const Bipartition parts(s.num_qubits(), basis.targets());
    if (parts.rest().empty()) {
        // Measuring the whole register leaves nothing to return as a post-state.
        throw DimensionError("measurement must leave at least one qubit unmeasured");
    }
    std::vector<double> probs;
    probs.reserve(basis.size());
    for (const auto &v : basis.vectors()) {
        probs.push_back(squared_norm(project(s, parts, v)));
    }
    return probs;
}

MeasurementResult measure(const PureState &s, const OrthonormalBasis &basis, std::optional<std::size_t> forced,
                          Rng &rng) {
    const auto probs = born_probabilities(s, basis);
    std::size_t outcome = 0;
    if (forced) {
        if (*forced >= probs.size()) {
            throw MeasurementError("forced outcome " + std::to_string(*forced) + " out of range");
        }
        if (probs[*forced] <= kZeroProbability) {
            throw MeasurementError("forced outcome " + std::to_string(*forced) + " has zero probability");
        }
        outcome = *forced;
    } else {
        std::discrete_distribution<std::size_t> pick(probs.begin(), probs.end());
        outcome = pick(rng);
    }
    const Bipartition parts(s.num_qubits(), basis.targets());
    return MeasurementResult{outcome, probs[outcome],
                             PureState::normalized(project(s, parts, basis.vectors()[outcome]))};
}

Amplitude inner_product(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("states have different qubit counts");
    }
    Amplitude acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity_up_to_global_phase(const PureState &a, const PureState &b) {
    return std::norm(inner_product(a, b));
}

double entanglement_entropy(const PureState &s, std::span<const std::size_t> subset) {
    if (subset.empty() || subset.size() >= s.num_qubits()) {
        throw DimensionError("entropy subset must be a nonempty proper subset");
    }
    const Bipartition parts(s.num_qubits(), subset);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(schmidt_matrix(s, parts));
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double p = svd.singularValues()(i) * svd.singularValues()(i);
        if (p > kZeroProbability) {
            entropy -= p * std::log2(p);
        }
    }
    return entropy;
}

Eigen::MatrixXcd reduced_density_matrix(const PureState &s, std::span<const std::size_t> subset) {
    if (subset.empty()) {
        throw DimensionError("reduced state needs a nonempty subset");
    }
    const Bipartition parts(s.num_qubits(), subset);
    const Eigen::MatrixXcd m = schmidt_matrix(s, parts);
    return m * m.adjoint();
}

PureState discard_factor(const PureState &s, std::span<const std::size_t> targets, const PureState &factor) {
    if (factor.num_qubits() != targets.size()) {
        throw DimensionError("factor size does not match target count");
    }
    const Bipartition parts(s.num_qubits(), targets);
    if (parts.rest().empty()) {
        throw DimensionError("cannot discard the whole register");
    }
    auto rest = project(s, parts, factor.amplitudes());
    const double weight = squared_norm(rest);
    if (std::abs(weight - 1.0) > kTolerance) {
        throw ValueError("state does not factor as the given product");
    }
    return PureState::normalized(std::move(rest));
}

}  // namespace qislab
