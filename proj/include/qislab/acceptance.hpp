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
 * The ten end-to-end acceptance criteria. Used by the acceptance test binary
 * and by `qislab verify`. Tolerances are fixed constants below.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qislab/qstate.hpp"
#include "qislab/verify.hpp"

namespace qislab::acceptance {

inline constexpr double kAmplitudeTolerance = 1e-12;
inline constexpr double kEntropyTolerance = 1e-9;
inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kFidelityTolerance = 1e-9;
inline constexpr double kCollapseTolerance = 1e-10;
inline constexpr double kCrossCheckTolerance = 1e-9;
inline constexpr double kBasisGramTolerance = 1e-8;
inline constexpr double kMinImagGamma = 0.05;
inline constexpr double kResourceTimeLimitSeconds = 1.0;
inline constexpr double kEndToEndTimeLimitSeconds = 10.0;
inline constexpr std::size_t kEquatorialGridPoints = 16;
inline constexpr std::size_t kRandomInputs = 100;
inline constexpr std::size_t kAdmissibilityDraws = 1000;
inline constexpr std::size_t kCrossCheckInputs = 50;
inline constexpr std::uint64_t kDefaultSeed = 20260415;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    /// Replace the resource states inspected by criteria 1 and 2 (mutation testing).
    std::optional<PureState> cluster_override;
    std::optional<PureState> brown_override;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    /// Deterministic for a fixed seed; contains no timings.
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_all(const Options &options = {});

/// standard_deviation_report for both schemes, cluster entries first, with
/// duplicates removed.
verify::DeviationReport combined_deviation_report();

/// (location, classification) pairs the combined report must contain exactly.
std::vector<std::pair<std::string, verify::DeviationKind>> expected_deviations();

}  // namespace qislab::acceptance
