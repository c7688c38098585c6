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
 * JSON and CSV encodings shared by the CLI and the tests. Field names are
 * stable; see schemas/ for the JSON shapes. Complex numbers are {"re", "im"}.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qislab/protocol.hpp"
#include "qislab/verify.hpp"

namespace qislab::report {

nlohmann::json to_json(Amplitude a);
nlohmann::json to_json(const states::InputParams &p);
nlohmann::json to_json(const states::BasisDiagnostic &d);
nlohmann::json to_json(const protocol::ClassicalMessage &m);
nlohmann::json to_json(const protocol::ClassicalCost &c);
nlohmann::json to_json(const verify::DeviationReport &r);

/// Full run report: outcomes, transcript, Charlie's state, fidelity, cost.
nlohmann::json run_to_json(const protocol::RunResult &r, const states::InputParams &input,
                           const protocol::CorrectionMode &mode, std::uint64_t seed);

/// Header line plus one row: scheme,alice_outcome,bob_outcome,fidelity,success,alice_bits,bob_bits,baseline_bits
std::string run_to_csv(const protocol::RunResult &r);

inline constexpr const char *kSweepCsvHeader = "scheme,phi,alice_outcome,bob_outcome,fidelity,success";
nlohmann::json sweep_to_json(const std::vector<verify::SweepRow> &rows);
std::string sweep_to_csv(const std::vector<verify::SweepRow> &rows);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace qislab::report
