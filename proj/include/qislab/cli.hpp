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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "qislab/qstate.hpp"

namespace qislab::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitFailure = 1,
    kExitInadmissible = 2,
    kExitUsage = 64,
};

/// Environment variable consulted when --seed is absent.
inline constexpr const char *kSeedEnvVar = "QISLAB_SEED";
inline constexpr double kInputNormTolerance = 1e-6;

/// Parses "a", "bi", "a+bi" or "a-bi" (no spaces, optional exponents).
std::optional<Amplitude> parse_complex(std::string_view text);

/// Entry point behind the `qislab` binary: subcommands run, verify, sweep.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qislab::cli
