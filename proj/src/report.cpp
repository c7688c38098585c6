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

#include "qislab/report.hpp"

#include <charconv>
#include <sstream>

namespace qislab::report {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json to_json(Amplitude a) {
    return {{"re", a.real()}, {"im", a.imag()}};
}

json to_json(const states::InputParams &p) {
    const auto cls = states::classify(p);
    json j = {
        {"alpha", p.alpha()},
        {"beta", to_json(p.beta())},
        {"gamma", to_json(p.gamma())},
        {"delta", to_json(p.delta())},
        {"class", states::to_string(cls.kind)},
    };
    if (cls.kind == states::InputKind::Equatorial || cls.kind == states::InputKind::PhaseLocked) {
        j["phi"] = cls.phi;
    }
    return j;
}

json to_json(const states::BasisDiagnostic &d) {
    json gram = json::array();
    for (const auto &row : d.gram) {
        json r = json::array();
        for (const auto &a : row) {
            r.push_back(to_json(a));
        }
        gram.push_back(std::move(r));
    }
    return {{"message", d.message}, {"max_deviation", d.max_deviation}, {"gram", std::move(gram)}};
}

json to_json(const protocol::ClassicalMessage &m) {
    return {
        {"step", m.step},
        {"sender", protocol::to_string(m.sender)},
        {"receiver", protocol::to_string(m.receiver)},
        {"bits", m.bits},
        {"label", m.label},
    };
}

json to_json(const protocol::ClassicalCost &c) {
    return {{"alice_bits", c.alice_bits}, {"bob_bits", c.bob_bits}, {"baseline_bits", c.baseline_bits}};
}

json to_json(const verify::DeviationReport &r) {
    json entries = json::array();
    for (const auto &e : r.entries) {
        entries.push_back({
            {"location", e.location},
            {"printed", e.printed},
            {"derived", e.derived},
            {"classification", verify::to_string(e.classification)},
        });
    }
    return entries;
}

json run_to_json(const protocol::RunResult &r, const states::InputParams &input, const protocol::CorrectionMode &mode,
                 std::uint64_t seed) {
    json transcript = json::array();
    for (const auto &m : r.transcript) {
        transcript.push_back(to_json(m));
    }
    json charlie = json::array();
    for (const auto &a : r.charlie_state.amplitudes()) {
        charlie.push_back(to_json(a));
    }
    json correction = json::array();
    for (std::size_t i = 0; i < r.correction_used.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.correction_used.dim(); ++j) {
            row.push_back(to_json(r.correction_used(i, j)));
        }
        correction.push_back(std::move(row));
    }
    json mode_json;
    if (const auto *known = std::get_if<protocol::ReceiverKnowsPhase>(&mode)) {
        mode_json = {{"kind", "known-phase"}, {"phi", known->phi}};
    } else {
        mode_json = {{"kind", "input-independent"}};
    }
    return {
        {"scheme", to_string(r.scheme)},
        {"input", to_json(input)},
        {"mode", std::move(mode_json)},
        {"seed", seed},
        {"alice_outcome", r.alice_outcome},
        {"bob_outcome", r.bob_outcome},
        {"alice_probability", r.alice_probability},
        {"bob_probability", r.bob_probability},
        {"transcript", std::move(transcript)},
        {"charlie_state", std::move(charlie)},
        {"correction", std::move(correction)},
        {"correction_exact", r.correction_exact},
        {"fidelity", r.fidelity},
        {"success", r.success},
        {"cost", to_json(protocol::classical_cost(r))},
    };
}

std::string run_to_csv(const protocol::RunResult &r) {
    const auto cost = protocol::classical_cost(r);
    std::ostringstream out;
    out << "scheme,alice_outcome,bob_outcome,fidelity,success,alice_bits,bob_bits,baseline_bits\n";
    out << to_string(r.scheme) << ',' << r.alice_outcome << ',' << r.bob_outcome << ',' << format_double(r.fidelity)
        << ',' << (r.success ? "true" : "false") << ',' << cost.alice_bits << ',' << cost.bob_bits << ','
        << cost.baseline_bits << '\n';
    return out.str();
}

json sweep_to_json(const std::vector<verify::SweepRow> &rows) {
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back({
            {"scheme", to_string(r.scheme)},
            {"phi", r.phi},
            {"alice_outcome", r.alice_outcome},
            {"bob_outcome", r.bob_outcome},
            {"fidelity", r.fidelity},
            {"success", r.success},
        });
    }
    return out;
}

std::string sweep_to_csv(const std::vector<verify::SweepRow> &rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        out << to_string(r.scheme) << ',' << format_double(r.phi) << ',' << r.alice_outcome << ',' << r.bob_outcome
            << ',' << format_double(r.fidelity) << ',' << (r.success ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace qislab::report
