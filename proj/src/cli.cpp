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

#include "qislab/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qislab/acceptance.hpp"
#include "qislab/protocol.hpp"
#include "qislab/report.hpp"
#include "qislab/sampling.hpp"
#include "qislab/states.hpp"
#include "qislab/verify.hpp"

namespace qislab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::optional<double> parse_real(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

// "", "+" and "-" stand for a unit imaginary coefficient.
std::optional<double> parse_imag_coefficient(std::string_view text) {
    if (text.empty() || text == "+") {
        return 1.0;
    }
    if (text == "-") {
        return -1.0;
    }
    return parse_real(text);
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

std::vector<Scheme> schemes_from(const std::string &name) {
    if (name == "both") {
        return {Scheme::Cluster, Scheme::Brown};
    }
    const auto s = parse_scheme(name);
    if (!s) {
        throw UsageError("unknown scheme '" + name + "'");
    }
    return {*s};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv(kSeedEnvVar)) {
        std::uint64_t value = 0;
        const std::string_view text(env);
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
            throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
        }
        return value;
    }
    return 0;
}

// Writes to --out when given, else to `out`.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + path + "'");
    }
    file << text;
}

// Parses --input. Malformed or non-normalized text is a usage error; a
// complex alpha is reported as an inadmissible input.
states::InputParams parse_input(const std::string &text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("--input needs four comma-separated coefficients");
    }
    std::array<Amplitude, 4> c{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto v = parse_complex(parts[i]);
        if (!v) {
            throw UsageError("cannot parse coefficient '" + parts[i] + "'");
        }
        c[i] = *v;
    }
    double n2 = 0.0;
    for (const auto &a : c) {
        n2 += std::norm(a);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > kInputNormTolerance) {
        throw UsageError("--input is not normalized (norm " + report::format_double(std::sqrt(n2)) + ")");
    }
    if (c[0].imag() != 0.0) {
        throw protocol::InadmissibleInput(
            states::BasisDiagnostic{{}, 0.0, "alpha must be real; got imaginary part " + report::format_double(c[0].imag())});
    }
    return states::InputParams::normalize(c[0].real(), c[1], c[2], c[3]);
}

std::optional<protocol::ForcedBranch> parse_force(const std::string &text) {
    if (text.empty()) {
        return std::nullopt;
    }
    const auto parts = split(text, ',');
    int a = -1;
    int b = -1;
    if (parts.size() == 2) {
        std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), a);
        std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), b);
    }
    if (a < 0 || a > 3 || b < 0 || b > 1) {
        throw UsageError("--force expects a,b with a in 0..3 and b in 0..1");
    }
    return protocol::ForcedBranch{a, b};
}

struct RunArgs {
    std::string scheme = "cluster";
    std::optional<double> equatorial;
    std::string input;
    std::string mode = "known-phase";
    std::optional<std::uint64_t> seed;
    std::string force;
    std::string format = "json";
    std::string out_path;
    double tolerance = protocol::kSuccessTolerance;
};

int cmd_run(const RunArgs &args, std::ostream &out, std::ostream &err) {
    const auto schemes = schemes_from(args.scheme);
    const auto forced = parse_force(args.force);
    const std::uint64_t seed = resolve_seed(args.seed);

    states::InputParams input = states::equatorial_input(0.0);
    double phi = 0.0;
    try {
        if (!args.input.empty()) {
            input = parse_input(args.input);
            const auto cls = states::classify(input);
            phi = (cls.kind == states::InputKind::Equatorial || cls.kind == states::InputKind::PhaseLocked) ? cls.phi
                                                                                                     : 0.0;
        } else if (args.equatorial) {
            input = states::equatorial_input(*args.equatorial);
            phi = *args.equatorial;
        }
    } catch (const protocol::InadmissibleInput &e) {
        out << json{{"error", "inadmissible_input"}, {"diagnostic", report::to_json(e.diagnostic())}}.dump(2) << '\n';
        err << "inadmissible input: " << e.what() << '\n';
        return kExitInadmissible;
    }
    const protocol::CorrectionMode mode = args.mode == "known-phase"
                                              ? protocol::CorrectionMode{protocol::ReceiverKnowsPhase{phi}}
                                              : protocol::CorrectionMode{protocol::InputIndependentOnly{}};

    Rng rng(seed);
    std::vector<protocol::RunResult> results;
    try {
        for (Scheme s : schemes) {
            results.push_back(protocol::run_qis(s, input, mode, forced, rng));
        }
    } catch (const protocol::InadmissibleInput &e) {
        out << json{{"error", "inadmissible_input"}, {"diagnostic", report::to_json(e.diagnostic())}}.dump(2) << '\n';
        err << "inadmissible input: " << e.what() << '\n';
        return kExitInadmissible;
    }
    for (auto &r : results) {
        r.success = r.fidelity >= 1.0 - args.tolerance;
    }

    std::string text;
    if (args.format == "csv") {
        for (std::size_t i = 0; i < results.size(); ++i) {
            const std::string block = report::run_to_csv(results[i]);
            // Keep one header for multi-scheme output.
            text += i == 0 ? block : block.substr(block.find('\n') + 1);
        }
    } else if (results.size() == 1) {
        text = report::run_to_json(results.front(), input, mode, seed).dump(2) + "\n";
    } else {
        json all = json::array();
        for (const auto &r : results) {
            all.push_back(report::run_to_json(r, input, mode, seed));
        }
        text = all.dump(2) + "\n";
    }
    emit(text, args.out_path, out);

    bool ok = true;
    for (const auto &r : results) {
        if (!r.success) {
            err << to_string(r.scheme) << ": branch (" << r.alice_outcome << ", " << r.bob_outcome
                << ") failed with fidelity " << report::format_double(r.fidelity) << '\n';
            ok = false;
        }
    }
    return ok ? kExitSuccess : kExitFailure;
}

struct VerifyArgs {
    std::string scheme = "both";
    std::string deviations_path = "deviations.json";
    std::optional<std::uint64_t> seed;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
    const auto schemes = schemes_from(args.scheme);
    acceptance::Options options;
    if (const std::uint64_t seed = resolve_seed(args.seed); seed != 0 || args.seed) {
        options.seed = seed;
    }
    const auto results = acceptance::run_all(options);

    const verify::DeviationReport deviations = schemes.size() == 2 ? acceptance::combined_deviation_report()
                                                                   : verify::standard_deviation_report(schemes.front());
    json schemes_json = json::array();
    for (Scheme s : schemes) {
        schemes_json.push_back(to_string(s));
    }
    emit(json{{"schemes", schemes_json}, {"entries", report::to_json(deviations)}}.dump(2) + "\n",
         args.deviations_path, out);

    if (args.format == "json") {
        json criteria = json::array();
        bool all = true;
        for (const auto &r : results) {
            criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        out << json{{"criteria", criteria}, {"passed", all}}.dump(2) << '\n';
    } else if (args.format == "csv") {
        out << "id,name,passed,detail\n";
        for (const auto &r : results) {
            out << r.id << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
        }
    } else {
        for (const auto &r : results) {
            out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
        }
    }

    // First failure first; the rest follow so a mutation that trips several
    // criteria names all of them.
    int code = kExitSuccess;
    for (const auto &r : results) {
        if (!r.passed) {
            err << "verification failed: criterion " << r.id << " (" << r.name << "): " << r.detail << '\n';
            code = kExitFailure;
        }
    }
    return code;
}

struct SweepArgs {
    std::string scheme = "both";
    std::optional<long long> grid;
    std::string phis;
    bool sampled = false;
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
    std::string out_path;
};

int cmd_sweep(const SweepArgs &args, std::ostream &out, std::ostream &) {
    const auto schemes = schemes_from(args.scheme);
    std::vector<double> grid;
    if (!args.phis.empty()) {
        for (const auto &part : split(args.phis, ',')) {
            const auto v = parse_real(part);
            if (!v) {
                throw UsageError("cannot parse angle '" + part + "'");
            }
            grid.push_back(*v);
        }
    } else {
        const long long n = args.grid.value_or(16);
        if (n <= 0) {
            throw UsageError("--grid needs at least one point");
        }
        grid = sampling::phi_grid(static_cast<std::size_t>(n));
    }
    const std::uint64_t seed = resolve_seed(args.seed);

    std::vector<verify::SweepRow> rows;
    for (Scheme s : schemes) {
        auto part = verify::sweep(s, grid, !args.sampled, seed);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    const std::string text =
        args.format == "json" ? report::sweep_to_json(rows).dump(2) + "\n" : report::sweep_to_csv(rows);
    emit(text, args.out_path, out);

    for (const auto &r : rows) {
        if (!r.success) {
            return kExitFailure;
        }
    }
    return kExitSuccess;
}

}  // namespace

std::optional<Amplitude> parse_complex(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    if (text.back() != 'i') {
        const auto re = parse_real(text);
        return re ? std::optional<Amplitude>(Amplitude{*re, 0.0}) : std::nullopt;
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not part of an exponent or the leading sign.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    if (split_at == std::string_view::npos) {
        const auto im = parse_imag_coefficient(body);
        return im ? std::optional<Amplitude>(Amplitude{0.0, *im}) : std::nullopt;
    }
    const auto re = parse_real(body.substr(0, split_at));
    const auto im = parse_imag_coefficient(body.substr(split_at));
    if (!re || !im) {
        return std::nullopt;
    }
    return Amplitude{*re, *im};
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qislab: two-qubit quantum information splitting with cluster and Brown states"};
    app.require_subcommand(1);
    const std::vector<std::string> scheme_names = {"cluster", "brown", "both"};
    const std::vector<std::string> formats = {"json", "csv"};

    RunArgs run_args;
    auto *run_cmd = app.add_subcommand("run", "Execute one protocol run and print its report");
    run_cmd->add_option("--scheme", run_args.scheme, "cluster, brown or both")
        ->check(CLI::IsMember(scheme_names));
    auto *eq_opt = run_cmd->add_option("--equatorial", run_args.equatorial, "Equatorial input phase in radians");
    run_cmd->add_option("--input", run_args.input, "alpha,beta,gamma,delta; complex as a+bi")->excludes(eq_opt);
    run_cmd->add_option("--mode", run_args.mode, "known-phase or input-independent")
        ->check(CLI::IsMember({"known-phase", "input-independent"}));
    run_cmd->add_option("--seed", run_args.seed, "RNG seed (default $QISLAB_SEED, else 0)");
    run_cmd->add_option("--force", run_args.force, "Force branch a,b (a in 0..3, b in 0..1)");
    run_cmd->add_option("--format", run_args.format, "json or csv")->check(CLI::IsMember(formats));
    run_cmd->add_option("--out", run_args.out_path, "Write the report to this file");
    run_cmd->add_option("--tolerance", run_args.tolerance, "Success threshold: fidelity >= 1 - tolerance")
        ->check(CLI::Range(0.0, 1.0));

    VerifyArgs verify_args;
    auto *verify_cmd = app.add_subcommand("verify", "Run every acceptance criterion and emit the deviations report");
    verify_cmd->add_option("--scheme", verify_args.scheme, "Deviations for cluster, brown or both")
        ->check(CLI::IsMember(scheme_names));
    verify_cmd->add_option("--emit-deviations", verify_args.deviations_path, "Deviations JSON path");
    verify_cmd->add_option("--seed", verify_args.seed, "Seed for the randomized criteria");
    verify_cmd->add_option("--format", verify_args.format, "text, json or csv summary")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    SweepArgs sweep_args;
    auto *sweep_cmd = app.add_subcommand("sweep", "Fidelity table over equatorial phases");
    sweep_cmd->add_option("--scheme", sweep_args.scheme, "cluster, brown or both")->check(CLI::IsMember(scheme_names));
    auto *grid_opt = sweep_cmd->add_option("--grid", sweep_args.grid, "Number of uniformly spaced phases (default 16)");
    sweep_cmd->add_option("--phis", sweep_args.phis, "Explicit comma-separated phases")->excludes(grid_opt);
    sweep_cmd->add_flag("--sampled", sweep_args.sampled, "One sampled run per phase instead of all 8 branches");
    sweep_cmd->add_option("--seed", sweep_args.seed, "RNG seed for --sampled");
    sweep_cmd->add_option("--format", sweep_args.format, "csv or json")->check(CLI::IsMember(formats));
    sweep_cmd->add_option("--out", sweep_args.out_path, "Write the table to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (*run_cmd) {
            return cmd_run(run_args, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_args, out, err);
        }
        return cmd_sweep(sweep_args, out, err);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace qislab::cli
