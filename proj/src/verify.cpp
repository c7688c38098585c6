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

#include "qislab/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qislab/sampling.hpp"

namespace qislab::verify {

namespace {

using Vec = std::vector<Amplitude>;

constexpr double kTableTolerance = 1e-9;

// --- Printed fixtures -------------------------------------------------------

// One term c * coefficient[coef] (conjugated if `conj`) * |ket>.
struct Term {
    int coef;
    bool conj;
    int sign;
    unsigned ket;
};
using Row = std::array<Term, 4>;

const char *const kCoefficientNames[] = {"α", "β", "γ", "δ"};

// Sender's measurement rows: coefficient over |00>, |01>, |10>, |11>.
constexpr std::array<Row, 4> kPrintedBasisRows = {{
    {{{0, false, +1, 0b00}, {1, false, +1, 0b01}, {2, false, +1, 0b10}, {3, false, +1, 0b11}}},
    {{{1, true, +1, 0b00}, {0, false, -1, 0b01}, {3, true, +1, 0b10}, {2, false, -1, 0b11}}},
    {{{2, false, +1, 0b00}, {3, true, -1, 0b01}, {0, false, -1, 0b10}, {1, true, +1, 0b11}}},
    {{{3, true, +1, 0b00}, {2, false, +1, 0b01}, {1, true, -1, 0b10}, {0, false, -1, 0b11}}},
}};

// The basis the oracle measures in. Rows 1, 2 and 4 are as printed; row 3 is
// the unique unit vector orthogonal to them (up to phase) when beta and delta
// share a phase, which drops the conjugations on beta and delta.
constexpr std::array<Row, 4> kOracleBasisRows = {{
    kPrintedBasisRows[0],
    kPrintedBasisRows[1],
    {{{2, false, +1, 0b00}, {3, false, -1, 0b01}, {0, false, -1, 0b10}, {1, false, +1, 0b11}}},
    kPrintedBasisRows[3],
}};

// Cluster branch table, state column: kets over Bob, Charlie, Charlie.
constexpr std::array<Row, 4> kPrintedClusterRows = {{
    {{{0, false, +1, 0b000}, {1, true, +1, 0b011}, {2, false, +1, 0b101}, {3, true, +1, 0b110}}},
    {{{1, false, +1, 0b000}, {0, false, -1, 0b011}, {3, false, +1, 0b101}, {2, false, -1, 0b110}}},
    {{{2, false, +1, 0b000}, {3, false, -1, 0b011}, {0, false, -1, 0b101}, {1, false, +1, 0b110}}},
    {{{3, false, +1, 0b000}, {2, false, +1, 0b011}, {1, false, -1, 0b101}, {0, false, -1, 0b110}}},
}};

// Brown branch table, state column: `ket` is the eta index 1..4.
constexpr std::array<Row, 4> kPrintedBrownRows = {{
    {{{0, false, +1, 1}, {1, true, +1, 2}, {2, false, +1, 3}, {3, true, +1, 4}}},
    {{{1, false, +1, 1}, {0, false, +1, 2}, {3, false, +1, 3}, {2, false, -1, 4}}},
    {{{2, false, +1, 1}, {3, false, -1, 2}, {0, false, -1, 3}, {1, false, +1, 4}}},
    {{{3, false, +1, 1}, {2, false, +1, 2}, {1, false, -1, 3}, {0, false, -1, 4}}},
}};

struct SignedKet {
    unsigned ket;
    int sign;
};

// eta states with the printed 1/2 prefactor.
constexpr double kPrintedEtaPrefactor = 0.5;
constexpr std::array<std::array<SignedKet, 2>, 4> kPrintedEta = {{
    {{{0b101, +1}, {0b110, -1}}},
    {{{0b000, +1}, {0b011, -1}}},
    {{{0b001, +1}, {0b010, +1}}},
    {{{0b100, +1}, {0b111, +1}}},
}};

// Bob's basis in the Brown scheme as printed: (|0> +- |1>)/2.
constexpr double kPrintedBrownBobPrefactor = 0.5;

// --- Oracle resources -------------------------------------------------------

// Alice's two qubits and Bob's qubit within the 5-qubit resource. Charlie
// holds the remaining two, and Bob's qubit precedes them in both schemes.
struct OracleLayout {
    unsigned alice_hi;
    unsigned alice_lo;
    unsigned bob;
};

OracleLayout oracle_layout(Scheme scheme) {
    return scheme == Scheme::Cluster ? OracleLayout{0, 4, 1} : OracleLayout{0, 1, 2};
}

unsigned bit_of(unsigned index, unsigned qubit) {
    return (index >> (4 - qubit)) & 1U;
}

Amplitude coefficient(const states::InputParams &p, int k, bool conj) {
    const Amplitude c = p.coefficients()[static_cast<std::size_t>(k)];
    return conj ? std::conj(c) : c;
}

Vec basis_row(const std::array<Row, 4> &rows, const states::InputParams &p, int row) {
    Vec v(4);
    for (const Term &t : rows[static_cast<std::size_t>(row)]) {
        v[t.ket] += static_cast<double>(t.sign) * coefficient(p, t.coef, t.conj);
    }
    return v;
}

double squared_norm(const Vec &v) {
    double total = 0.0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

void require_admissible(const states::InputParams &p) {
    std::vector<Vec> rows;
    for (int r = 0; r < 4; ++r) {
        rows.push_back(basis_row(kOracleBasisRows, p, r));
    }
    const Eigen::MatrixXcd g = gram_matrix(rows);
    const double dev = gram_deviation(g);
    if (dev > states::kAliceBasisTolerance) {
        states::BasisDiagnostic diag;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                diag.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
            }
        }
        diag.max_deviation = dev;
        diag.message = "oracle: sender basis not orthonormal for this input";
        throw protocol::InadmissibleInput(diag);
    }
}

// <row| on Alice's qubits, applied to the resource; result over the other
// three qubits in ascending order.
Vec project_alice(const Vec &resource, const OracleLayout &layout, const Vec &row) {
    Vec out(8);
    for (unsigned i = 0; i < 32; ++i) {
        if (resource[i] == Amplitude{}) {
            continue;
        }
        const unsigned a = (bit_of(i, layout.alice_hi) << 1) | bit_of(i, layout.alice_lo);
        unsigned rest = 0;
        for (unsigned q = 0; q < 5; ++q) {
            if (q != layout.alice_hi && q != layout.alice_lo) {
                rest = (rest << 1) | bit_of(i, q);
            }
        }
        out[rest] += std::conj(row[a]) * resource[i];
    }
    return out;
}

// <x_b| on the first of three qubits.
Vec project_bob(const Vec &three, int bob_outcome) {
    const double h = 1.0 / std::numbers::sqrt2;
    const double s = bob_outcome == 0 ? h : -h;
    Vec out(4);
    for (unsigned j = 0; j < 4; ++j) {
        out[j] = h * three[j] + s * three[4 + j];
    }
    return out;
}

PureState normalized(Vec v) {
    return PureState::normalized(std::move(v));
}

// --- Deviation helpers ------------------------------------------------------

std::string render_terms(const Row &row, bool eta_kets, int ket_width = 3) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const Term &t = row[i];
        if (i == 0) {
            out += t.sign < 0 ? "−" : "";
        } else {
            out += t.sign < 0 ? " − " : " + ";
        }
        out += kCoefficientNames[t.coef];
        if (t.conj) {
            out += "*";
        }
        if (eta_kets) {
            out += "|η" + std::to_string(t.ket) + "⟩";
        } else {
            out += "|";
            for (int b = ket_width - 1; b >= 0; --b) {
                out += ((t.ket >> b) & 1U) ? "1" : "0";
            }
            out += "⟩";
        }
    }
    return out;
}

Vec printed_eta_vector(unsigned k) {
    Vec v(8);
    for (const SignedKet &sk : kPrintedEta[k - 1]) {
        v[sk.ket] += kPrintedEtaPrefactor * sk.sign;
    }
    return v;
}

Vec evaluate_row(const Row &row, Scheme scheme, const states::InputParams &p) {
    Vec v(8);
    for (const Term &t : row) {
        const Amplitude c = static_cast<double>(t.sign) * coefficient(p, t.coef, t.conj);
        if (scheme == Scheme::Cluster) {
            v[t.ket] += c;
        } else {
            const Vec e = printed_eta_vector(t.ket);
            for (std::size_t i = 0; i < 8; ++i) {
                v[i] += c * e[i];
            }
        }
    }
    return v;
}

bool row_matches(const Row &row, Scheme scheme, const states::InputParams &p, const PureState &oracle) {
    const Vec v = evaluate_row(row, scheme, p);
    if (squared_norm(v) <= kZeroProbability) {
        return false;
    }
    return equal_up_to_global_phase(normalized(v), oracle, kTableTolerance);
}

// Smallest set of sign flips and conjugation toggles that makes the printed
// row agree with the oracle. Sign-only fixes are preferred over conjugation
// fixes of the same size.
std::optional<std::pair<Row, DeviationKind>> repair_row(const Row &printed, Scheme scheme,
                                                        const states::InputParams &p, const PureState &oracle) {
    std::optional<std::pair<Row, DeviationKind>> best;
    int best_cost = 1 << 20;
    for (unsigned flips = 0; flips < 16; ++flips) {
        for (unsigned toggles = 0; toggles < 16; ++toggles) {
            const int changes = std::popcount(flips) + std::popcount(toggles);
            // Tie-break: fewer changes, then sign-only.
            const int cost = 2 * changes + (toggles != 0 ? 1 : 0);
            if (changes == 0 || cost >= best_cost) {
                continue;
            }
            Row candidate = printed;
            for (unsigned i = 0; i < 4; ++i) {
                if ((flips >> i) & 1U) {
                    candidate[i].sign = -candidate[i].sign;
                }
                if ((toggles >> i) & 1U) {
                    candidate[i].conj = !candidate[i].conj;
                }
            }
            if (row_matches(candidate, scheme, p, oracle)) {
                best = {candidate, toggles != 0 && flips == 0 ? DeviationKind::Conjugation : DeviationKind::Sign};
                best_cost = cost;
            }
        }
    }
    return best;
}

std::string render_state(const PureState &s) {
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (std::abs(s[i]) <= 1e-12) {
            continue;
        }
        std::snprintf(buf, sizeof buf, "%s(%.6f%+.6fi)|%zu⟩", out.empty() ? "" : " + ", s[i].real(), s[i].imag(), i);
        out += buf;
    }
    return out;
}

double norm_of(const Vec &v) {
    return std::sqrt(squared_norm(v));
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

PureState oracle_cluster5() {
    Vec v(32);
    for (unsigned ket : {0b00000U, 0b00111U, 0b11101U, 0b11010U}) {
        v[ket] += 0.5;
    }
    return PureState(std::move(v));
}

PureState oracle_brown5() {
    const double h = 1.0 / std::numbers::sqrt2;
    // Bell pairs as (ket, sign) lists: psi+-, phi+- in that order.
    const std::array<std::array<SignedKet, 2>, 4> bell = {{
        {{{0b00, +1}, {0b11, +1}}},
        {{{0b00, +1}, {0b11, -1}}},
        {{{0b01, +1}, {0b10, +1}}},
        {{{0b01, +1}, {0b10, -1}}},
    }};
    constexpr int kPsiPlus = 0, kPsiMinus = 1, kPhiPlus = 2, kPhiMinus = 3;
    const std::array<std::pair<unsigned, int>, 4> terms = {{
        {0b001, kPhiMinus},
        {0b010, kPsiMinus},
        {0b100, kPhiPlus},
        {0b111, kPsiPlus},
    }};
    Vec v(32);
    for (const auto &[head, pair] : terms) {
        for (const SignedKet &sk : bell[static_cast<std::size_t>(pair)]) {
            v[(head << 2) | sk.ket] += 0.5 * h * sk.sign;
        }
    }
    return PureState(std::move(v));
}

std::vector<BranchRecord> enumerate_branches(Scheme scheme, const states::InputParams &p, Stage stage) {
    require_admissible(p);
    const PureState resource = scheme == Scheme::Cluster ? oracle_cluster5() : oracle_brown5();
    const Vec r(resource.amplitudes().begin(), resource.amplitudes().end());
    const OracleLayout layout = oracle_layout(scheme);

    std::vector<BranchRecord> out;
    for (int a = 0; a < 4; ++a) {
        const Vec three = project_alice(r, layout, basis_row(kOracleBasisRows, p, a));
        const double pa = squared_norm(three);
        if (stage == Stage::AfterAlice) {
            out.push_back({a, std::nullopt, pa, pa, normalized(three)});
            continue;
        }
        for (int b = 0; b < 2; ++b) {
            const Vec two = project_bob(three, b);
            const double pab = squared_norm(two);
            out.push_back({a, b, pab, pab / pa, normalized(two)});
        }
    }
    return out;
}

Unitary derive_correction(Scheme scheme, int alice_outcome, int bob_outcome) {
    if (alice_outcome < 0 || alice_outcome > 3 || bob_outcome < 0 || bob_outcome > 1) {
        throw DimensionError("branch out of range");
    }
    const std::array<states::InputParams, 4> unit_inputs = {
        states::InputParams::make(1.0, 0.0, 0.0, 0.0),
        states::InputParams::make(0.0, 1.0, 0.0, 0.0),
        states::InputParams::make(0.0, 0.0, 1.0, 0.0),
        states::InputParams::make(0.0, 0.0, 0.0, 1.0),
    };
    Eigen::MatrixXcd forward(4, 4);
    for (Eigen::Index k = 0; k < 4; ++k) {
        const auto records = enumerate_branches(scheme, unit_inputs[static_cast<std::size_t>(k)], Stage::AfterBob);
        const PureState &c = records[static_cast<std::size_t>(2 * alice_outcome + bob_outcome)].residual_state;
        for (Eigen::Index i = 0; i < 4; ++i) {
            forward(i, k) = c[static_cast<std::size_t>(i)];
        }
    }
    return Unitary(forward.adjoint());
}

PureState printed_post_bob_state(Scheme scheme, double phi, int bob_outcome) {
    const double pm = bob_outcome == 0 ? 1.0 : -1.0;
    const Amplitude e = std::polar(1.0, -phi);
    Vec v(4);
    if (scheme == Scheme::Cluster) {
        v[0b00] += 1.0;
        v[0b11] += e;
        v[0b01] += pm;
        v[0b10] += pm * e;
    } else {
        v[0b01] += pm;
        v[0b10] -= pm;
        v[0b00] += e;
        v[0b11] -= e;
        v[0b01] += 1.0;
        v[0b10] += 1.0;
        v[0b00] += pm * e;
        v[0b11] += pm * e;
    }
    return normalized(std::move(v));
}

std::string to_string(DeviationKind kind) {
    switch (kind) {
        case DeviationKind::Sign:
            return "sign";
        case DeviationKind::Conjugation:
            return "conjugation";
        case DeviationKind::Normalization:
            return "normalization";
        case DeviationKind::Bracket:
            return "bracket";
    }
    return "unknown";
}

PureState canonical_phase(const PureState &s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double m = std::abs(s[i]);
        if (m > kZeroProbability) {
            return s.with_global_phase(std::conj(s[i]) / m);
        }
    }
    return s;
}

bool equal_up_to_global_phase(const PureState &a, const PureState &b, double tolerance) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    const PureState ca = canonical_phase(a);
    const PureState cb = canonical_phase(b);
    for (std::size_t i = 0; i < ca.dim(); ++i) {
        if (std::abs(ca[i] - cb[i]) > tolerance) {
            return false;
        }
    }
    return true;
}

DeviationReport check_table(Scheme scheme, const states::InputParams &p) {
    DeviationReport report;
    report.entries.push_back({
        "input_state/normalization_condition",
        "|α|²+|β|²+|γ|²+|μ|² = 1",
        "|α|²+|β|²+|γ|²+|δ|² = 1",
        DeviationKind::Normalization,
    });

    for (int r = 0; r < 4; ++r) {
        const auto i = static_cast<std::size_t>(r);
        const Vec printed = basis_row(kPrintedBasisRows, p, r);
        const Vec derived = basis_row(kOracleBasisRows, p, r);
        if (equal_up_to_global_phase(normalized(printed), normalized(derived), kTableTolerance)) {
            continue;
        }
        const bool conj_only = std::equal(kPrintedBasisRows[i].begin(), kPrintedBasisRows[i].end(),
                                          kOracleBasisRows[i].begin(), [](const Term &a, const Term &b) {
                                              return a.coef == b.coef && a.sign == b.sign && a.ket == b.ket;
                                          });
        report.entries.push_back({"sender_basis/row" + std::to_string(r + 1),
                                  render_terms(kPrintedBasisRows[i], false, 2),
                                  render_terms(kOracleBasisRows[i], false, 2),
                                  conj_only ? DeviationKind::Conjugation : DeviationKind::Sign});
    }

    const bool brown = scheme == Scheme::Brown;
    const std::string table = brown ? "brown_branch_table" : "cluster_branch_table";
    const auto &rows = brown ? kPrintedBrownRows : kPrintedClusterRows;
    const auto branches = enumerate_branches(scheme, p, Stage::AfterAlice);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const PureState &oracle = branches[r].residual_state;
        if (row_matches(rows[r], scheme, p, oracle)) {
            continue;
        }
        const std::string location = table + "/row" + std::to_string(r + 1);
        const auto repaired = repair_row(rows[r], scheme, p, oracle);
        if (repaired) {
            report.entries.push_back(
                {location, render_terms(rows[r], brown), render_terms(repaired->first, brown), repaired->second});
        } else {
            report.entries.push_back(
                {location, render_terms(rows[r], brown), render_state(canonical_phase(oracle)), DeviationKind::Sign});
        }
    }

    if (brown) {
        std::string printed;
        bool off = false;
        for (unsigned k = 1; k <= 4; ++k) {
            const double n = norm_of(printed_eta_vector(k));
            off = off || std::abs(n - 1.0) > kTolerance;
            printed += (k > 1 ? ", " : "") + std::string("|η") + std::to_string(k) + "⟩ norm " + format_number(n);
        }
        if (off) {
            report.entries.push_back({"eta_states/prefactor", "1/2 prefactor: " + printed,
                                      "1/√2 prefactor: every |ηk⟩ norm 1.000000", DeviationKind::Normalization});
        }
        const Vec plus = {kPrintedBrownBobPrefactor, kPrintedBrownBobPrefactor};
        const double bob_norm = norm_of(plus);
        if (std::abs(bob_norm - 1.0) > kTolerance) {
            report.entries.push_back({"brown_bob_basis/prefactor", "½(|0⟩ ± |1⟩), norm " + format_number(bob_norm),
                                      "(1/√2)(|0⟩ ± |1⟩), norm 1.000000", DeviationKind::Normalization});
        }
        report.entries.push_back({
            "brown_post_bob_states/brackets",
            "±(01⟩ − |10⟩) + e^{−iφ}(|00⟩−|11⟩) + (|01⟩+|10⟩) ± e^{−iφ}(|00⟩ + |11⟩)]",
            "(1/(2√2))[±(|01⟩ − |10⟩) + e^{−iφ}(|00⟩ − |11⟩) + (|01⟩ + |10⟩) ± e^{−iφ}(|00⟩ + |11⟩)]",
            DeviationKind::Bracket,
        });
    } else {
        report.entries.push_back({
            "cluster_post_bob_state/brackets",
            "½(00⟩ + e^{−iφ}|11⟩ ± |01⟩ ± e^{−iφ}|10⟩)",
            "½(|00⟩ + e^{−iφ}|11⟩ ± |01⟩ ± e^{−iφ}|10⟩)",
            DeviationKind::Bracket,
        });
    }

    // The repaired collapse formulas only apply to equatorial inputs.
    const states::InputClass cls = states::classify(p);
    if (cls.kind == states::InputKind::Equatorial) {
        const auto after_bob = enumerate_branches(scheme, p, Stage::AfterBob);
        for (int b = 0; b < 2; ++b) {
            const PureState formula = printed_post_bob_state(scheme, cls.phi, b);
            const PureState &oracle = after_bob[static_cast<std::size_t>(b)].residual_state;
            if (!equal_up_to_global_phase(formula, oracle, kTableTolerance)) {
                report.entries.push_back({(brown ? "brown_post_bob_states/outcome" : "cluster_post_bob_state/outcome") +
                                              std::string(b == 0 ? "+" : "-"),
                                          render_state(canonical_phase(formula)),
                                          render_state(canonical_phase(oracle)), DeviationKind::Sign});
            }
        }
    }
    return report;
}

DeviationReport standard_deviation_report(Scheme scheme) {
    const std::array<states::InputParams, 2> references = {
        states::equatorial_input(std::numbers::pi / 3.0),
        states::InputParams::normalize(0.5, std::polar(0.3, 0.9), -0.45, -std::polar(0.2, 0.9)),
    };
    DeviationReport merged;
    for (const auto &p : references) {
        for (auto &e : check_table(scheme, p).entries) {
            if (std::find(merged.entries.begin(), merged.entries.end(), e) == merged.entries.end()) {
                merged.entries.push_back(std::move(e));
            }
        }
    }
    return merged;
}

std::vector<states::InputParams> correctability_samples(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<states::InputParams> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(sampling::random_alpha_gamma_real_input(rng));
    }
    return out;
}

bool correctability(Scheme scheme, int alice_outcome, std::span<const states::InputParams> samples) {
    if (alice_outcome < 0 || alice_outcome > 3) {
        throw DimensionError("Alice outcome must be 0..3");
    }
    if (samples.size() < kMinCorrectabilitySamples) {
        throw ValueError("correctability needs at least " + std::to_string(kMinCorrectabilitySamples) + " samples");
    }
    std::vector<PureState> inputs;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        try {
            require_admissible(samples[i]);
        } catch (const protocol::InadmissibleInput &e) {
            throw ValueError("correctability sample " + std::to_string(i) +
                             " is inadmissible: max Gram deviation " + format_number(e.diagnostic().max_deviation));
        }
        inputs.push_back(states::input_state(samples[i]));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::norm(inner_product(inputs[i], inputs[j])) >= 1.0 - kGramTolerance) {
                throw ValueError("correctability samples " + std::to_string(j) + " and " + std::to_string(i) +
                                 " are parallel");
            }
        }
    }

    std::array<std::vector<PureState>, 2> posts;
    for (const auto &p : samples) {
        const auto records = enumerate_branches(scheme, p, Stage::AfterBob);
        for (int b = 0; b < 2; ++b) {
            posts[static_cast<std::size_t>(b)].push_back(
                records[static_cast<std::size_t>(2 * alice_outcome + b)].residual_state);
        }
    }
    for (const auto &post : posts) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const Amplitude lhs = inner_product(post[i], post[j]);
                const Amplitude rhs = inner_product(inputs[i], inputs[j]);
                if (std::abs(lhs - rhs) > kGramTolerance) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<SweepRow> sweep(Scheme scheme, std::span<const double> phi_grid, bool forced_all_branches,
                            std::uint64_t seed) {
    if (phi_grid.empty()) {
        throw ValueError("sweep grid is empty");
    }
    Rng rng(seed);
    std::vector<SweepRow> rows;
    for (double phi : phi_grid) {
        const auto input = states::equatorial_input(phi);
        const protocol::CorrectionMode mode = protocol::ReceiverKnowsPhase{phi};
        if (!forced_all_branches) {
            const auto r = protocol::run_qis(scheme, input, mode, std::nullopt, rng);
            rows.push_back({scheme, phi, r.alice_outcome, r.bob_outcome, r.fidelity, r.success});
            continue;
        }
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 2; ++b) {
                const auto r = protocol::run_qis(scheme, input, mode, protocol::ForcedBranch{a, b}, rng);
                rows.push_back({scheme, phi, a, b, r.fidelity, r.success});
            }
        }
    }
    return rows;
}

}  // namespace qislab::verify
