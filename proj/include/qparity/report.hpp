// Copyright 2026 The qparity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file
 * Serializable run and solve reports. JSON output is canonical: keys sorted,
 * floats rounded to 12 significant digits, rationals as "p/q", and a
 * top-level "schema" version. The checksum is FNV-1a 64 over the compact
 * dump of everything except the checksum itself.
 */
#pragma once

#include "qparity/parity_module.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qparity::report {

inline constexpr int kSchemaVersion = 1;

/// x rounded to 12 significant digits; magnitudes below 1e-13 become 0.
double canonical(double x);
/// canonical(x) as text, "%.12g" style.
std::string format_number(double x);

struct DickeEntry {
    std::size_t k = 0;
    double re = 0.0;
    double im = 0.0;

    bool operator==(const DickeEntry &) const = default;
};

struct OutcomeRow {
    std::size_t outcome = 0;
    std::size_t parity = 0;
    std::optional<std::string> probability_exact;
    double probability = 0.0;
    bool zero_probability = false;
    /// "none" for zero-probability branches.
    std::string classification = "none";
    double fidelity = 0.0;
    std::vector<DickeEntry> dicke;
    double dicke_residual = 0.0;
    /// DickeDecomposition::weight_form()
    std::string weights;

    bool operator==(const OutcomeRow &) const = default;
};

struct RunReport {
    int schema = kSchemaVersion;
    std::size_t n = 0;
    std::size_t d = 0;
    std::string coupling;
    /// "plus" or the amplitude-file path.
    std::string input;
    std::vector<OutcomeRow> outcomes;
    std::string checksum;

    /// Values pass through canonical() so a report equals its own JSON
    /// round trip.
    static RunReport from_records(const parity::ModuleConfig &config, std::string input,
                                  const std::vector<parity::OutcomeRecord> &records);

    bool operator==(const RunReport &) const = default;
};

nlohmann::json to_json(const RunReport &r);
/// Throws ArgumentError on a schema mismatch or missing field.
RunReport run_report_from_json(const nlohmann::json &j);

struct SolveReport {
    int schema = kSchemaVersion;
    std::vector<double> phases;
    bool feasible = false;
    std::size_t distinct = 0;
    std::vector<std::size_t> multiplicities;
    std::vector<std::vector<std::size_t>> members;
    bool degenerate = false;
    std::vector<double> squared_amps;
    std::vector<std::vector<std::size_t>> constraint_indices;
    std::vector<double> constraint_sums;
    double phase_offset = 0.0;
    /// Max |G - I| over the orbit of the verification state; absent when
    /// infeasible.
    std::optional<double> gram_deviation;
    std::string checksum;

    bool operator==(const SolveReport &) const = default;
};

/// solve_amplitudes, then check_orbit on admissible_state with zero phases.
/// The report keeps full precision internally; to_json rounds.
SolveReport solve(const std::vector<double> &phases);

nlohmann::json to_json(const SolveReport &r);
SolveReport solve_report_from_json(const nlohmann::json &j);

/// FNV-1a 64, 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

/// Pretty-printed canonical JSON with the checksum filled in.
std::string dump(const nlohmann::json &without_checksum);

void print_table(std::ostream &out, const RunReport &r);
void print_table(std::ostream &out, const SolveReport &r);

} // namespace qparity::report
