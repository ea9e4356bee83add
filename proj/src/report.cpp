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


#include "qparity/report.hpp"

#include "qparity/error.hpp"
#include "qparity/orthogonality.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <string>

namespace qparity::report {
namespace {

using nlohmann::json;

constexpr double kFlushBelow = 1e-13;

template <typename T> T field(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw ArgumentError(std::string("report is missing field '") + key + "'");
    }
    return j.at(key).get<T>();
}

void check_schema(const json &j) {
    if (field<int>(j, "schema") != kSchemaVersion) {
        throw ArgumentError("unsupported report schema");
    }
}

json canonical_array(const std::vector<double> &v) {
    json a = json::array();
    for (const double x : v) {
        a.push_back(canonical(x));
    }
    return a;
}

json with_checksum(json j) {
    j.erase("checksum");
    const std::string sum = fnv1a64(j.dump());
    j["checksum"] = sum;
    return j;
}

} // namespace

double canonical(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    if (std::abs(x) < kFlushBelow) {
        return 0.0;
    }
    return std::stod(fmt::format("{:.12g}", x));
}

std::string format_number(double x) { return fmt::format("{:.12g}", canonical(x)); }

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

std::string dump(const json &without_checksum) {
    return with_checksum(without_checksum).dump(2) + "\n";
}

RunReport RunReport::from_records(const parity::ModuleConfig &config, std::string input,
                                  const std::vector<parity::OutcomeRecord> &records) {
    RunReport r;
    r.n = config.n;
    r.d = config.d;
    r.coupling = std::string(parity::to_string(config.coupling));
    r.input = std::move(input);
    for (const auto &rec : records) {
        OutcomeRow row;
        row.outcome = rec.outcome;
        row.parity = rec.parity;
        if (rec.probability_exact) {
            row.probability_exact = to_string(*rec.probability_exact);
        }
        row.probability = canonical(rec.probability);
        row.zero_probability = rec.zero_probability;
        if (rec.classification) {
            row.classification = rec.classification->label();
            row.fidelity = canonical(rec.classification->fidelity);
        }
        if (rec.post_state) {
            const auto dec = states::dicke_decompose(*rec.post_state);
            for (const auto &[k, c] : dec.coeffs) {
                row.dicke.push_back({k, canonical(c.real()), canonical(c.imag())});
            }
            row.dicke_residual = canonical(dec.residual);
            row.weights = dec.weight_form();
        }
        r.outcomes.push_back(std::move(row));
    }
    r.checksum = to_json(r).at("checksum").get<std::string>();
    return r;
}

json to_json(const RunReport &r) {
    json rows = json::array();
    for (const auto &o : r.outcomes) {
        json dicke = json::array();
        for (const auto &e : o.dicke) {
            dicke.push_back({{"k", e.k}, {"re", canonical(e.re)}, {"im", canonical(e.im)}});
        }
        json row = {{"outcome", o.outcome},
                    {"parity", o.parity},
                    {"probability", canonical(o.probability)},
                    {"probability_exact", o.probability_exact ? json(*o.probability_exact) : json()},
                    {"zero_probability", o.zero_probability},
                    {"classification", o.classification},
                    {"fidelity", canonical(o.fidelity)},
                    {"dicke", dicke},
                    {"dicke_residual", canonical(o.dicke_residual)},
                    {"weights", o.weights}};
        rows.push_back(std::move(row));
    }
    json j = {{"schema", r.schema},
              {"kind", "run"},
              {"config",
               {{"n", r.n}, {"d", r.d}, {"coupling", r.coupling}, {"input", r.input}}},
              {"outcomes", rows}};
    return with_checksum(std::move(j));
}

RunReport run_report_from_json(const json &j) {
    check_schema(j);
    if (field<std::string>(j, "kind") != "run") {
        throw ArgumentError("not a run report");
    }
    RunReport r;
    const json &c = j.at("config");
    r.n = field<std::size_t>(c, "n");
    r.d = field<std::size_t>(c, "d");
    r.coupling = field<std::string>(c, "coupling");
    r.input = field<std::string>(c, "input");
    for (const json &o : j.at("outcomes")) {
        OutcomeRow row;
        row.outcome = field<std::size_t>(o, "outcome");
        row.parity = field<std::size_t>(o, "parity");
        row.probability = field<double>(o, "probability");
        if (!o.at("probability_exact").is_null()) {
            row.probability_exact = o.at("probability_exact").get<std::string>();
        }
        row.zero_probability = field<bool>(o, "zero_probability");
        row.classification = field<std::string>(o, "classification");
        row.fidelity = field<double>(o, "fidelity");
        for (const json &e : o.at("dicke")) {
            row.dicke.push_back({field<std::size_t>(e, "k"), field<double>(e, "re"),
                                 field<double>(e, "im")});
        }
        row.dicke_residual = field<double>(o, "dicke_residual");
        row.weights = field<std::string>(o, "weights");
        r.outcomes.push_back(std::move(row));
    }
    r.checksum = field<std::string>(j, "checksum");
    return r;
}

SolveReport solve(const std::vector<double> &phases) {
    namespace orth = qparity::orthogonality;
    const auto spec = orth::EigenphaseSpec::from_phases(phases);
    const auto sol = orth::solve_amplitudes(spec);
    SolveReport r;
    r.phases.assign(spec.phases().begin(), spec.phases().end());
    r.feasible = sol.feasible;
    r.distinct = sol.structure.distinct;
    r.multiplicities = sol.structure.multiplicities;
    r.members = sol.structure.members;
    r.degenerate = sol.degenerate();
    r.squared_amps = sol.squared_amps;
    for (const auto &c : sol.constraints) {
        r.constraint_indices.push_back(c.indices);
        r.constraint_sums.push_back(c.required_sum);
    }
    r.phase_offset = sol.phase_offset;
    if (sol.feasible) {
        const std::vector<double> theta(spec.size(), 0.0);
        const Ket phi = orth::admissible_state(spec, theta);
        r.gram_deviation = orth::check_orbit(spec.diagonal(), phi, sol.structure.distinct)
                               .max_deviation;
    }
    r.checksum = to_json(r).at("checksum").get<std::string>();
    return r;
}

json to_json(const SolveReport &r) {
    json constraints = json::array();
    for (std::size_t i = 0; i < r.constraint_sums.size(); ++i) {
        constraints.push_back(
            {{"indices", r.constraint_indices[i]}, {"required_sum", canonical(r.constraint_sums[i])}});
    }
    json j = {{"schema", r.schema},
              {"kind", "solve"},
              {"phases", canonical_array(r.phases)},
              {"feasible", r.feasible},
              {"distinct", r.distinct},
              {"multiplicities", r.multiplicities},
              {"members", r.members},
              {"degenerate", r.degenerate},
              {"squared_amps", canonical_array(r.squared_amps)},
              {"constraints", constraints},
              {"phase_offset", canonical(r.phase_offset)},
              {"gram_deviation", r.gram_deviation ? json(canonical(*r.gram_deviation)) : json()}};
    return with_checksum(std::move(j));
}

SolveReport solve_report_from_json(const json &j) {
    check_schema(j);
    if (field<std::string>(j, "kind") != "solve") {
        throw ArgumentError("not a solve report");
    }
    SolveReport r;
    r.phases = field<std::vector<double>>(j, "phases");
    r.feasible = field<bool>(j, "feasible");
    r.distinct = field<std::size_t>(j, "distinct");
    r.multiplicities = field<std::vector<std::size_t>>(j, "multiplicities");
    r.members = field<std::vector<std::vector<std::size_t>>>(j, "members");
    r.degenerate = field<bool>(j, "degenerate");
    r.squared_amps = field<std::vector<double>>(j, "squared_amps");
    for (const json &c : j.at("constraints")) {
        r.constraint_indices.push_back(field<std::vector<std::size_t>>(c, "indices"));
        r.constraint_sums.push_back(field<double>(c, "required_sum"));
    }
    r.phase_offset = field<double>(j, "phase_offset");
    if (!j.at("gram_deviation").is_null()) {
        r.gram_deviation = j.at("gram_deviation").get<double>();
    }
    r.checksum = field<std::string>(j, "checksum");
    return r;
}

void print_table(std::ostream &out, const RunReport &r) {
    out << fmt::format("n={} d={} coupling={} input={}\n", r.n, r.d, r.coupling, r.input);
    out << fmt::format("{:>6}  {:>14}  {:>16}  {:<22}  {}\n", "parity", "p(exact)", "p",
                       "state", "dicke weights");
    for (const auto &o : r.outcomes) {
        out << fmt::format("{:>6}  {:>14}  {:>16}  {:<22}  {}\n", o.parity,
                           o.probability_exact.value_or("-"), format_number(o.probability),
                           o.classification, o.weights.empty() ? "-" : o.weights);
    }
}

void print_table(std::ostream &out, const SolveReport &r) {
    out << "phases:";
    for (const double p : r.phases) {
        out << ' ' << format_number(p);
    }
    out << '\n';
    out << "feasible: " << (r.feasible ? "yes" : "no") << '\n';
    out << "distinct eigenvalues: " << r.distinct << '\n';
    out << "multiplicities:";
    for (const auto k : r.multiplicities) {
        out << ' ' << k;
    }
    out << '\n';
    if (!r.feasible) {
        return;
    }
    if (r.degenerate) {
        for (std::size_t i = 0; i < r.constraint_sums.size(); ++i) {
            out << "  sum |a_j|^2 over {";
            for (std::size_t m = 0; m < r.constraint_indices[i].size(); ++m) {
                out << (m ? "," : "") << r.constraint_indices[i][m];
            }
            out << "} = " << format_number(r.constraint_sums[i]) << '\n';
        }
    } else {
        out << "|a_j|^2:";
        for (const double a : r.squared_amps) {
            out << ' ' << format_number(a);
        }
        out << '\n';
    }
    if (r.gram_deviation) {
        out << "gram deviation: " << fmt::format("{:.3e}", *r.gram_deviation) << '\n';
    }
}

} // namespace qparity::report
