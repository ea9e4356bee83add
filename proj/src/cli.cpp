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


#include "qparity/cli.hpp"

#include "qparity/amplitude_io.hpp"
#include "qparity/error.hpp"
#include "qparity/orthogonality.hpp"
#include "qparity/parity_module.hpp"
#include "qparity/report.hpp"
#include "qparity/tables.hpp"
#include "qparity/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace qparity::cli {
namespace {

using nlohmann::json;

struct Options {
    std::size_t qubits = 0;
    std::size_t ancilla_dim = 0;
    std::string coupling = "phase";
    std::string input = "plus";
    bool json_out = false;
    std::string phases;
    std::string suite = "all";
    std::string family;
    std::size_t max_n = 0;
    long long shots = 1000;
    std::uint64_t seed = 0;
    std::string out_file;
};

double parse_double(std::string_view s) {
    const auto first = s.find_first_not_of(' ');
    const auto last = s.find_last_not_of(' ');
    if (first == std::string_view::npos) {
        throw ArgumentError("empty phase entry");
    }
    s = s.substr(first, last - first + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ArgumentError("cannot parse phase '" + std::string(s) + "'");
    }
    return v;
}

/// "0,0.5,1" or "roots:D"
std::vector<double> parse_phases(const std::string &text) {
    if (text.rfind("roots:", 0) == 0) {
        const std::string_view count = std::string_view(text).substr(6);
        std::size_t d = 0;
        const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), d);
        if (ec != std::errc() || ptr != count.data() + count.size() || d < 2) {
            throw ArgumentError("roots:D needs an integer D >= 2");
        }
        const auto spec = orthogonality::EigenphaseSpec::roots_of_unity(d);
        return {spec.phases().begin(), spec.phases().end()};
    }
    std::vector<double> out;
    std::string_view rest(text);
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_double(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return out;
}

struct Prepared {
    parity::ModuleConfig config;
    Ket input;
};

Prepared prepare_module(const Options &o) {
    if (o.ancilla_dim == 0) {
        throw ArgumentError("--ancilla-dim is required");
    }
    const auto coupling = parity::parse_coupling(o.coupling);
    if (o.input == "plus") {
        if (o.qubits == 0) {
            throw ArgumentError("--qubits is required with --input plus");
        }
        auto config = parity::ModuleConfig::standard(o.qubits, o.ancilla_dim, coupling);
        // reject oversized requests before allocating the input
        parity::validate(config);
        return {std::move(config), Ket::plus_state(o.qubits)};
    }
    Ket input = io::read_amplitude_file(o.input);
    if (!input.all_qubits()) {
        throw ArgumentError("input file must describe qubits only (dims: 2 2 ...)");
    }
    if (o.qubits != 0 && o.qubits != input.num_factors()) {
        throw ArgumentError(fmt::format("--qubits {} disagrees with the {} qubits in '{}'", o.qubits,
                                        input.num_factors(), o.input));
    }
    auto config = parity::ModuleConfig::standard(input.num_factors(), o.ancilla_dim, coupling);
    parity::validate(config);
    return {std::move(config), std::move(input)};
}

int cmd_simulate(const Options &o, std::ostream &out) {
    const auto [config, input] = prepare_module(o);
    const auto records = parity::run_module(input, config);
    const auto rep = report::RunReport::from_records(config, o.input, records);
    if (o.json_out) {
        out << report::dump(report::to_json(rep));
    } else {
        report::print_table(out, rep);
    }
    return kExitOk;
}

int cmd_solve(const Options &o, std::ostream &out) {
    if (o.phases.empty()) {
        throw ArgumentError("--phases is required");
    }
    const auto rep = report::solve(parse_phases(o.phases));
    if (o.json_out) {
        out << report::dump(report::to_json(rep));
    } else {
        report::print_table(out, rep);
    }
    return rep.feasible ? kExitOk : kExitFailure;
}

int cmd_verify(const Options &o, std::ostream &out) {
    const auto rep = verify::run_suite(o.suite);
    if (o.json_out) {
        json checks = json::array();
        for (const auto &c : rep.checks) {
            checks.push_back(
                {{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        out << report::dump({{"schema", report::kSchemaVersion},
                             {"kind", "verify"},
                             {"suite", o.suite},
                             {"checks", checks},
                             {"all_pass", rep.all_pass()}});
    } else {
        for (const auto &c : rep.checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
            if (!c.pass) {
                out << ": " << c.detail;
            }
            out << '\n';
        }
        out << fmt::format("{} checks, {} failed\n", rep.checks.size(), rep.failures());
    }
    return rep.all_pass() ? kExitOk : kExitFailure;
}

std::string dicke_label(std::size_t n, std::size_t k) {
    if (k == 0) {
        return "GHZ";
    }
    if (k == 1) {
        return "W";
    }
    if (k == n - 1) {
        return "W [X^n]";
    }
    return fmt::format("Dicke({},{})", n, k);
}

double as_double(const Rational &r) { return boost::rational_cast<double>(r); }

int cmd_table(const Options &o, std::ostream &out) {
    const std::size_t max_n = o.max_n;
    if (max_n > tables::kMaxTableN) {
        throw ArgumentError(fmt::format("--max-n must be at most {}", tables::kMaxTableN));
    }
    json rows = json::array();
    std::ostringstream text;
    if (o.family == "dicke") {
        std::size_t lo = 2;
        std::size_t hi = max_n == 0 ? 8 : max_n;
        if (o.qubits != 0) {
            lo = hi = o.qubits;
        }
        text << fmt::format("{:>3} {:>6}  {:<14} {:>14} {:>14} {:>14}  {}\n", "n", "parity",
                            "state", "p(outcome)", "p(+dual)", "2^(1-n)C(n,k)", "note");
        for (std::size_t n = lo; n <= hi; ++n) {
            for (const auto &r : tables::dicke_table(n)) {
                const bool double_counted = r.self_dual && r.parity != 0;
                const std::string note = double_counted ? "self-dual: closed form counts it twice" : "";
                text << fmt::format("{:>3} {:>6}  {:<14} {:>14} {:>14} {:>14}  {}\n", n, r.parity,
                                    dicke_label(n, r.parity), to_string(r.per_outcome),
                                    to_string(r.aggregate), to_string(r.closed_form), note);
                rows.push_back({{"n", n},
                                {"parity", r.parity},
                                {"state", dicke_label(n, r.parity)},
                                {"per_outcome", to_string(r.per_outcome)},
                                {"per_outcome_float", report::canonical(as_double(r.per_outcome))},
                                {"aggregate", to_string(r.aggregate)},
                                {"closed_form", to_string(r.closed_form)},
                                {"self_dual", r.self_dual}});
            }
        }
    } else if (o.family == "w-compare") {
        const std::size_t hi = max_n == 0 ? 12 : max_n;
        text << fmt::format("{:>3} {:>14} {:>22} {:>14} {:>10}\n", "n", "p(W_n)", "baseline", "gain",
                            "2^(n-2)");
        for (const auto &r : tables::w_compare_table(hi)) {
            text << fmt::format("{:>3} {:>14} {:>22} {:>14} {:>10}\n", r.n, to_string(r.p_w),
                                to_string(r.baseline), to_string(r.gain), to_string(r.bound));
            rows.push_back({{"n", r.n},
                            {"p_w", to_string(r.p_w)},
                            {"baseline", to_string(r.baseline)},
                            {"gain", to_string(r.gain)},
                            {"bound", to_string(r.bound)},
                            {"meets_bound", r.meets_bound}});
        }
    } else if (o.family == "halfdicke-scaling") {
        const std::size_t hi = max_n == 0 ? 16 : max_n;
        text << fmt::format("{:>3} {:>3} {:>18} {:>14} {:>14} {:>10} {:>14}  {}\n", "k", "n",
                            "p(D_2k,k)", "p", "1/sqrt(pi k)", "rel.err", "2/sqrt(pi k)", "note");
        for (const auto &r : tables::half_dicke_table(hi)) {
            text << fmt::format("{:>3} {:>3} {:>18} {:>14} {:>14} {:>10.4f} {:>14}  {}\n", r.k,
                                2 * r.k, to_string(r.per_outcome),
                                report::format_number(as_double(r.per_outcome)),
                                report::format_number(r.asymptote), r.relative_error,
                                report::format_number(r.aggregate_form),
                                "k = n/2: aggregate form double counts the self-dual outcome");
            rows.push_back({{"k", r.k},
                            {"n", 2 * r.k},
                            {"per_outcome", to_string(r.per_outcome)},
                            {"per_outcome_float", report::canonical(as_double(r.per_outcome))},
                            {"asymptote", report::canonical(r.asymptote)},
                            {"relative_error", report::canonical(r.relative_error)},
                            {"aggregate_form", report::canonical(r.aggregate_form)},
                            {"self_dual_flag", r.self_dual_flag}});
        }
    } else {
        throw ArgumentError("--family must be dicke, w-compare or halfdicke-scaling");
    }
    if (o.json_out) {
        out << report::dump({{"schema", report::kSchemaVersion},
                             {"kind", "table"},
                             {"family", o.family},
                             {"rows", rows}});
    } else {
        out << text.str();
    }
    return kExitOk;
}

int cmd_sample(const Options &o, std::ostream &out) {
    if (o.shots < 0) {
        throw ArgumentError("--shots must be non-negative");
    }
    const auto [config, input] = prepare_module(o);
    const auto records = parity::run_module(input, config);
    std::vector<double> cdf;
    double acc = 0.0;
    for (const auto &r : records) {
        acc += r.probability;
        cdf.push_back(acc);
    }
    std::mt19937_64 rng(o.seed);
    std::vector<std::size_t> drawn;
    drawn.reserve(static_cast<std::size_t>(o.shots));
    for (long long s = 0; s < o.shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        drawn.push_back(static_cast<std::size_t>(it - cdf.begin()));
    }
    if (o.json_out) {
        json parities = json::array();
        std::vector<std::size_t> counts(records.size(), 0);
        for (const std::size_t i : drawn) {
            parities.push_back(records[i].parity);
            ++counts[i];
        }
        out << report::dump({{"schema", report::kSchemaVersion},
                             {"kind", "sample"},
                             {"seed", o.seed},
                             {"shots", o.shots},
                             {"parities", parities},
                             {"counts", counts}});
    } else {
        for (const std::size_t i : drawn) {
            out << records[i].parity << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Generalized parity-module simulator and ancilla solver", "qparity"};
    app.require_subcommand(1);

    auto add_module_flags = [&o](CLI::App *sub) {
        sub->add_option("-n,--qubits", o.qubits, "number of input qubits");
        sub->add_option("-d,--ancilla-dim", o.ancilla_dim, "ancilla dimension");
        sub->add_option("--coupling", o.coupling, "phase|shift")
            ->check(CLI::IsMember({"phase", "shift"}));
        sub->add_option("--input", o.input, "plus, or an amplitude file");
    };
    auto add_common = [&o](CLI::App *sub) {
        sub->add_flag("--json", o.json_out, "emit JSON");
        sub->add_option("--out", o.out_file, "write output to FILE");
    };

    auto *simulate = app.add_subcommand("simulate", "enumerate every heralded branch");
    add_module_flags(simulate);
    add_common(simulate);

    auto *solve = app.add_subcommand("solve", "admissible ancilla amplitudes for an eigenphase spec");
    solve->add_option("--phases", o.phases, "comma-separated phases, or roots:D")->required();
    add_common(solve);

    auto *verify = app.add_subcommand("verify", "run a self-check suite");
    verify->add_option("--suite", o.suite, "projectors|examples|probabilities|gnk|solver|all")
        ->check(CLI::IsMember(std::vector<std::string>(verify::kSuiteNames.begin(),
                                                       verify::kSuiteNames.end())));
    add_common(verify);

    auto *table = app.add_subcommand("table", "exact probability tables");
    table->add_option("--family", o.family, "dicke|w-compare|halfdicke-scaling")
        ->required()
        ->check(CLI::IsMember({"dicke", "w-compare", "halfdicke-scaling"}));
    table->add_option("--max-n", o.max_n, "largest qubit count (<= 20)");
    table->add_option("-n,--qubits", o.qubits, "single qubit count (dicke only)");
    add_common(table);

    auto *sample = app.add_subcommand("sample", "seeded draws from the heralded distribution");
    add_module_flags(sample);
    sample->add_option("--shots", o.shots, "number of draws");
    sample->add_option("--seed", o.seed, "generator seed");
    add_common(sample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (simulate->parsed()) {
            code = cmd_simulate(o, buffer);
        } else if (solve->parsed()) {
            code = cmd_solve(o, buffer);
        } else if (verify->parsed()) {
            code = cmd_verify(o, buffer);
        } else if (table->parsed()) {
            code = cmd_table(o, buffer);
        } else {
            code = cmd_sample(o, buffer);
        }
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc &) {
        err << "error: out of memory\n";
        return kExitResource;
    } catch (const InfeasibleError &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (o.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_file);
        if (!(file << buffer.str())) {
            err << "error: cannot write '" << o.out_file << "'\n";
            return kExitUsage;
        }
    }
    return code;
}

} // namespace qparity::cli
