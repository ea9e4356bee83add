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


#include "qparity/verify.hpp"

#include "qparity/error.hpp"
#include "qparity/orthogonality.hpp"
#include "qparity/states.hpp"
#include "qparity/tables.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>

namespace qparity::verify {
namespace {

constexpr double kTol = 1e-10;

/// Collects failures for a single named check.
class Recorder {
  public:
    Recorder(std::string suite, std::string name) {
        check_.suite = std::move(suite);
        check_.name = std::move(name);
        check_.pass = true;
    }

    void require(bool ok, const std::string &what) {
        if (ok) {
            return;
        }
        if (check_.pass) {
            check_.detail = what;
        } else {
            ++extra_;
        }
        check_.pass = false;
    }

    Check finish() {
        if (extra_ > 0) {
            check_.detail += fmt::format(" (+{} more)", extra_);
        }
        return check_;
    }

  private:
    Check check_;
    std::size_t extra_ = 0;
};

std::string cfg(std::size_t n, std::size_t d, std::size_t k) {
    return fmt::format("(n={}, d={}, k={})", n, d, k);
}

double max_coefficient_error(const states::DickeDecomposition &got,
                             const states::DickeDecomposition &want) {
    double err = 0.0;
    for (const auto &[k, c] : got.coeffs) {
        const auto it = want.coeffs.find(k);
        err = std::max(err, std::abs(c - (it == want.coeffs.end() ? cplx{} : it->second)));
    }
    for (const auto &[k, c] : want.coeffs) {
        if (!got.coeffs.contains(k)) {
            err = std::max(err, std::abs(c));
        }
    }
    return err;
}

/// Every nonzero branch of |+>^n equals predicted_branch.
void check_branches(Recorder &rec, std::size_t n, std::size_t d) {
    const auto cfgm = parity::ModuleConfig::standard(n, d, parity::Coupling::Phase);
    const auto records = parity::run_module(Ket::plus_state(n), cfgm);
    for (const auto &r : records) {
        const auto want = states::predicted_branch(n, d, r.parity);
        if (want.coeffs.empty()) {
            rec.require(r.zero_probability, cfg(n, d, r.parity) + " branch should be empty");
            continue;
        }
        if (!r.post_state) {
            rec.require(false, cfg(n, d, r.parity) + " branch unexpectedly empty");
            continue;
        }
        const auto got = states::dicke_decompose(*r.post_state);
        const double err = max_coefficient_error(got, want);
        rec.require(err < kTol, fmt::format("{} coefficient error {:.3e}", cfg(n, d, r.parity), err));
        rec.require(got.residual < 1e-12,
                    fmt::format("{} residual {:.3e}", cfg(n, d, r.parity), got.residual));
    }
}

} // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; }));
}

void SuiteReport::append(SuiteReport other) {
    for (auto &c : other.checks) {
        checks.push_back(std::move(c));
    }
}

SuiteReport projector_suite(std::size_t max_n, const parity::Envelope &envelope) {
    SuiteReport out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        const Operator hn = tensor_power(hadamard(), n);
        const Operator id = Operator::identity(dim);
        const Ket plus = Ket::plus_state(n);
        for (std::size_t d = 2; d <= n; ++d) {
            Recorder rec("projectors", fmt::format("n={} d={}", n, d));
            const auto phase = parity::build_projectors(n, d, parity::Coupling::Phase, envelope);
            const auto shift = parity::build_projectors(n, d, parity::Coupling::Shift, envelope);
            for (const auto *set : {&phase, &shift}) {
                const char *tag = set->coupling == parity::Coupling::Phase ? "P" : "~P";
                Operator sum = Operator::zero(dim);
                std::size_t dim_total = 0;
                for (std::size_t j = 0; j < d; ++j) {
                    const Operator &p = set->projectors[j];
                    rec.require(p.is_hermitian(kTol), fmt::format("{} {} not hermitian", cfg(n, d, j), tag));
                    for (std::size_t k = j; k < d; ++k) {
                        const Operator prod = p * set->projectors[k];
                        const double dev =
                            prod.max_deviation(k == j ? p : Operator::zero(dim));
                        rec.require(dev < kTol, fmt::format("{} {}_{} {}_{} deviates by {:.3e}",
                                                            cfg(n, d, j), tag, j, tag, k, dev));
                    }
                    const std::size_t expected = parity::projector_dim(j, n, d);
                    const double tr = p.trace().real();
                    rec.require(std::abs(tr - static_cast<double>(expected)) < kTol &&
                                    set->dims[j] == expected,
                                fmt::format("{} {} trace {} != {}", cfg(n, d, j), tag, tr, expected));
                    if (set->coupling == parity::Coupling::Phase) {
                        // dim P_j = 2^n <+|P_j|+>
                        const double via_plus =
                            static_cast<double>(dim) * inner(plus, p.apply(plus)).real();
                        rec.require(std::abs(via_plus - static_cast<double>(expected)) < kTol,
                                    fmt::format("{} 2^n<+|P|+> = {}", cfg(n, d, j), via_plus));
                    }
                    sum = sum + p;
                    dim_total += set->dims[j];
                }
                rec.require(sum.max_deviation(id) < kTol,
                            fmt::format("(n={}, d={}) {} do not sum to identity", n, d, tag));
                rec.require(dim_total == dim,
                            fmt::format("(n={}, d={}) {} dims sum to {}", n, d, tag, dim_total));
            }
            for (std::size_t j = 0; j < d; ++j) {
                const double dev =
                    shift.projectors[j].max_deviation(hn * phase.projectors[j] * hn);
                rec.require(dev < kTol, fmt::format("{} ~P != H P H by {:.3e}", cfg(n, d, j), dev));
            }
            out.checks.push_back(rec.finish());
        }
    }
    return out;
}

SuiteReport examples_suite() {
    SuiteReport out;
    for (const auto &[n, d] : {std::pair<std::size_t, std::size_t>{3, 3}, {4, 3}, {5, 3}, {5, 4}}) {
        Recorder rec("examples", fmt::format("branches n={} d={}", n, d));
        check_branches(rec, n, d);
        out.checks.push_back(rec.finish());
    }
    // d = n - 2: parity 1 heralds G_n
    for (std::size_t n = 5; n <= 10; ++n) {
        const std::size_t d = n - 2;
        Recorder rec("examples", fmt::format("G_n n={} d={}", n, d));
        check_branches(rec, n, d);
        const auto records =
            parity::run_module(Ket::plus_state(n), parity::ModuleConfig::standard(n, d, parity::Coupling::Phase));
        const auto &r = records[1];
        rec.require(r.classification && r.classification->family == states::Family::G &&
                        !r.classification->up_to_bitflip,
                    cfg(n, d, 1) + " not classified G_n" +
                        (r.classification ? " (" + r.classification->label() + ")" : ""));
        rec.require(r.post_state && fidelity(*r.post_state, states::g(n)) >= 1.0 - kTol,
                    cfg(n, d, 1) + " fidelity with G_n too low");
        out.checks.push_back(rec.finish());
    }
    // d = n - 2k with k < d: parity k heralds G_{n,k}
    for (std::size_t n = 5; n <= 12; ++n) {
        for (std::size_t k = 1; 2 * k < n; ++k) {
            const std::size_t d = n - 2 * k;
            if (k >= d || d < 2) {
                continue;
            }
            Recorder rec("examples", fmt::format("G(n,k) n={} k={} d={}", n, k, d));
            const auto records = parity::run_module(
                Ket::plus_state(n), parity::ModuleConfig::standard(n, d, parity::Coupling::Phase));
            const auto &r = records[k];
            rec.require(r.classification && states::is_g_general(*r.classification, n, k),
                        cfg(n, d, k) + " not classified G(n,k)" +
                            (r.classification ? " (" + r.classification->label() + ")" : ""));
            rec.require(r.post_state && fidelity(*r.post_state, states::g_general(n, k)) >= 1.0 - kTol,
                        cfg(n, d, k) + " fidelity with G(n,k) too low");
            out.checks.push_back(rec.finish());
        }
    }
    return out;
}

SuiteReport probability_suite(std::size_t max_n) {
    SuiteReport out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        const std::size_t d = n;
        Recorder rec("probabilities", fmt::format("d=n={}", n));
        std::vector<std::int64_t> counts(d, 0);
        for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
            ++counts[static_cast<std::size_t>(std::popcount(x)) % d];
        }
        const auto records = parity::run_module(
            Ket::plus_state(n), parity::ModuleConfig::standard(n, d, parity::Coupling::Phase));
        for (const auto &r : records) {
            const Rational want = Rational(counts[r.parity]) * inverse_power_of_two(static_cast<unsigned>(n));
            rec.require(r.probability_exact && *r.probability_exact == want,
                        fmt::format("{} exact probability != {}", cfg(n, d, r.parity), to_string(want)));
            const double err = std::abs(r.probability - boost::rational_cast<double>(want));
            rec.require(err <= 1e-12, fmt::format("{} float probability off by {:.3e}",
                                                   cfg(n, d, r.parity), err));
        }
        rec.require(records[0].probability_exact &&
                        *records[0].probability_exact == inverse_power_of_two(static_cast<unsigned>(n - 1)),
                    cfg(n, d, 0) + " p(GHZ) != 2^{1-n}");
        for (const auto &row : tables::dicke_table(n)) {
            if (!row.self_dual) {
                rec.require(row.aggregate == row.closed_form,
                            fmt::format("{} aggregate {} != closed form {}", cfg(n, d, row.parity),
                                        to_string(row.aggregate), to_string(row.closed_form)));
            }
        }
        const auto shift = parity::run_module(
            Ket::plus_state(n), parity::ModuleConfig::standard(n, d, parity::Coupling::Shift));
        for (const auto &r : shift) {
            const Rational want(r.parity == 0 ? 1 : 0);
            rec.require(r.probability_exact && *r.probability_exact == want,
                        cfg(n, d, r.parity) + " shift-coupling probability wrong");
        }
        out.checks.push_back(rec.finish());
    }
    if (max_n >= 3) {
        Recorder rec("probabilities", "w-compare");
        for (const auto &row : tables::w_compare_table(max_n)) {
            rec.require(row.meets_bound, fmt::format("(n={}, d={}, k=1) gain {} below {}", row.n,
                                                     row.n, to_string(row.gain), to_string(row.bound)));
        }
        out.checks.push_back(rec.finish());
    }
    return out;
}

SuiteReport gnk_suite(std::size_t max_n) {
    SuiteReport out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        Recorder rec("gnk", fmt::format("n={}", n));
        for (std::size_t k = 0; k <= n; ++k) {
            const Ket g = states::g_general(n, k);
            const auto e = states::expectations(g);
            if (2 * k == n) {
                rec.require(std::abs(e.y_all - 1.0) < kTol && std::abs(e.y_imag) < kTol,
                            fmt::format("(n={}, k={}) <Y^n> = {} on D(2k,k)", n, k, e.y_all));
                continue;
            }
            rec.require(std::abs(e.x_all - 1.0) < kTol && std::abs(e.x_imag) < kTol,
                        fmt::format("(n={}, k={}) <X^n> = {}", n, k, e.x_all));
            const double want_y =
                (n % 2 == 1) ? 0.0 : (((n / 2 + k) % 2 == 0) ? 1.0 : -1.0);
            rec.require(std::abs(e.y_all - want_y) < kTol && std::abs(e.y_imag) < kTol,
                        fmt::format("(n={}, k={}) <Y^n> = {}, expected {}", n, k, e.y_all, want_y));
        }
        out.checks.push_back(rec.finish());
    }
    return out;
}

SuiteReport solver_suite() {
    namespace orth = qparity::orthogonality;
    SuiteReport out;
    auto gram_ok = [](const orth::EigenphaseSpec &spec, const orth::AmplitudeSolution &sol) {
        const std::vector<double> theta(spec.size(), 0.0);
        const Ket phi = orth::admissible_state(spec, theta);
        return orth::check_orbit(spec.diagonal(), phi, sol.structure.distinct).max_deviation;
    };
    {
        Recorder rec("solver", "roots of unity");
        for (std::size_t d = 2; d <= 8; ++d) {
            for (const double offset : {0.0, 0.37}) {
                const auto spec = orth::EigenphaseSpec::roots_of_unity(d, offset);
                const auto sol = orth::solve_amplitudes(spec);
                if (!sol.feasible) {
                    rec.require(false, fmt::format("(d={}) offset {} infeasible", d, offset));
                    continue;
                }
                for (const double a : sol.squared_amps) {
                    rec.require(std::abs(a - 1.0 / static_cast<double>(d)) < 1e-12,
                                fmt::format("(d={}) |a|^2 = {}", d, a));
                }
                const double dev = gram_ok(spec, sol);
                rec.require(dev < 1e-12, fmt::format("(d={}) gram deviation {:.3e}", d, dev));
            }
        }
        out.checks.push_back(rec.finish());
    }
    {
        Recorder rec("solver", "infeasible near identity");
        rec.require(!orth::solve_amplitudes(orth::EigenphaseSpec::from_phases({0.0, 0.1})).feasible,
                    "(d=2) spec (0, 0.1) reported feasible");
        const double eps = 0.01;
        const Operator u = Operator::diagonal(std::vector<cplx>{std::polar(1.0, eps), std::polar(1.0, -eps)});
        rec.require(!orth::reconstruct_general(u).feasible, "(d=2) exp(i eps Z) reported feasible");
        out.checks.push_back(rec.finish());
    }
    {
        Recorder rec("solver", "degenerate (0,0,pi,pi)");
        const auto spec =
            orth::EigenphaseSpec::from_phases({0.0, 0.0, std::numbers::pi, std::numbers::pi});
        const auto sol = orth::solve_amplitudes(spec);
        rec.require(sol.feasible && sol.degenerate() && sol.structure.distinct == 2,
                    "(d=4) degenerate spec not solved as two eigenspaces");
        for (const auto &c : sol.constraints) {
            rec.require(std::abs(c.required_sum - 0.5) < 1e-12,
                        fmt::format("(d=4) eigenspace sum {}", c.required_sum));
        }
        if (sol.feasible) {
            const double dev = gram_ok(spec, sol);
            rec.require(dev < 1e-12, fmt::format("(d=4) gram deviation {:.3e}", dev));
        }
        out.checks.push_back(rec.finish());
    }
    {
        Recorder rec("solver", "clock and shift operators");
        for (std::size_t d = 2; d <= 8; ++d) {
            for (const auto &u : {pauli_z(d), pauli_x(d)}) {
                const auto r = orth::reconstruct_general(u);
                rec.require(r.feasible, fmt::format("(d={}) generalized Pauli infeasible", d));
                if (!r.feasible) {
                    continue;
                }
                const std::vector<double> theta(d, 0.0);
                const Ket phi = orth::admissible_ancilla(r, theta);
                const double dev = orth::check_orbit(u, phi, d).max_deviation;
                rec.require(dev < 1e-10, fmt::format("(d={}) orbit deviation {:.3e}", d, dev));
            }
        }
        out.checks.push_back(rec.finish());
    }
    return out;
}

SuiteReport run_suite(std::string_view name) {
    if (name == "projectors") {
        return projector_suite();
    }
    if (name == "examples") {
        return examples_suite();
    }
    if (name == "probabilities") {
        return probability_suite();
    }
    if (name == "gnk") {
        return gnk_suite();
    }
    if (name == "solver") {
        return solver_suite();
    }
    if (name == "all") {
        SuiteReport all;
        for (const auto &s : {"projectors", "examples", "probabilities", "gnk", "solver"}) {
            all.append(run_suite(s));
        }
        return all;
    }
    throw ArgumentError("unknown suite '" + std::string(name) + "'");
}

} // namespace qparity::verify
