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

#include "qparity/parity_module.hpp"

#include "qparity/error.hpp"
#include "qparity/kernels.hpp"
#include "qparity/orthogonality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace qparity::parity {
namespace {

constexpr double kZeroProbability = 1e-12;
constexpr double kInputNormTol = 1e-10;
constexpr std::size_t kMaxProjectorBytes = std::size_t{2} << 30;

struct ResolvedMeasurement {
    std::vector<Ket> basis;
    std::vector<std::size_t> parity_of_outcome;
};

std::size_t mod(long long a, std::size_t d) {
    const auto dd = static_cast<long long>(d);
    return static_cast<std::size_t>(((a % dd) + dd) % dd);
}

/// Index j such that prep equals |e_j> up to a global phase, if any.
template <typename BasisFn>
std::optional<std::size_t> match_basis_vector(const Ket &prep, std::size_t d, BasisFn basis) {
    for (std::size_t j = 0; j < d; ++j) {
        if (fidelity(prep, basis(j)) >= 1.0 - kFidelityTol) {
            return j;
        }
    }
    return std::nullopt;
}

ResolvedMeasurement resolve_measurement(const ModuleConfig &c) {
    const std::size_t d = c.d;
    ResolvedMeasurement out;
    out.parity_of_outcome.resize(d);
    switch (c.measurement_basis) {
    case MeasurementBasis::Fourier: {
        if (c.coupling != Coupling::Phase) {
            throw ConfigurationError("Fourier-basis readout requires the phase coupling");
        }
        const auto j = match_basis_vector(c.ancilla_prep, d,
                                          [d](std::size_t i) { return fourier_ket(d, i); });
        if (!j) {
            throw ConfigurationError(
                "Fourier-basis readout requires the ancilla to start in some |u_j>");
        }
        // Z_d^w |u_j> = |u_{j-w}>
        for (std::size_t m = 0; m < d; ++m) {
            out.basis.push_back(fourier_ket(d, m));
            out.parity_of_outcome[m] = mod(static_cast<long long>(*j) - static_cast<long long>(m), d);
        }
        break;
    }
    case MeasurementBasis::Computational: {
        if (c.coupling != Coupling::Shift) {
            throw ConfigurationError("computational-basis readout requires the shift coupling");
        }
        const auto j = match_basis_vector(c.ancilla_prep, d,
                                          [d](std::size_t i) { return Ket::basis({d}, i); });
        if (!j) {
            throw ConfigurationError(
                "computational-basis readout requires the ancilla to start in some |j>");
        }
        // X_d^w |j> = |j+w>
        for (std::size_t m = 0; m < d; ++m) {
            out.basis.push_back(Ket::basis({d}, m));
            out.parity_of_outcome[m] = mod(static_cast<long long>(m) - static_cast<long long>(*j), d);
        }
        break;
    }
    case MeasurementBasis::Orbit: {
        const Operator u = coupling_operator(c.coupling, d);
        const auto report = orthogonality::check_orbit(u, c.ancilla_prep, d);
        if (!report.orthonormal) {
            throw ConfigurationError("ancilla preparation does not have an orthonormal orbit");
        }
        Ket e = c.ancilla_prep;
        for (std::size_t m = 0; m < d; ++m) {
            out.basis.push_back(e);
            out.parity_of_outcome[m] = m;
            e = u.apply(e);
        }
        break;
    }
    }
    return out;
}

std::vector<std::size_t> resolved_order(const ModuleConfig &c) {
    if (!c.interaction_order.empty()) {
        return c.interaction_order;
    }
    std::vector<std::size_t> order(c.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

void require_qubit_input(const Ket &input, std::size_t n) {
    if (!input.all_qubits() || input.num_factors() != n) {
        throw DimensionError("input must be a ket of " + std::to_string(n) + " qubits");
    }
}

/// Multiplies every ancilla block of the |1>-half of each qubit pair by the
/// diagonal of Z_d.
void couple_phase(std::vector<cplx> &amps, std::size_t bit, std::size_t d) {
    const std::size_t run = (std::size_t{1} << bit) * d;
    const std::size_t tile_blocks = std::min<std::size_t>(std::size_t{1} << bit, 1024);
    std::vector<cplx> tile(tile_blocks * d);
    for (std::size_t i = 0; i < tile.size(); ++i) {
        tile[i] = root_of_unity(d, static_cast<long long>(i % d));
    }
    std::span<cplx> all(amps);
    for (std::size_t start = 0; start < amps.size(); start += 2 * run) {
        for (std::size_t off = 0; off < run; off += tile.size()) {
            const std::size_t len = std::min(tile.size(), run - off);
            kernels::cmul(all.subspan(start + run + off, len),
                          std::span<const cplx>(tile).first(len));
        }
    }
}

/// |+><+| (x) I + |-><-| (x) X_d on one qubit: with s = a0 + a1 and
/// t = a0 - a1, the pair becomes ((s + X t)/2, (s - X t)/2).
void couple_shift(std::vector<cplx> &amps, std::size_t bit, std::size_t d) {
    const std::size_t run = (std::size_t{1} << bit) * d;
    std::span<cplx> all(amps);
    for (std::size_t start = 0; start < amps.size(); start += 2 * run) {
        std::span<cplx> lo = all.subspan(start, run);
        std::span<cplx> hi = all.subspan(start + run, run);
        kernels::butterfly(lo, hi);
        for (std::size_t b = 0; b < run; b += d) {
            std::rotate(hi.begin() + static_cast<std::ptrdiff_t>(b),
                        hi.begin() + static_cast<std::ptrdiff_t>(b + d - 1),
                        hi.begin() + static_cast<std::ptrdiff_t>(b + d));
        }
        kernels::butterfly(lo, hi);
        kernels::scale(0.5, all.subspan(start, 2 * run));
    }
}

/// In-place single-qubit gate on every qubit of an n-qubit vector.
void apply_to_every_qubit(std::vector<cplx> &amps, std::size_t n, const Operator &g) {
    const cplx m[4] = {g(0, 0), g(0, 1), g(1, 0), g(1, 1)};
    std::span<cplx> all(amps);
    for (std::size_t bit = 0; bit < n; ++bit) {
        const std::size_t run = std::size_t{1} << bit;
        for (std::size_t start = 0; start < amps.size(); start += 2 * run) {
            kernels::apply2x2(m, all.subspan(start, run), all.subspan(start + run, run));
        }
    }
}

/// A_1 = diag(1, w) for the phase coupling, B_1 = H A_1 H for the shift one.
Operator single_qubit_generator(Coupling c, std::size_t d) {
    const std::vector<cplx> diag{1.0, root_of_unity(d, 1)};
    const Operator a1 = Operator::diagonal(diag);
    if (c == Coupling::Phase) {
        return a1;
    }
    const Operator h = hadamard();
    return h * a1 * h;
}

bool is_uniform(const Ket &input) {
    const cplx first = input[0];
    return std::all_of(input.amps().begin(), input.amps().end(),
                       [first](cplx a) { return std::abs(a - first) <= 1e-12; });
}

} // namespace

std::string_view to_string(Coupling c) { return c == Coupling::Phase ? "phase" : "shift"; }

Coupling parse_coupling(std::string_view s) {
    if (s == "phase") {
        return Coupling::Phase;
    }
    if (s == "shift") {
        return Coupling::Shift;
    }
    throw ArgumentError("unknown coupling '" + std::string(s) + "' (expected phase|shift)");
}

Envelope Envelope::from_environment() {
    Envelope e;
    if (const char *raw = std::getenv("QPARITY_MAX_QUBITS")) {
        const std::string_view text(raw);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
            e.max_statevector_qubits = value;
            e.max_projector_qubits = std::min(e.max_projector_qubits, value);
        }
    }
    return e;
}

ModuleConfig ModuleConfig::standard(std::size_t n, std::size_t d, Coupling coupling) {
    ModuleConfig c;
    c.n = n;
    c.d = d;
    c.coupling = coupling;
    if (d >= 2) {
        if (coupling == Coupling::Phase) {
            c.ancilla_prep = fourier_ket(d, 0);
            c.measurement_basis = MeasurementBasis::Fourier;
        } else {
            c.ancilla_prep = Ket::basis({d}, 0);
            c.measurement_basis = MeasurementBasis::Computational;
        }
    }
    return c;
}

Operator coupling_operator(Coupling c, std::size_t d) {
    return c == Coupling::Phase ? pauli_z(d) : pauli_x(d);
}

void validate(const ModuleConfig &config, const Envelope &envelope) {
    if (config.n == 0) {
        throw ConfigurationError("the module needs at least one qubit");
    }
    if (config.d < 2) {
        throw DimensionError("ancilla dimension must be at least 2");
    }
    if (config.n > envelope.max_statevector_qubits) {
        throw ResourceError("qubit count " + std::to_string(config.n) + " exceeds the limit of " +
                            std::to_string(envelope.max_statevector_qubits));
    }
    if (config.d > envelope.max_ancilla_dim) {
        throw ResourceError("ancilla dimension " + std::to_string(config.d) +
                            " exceeds the limit of " + std::to_string(envelope.max_ancilla_dim));
    }
    if (config.ancilla_prep.dim() != config.d) {
        throw ConfigurationError("ancilla preparation has the wrong dimension");
    }
    if (!config.ancilla_prep.normalized(kInputNormTol)) {
        throw ConfigurationError("ancilla preparation must be normalized");
    }
    if (!config.interaction_order.empty()) {
        std::vector<std::size_t> sorted = config.interaction_order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expected(config.n);
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        if (sorted != expected) {
            throw ConfigurationError("interaction order must be a permutation of the qubits");
        }
    }
    (void)resolve_measurement(config);
}

Ket evolve(const Ket &input, const ModuleConfig &config) {
    validate(config);
    require_qubit_input(input, config.n);
    Ket joint = tensor({input, config.ancilla_prep});
    std::vector<cplx> amps(joint.amps().begin(), joint.amps().end());
    for (const std::size_t q : resolved_order(config)) {
        const std::size_t bit = config.n - 1 - q;
        if (config.coupling == Coupling::Phase) {
            couple_phase(amps, bit, config.d);
        } else {
            couple_shift(amps, bit, config.d);
        }
    }
    std::vector<std::size_t> dims(config.n, 2);
    dims.push_back(config.d);
    return Ket(std::move(dims), std::move(amps));
}

std::vector<OutcomeRecord> run_module(const Ket &input, const ModuleConfig &config) {
    validate(config);
    require_qubit_input(input, config.n);
    if (!input.normalized(kInputNormTol)) {
        throw PreconditionError("module input must be normalized");
    }
    const ResolvedMeasurement meas = resolve_measurement(config);
    const Ket joint = evolve(input, config);
    const bool uniform = is_uniform(input);

    const std::size_t d = config.d;
    const std::size_t qubit_dim = input.dim();
    std::vector<OutcomeRecord> records;
    records.reserve(d);
    for (std::size_t m = 0; m < d; ++m) {
        std::vector<cplx> branch(qubit_dim);
        for (std::size_t x = 0; x < qubit_dim; ++x) {
            branch[x] = kernels::dotc(meas.basis[m].amps(), joint.amps().subspan(x * d, d));
        }
        OutcomeRecord r;
        r.outcome = m;
        r.parity = meas.parity_of_outcome[m];
        r.probability = kernels::norm2(branch);
        if (uniform) {
            r.probability_exact = uniform_input_probability(config.n, d, r.parity, config.coupling);
        }
        r.zero_probability = r.probability < kZeroProbability;
        if (!r.zero_probability) {
            Ket post = Ket::qubits(config.n, std::move(branch)).normalize();
            r.classification = states::classify(post);
            r.post_state = std::move(post);
        }
        records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(),
              [](const OutcomeRecord &a, const OutcomeRecord &b) { return a.parity < b.parity; });
    return records;
}

Rational uniform_input_probability(std::size_t n, std::size_t d, std::size_t k, Coupling c) {
    if (d < 2 || k >= d) {
        throw IndexError("parity index out of range");
    }
    if (c == Coupling::Shift) {
        // |+>^n has no |-> component, so every qubit leaves the ancilla alone.
        return Rational(k == 0 ? 1 : 0);
    }
    const auto count = residue_class_count(static_cast<unsigned>(n), static_cast<unsigned>(d),
                                           static_cast<unsigned>(k));
    return Rational(static_cast<std::int64_t>(count)) *
           inverse_power_of_two(static_cast<unsigned>(n));
}

Ket apply_projector(const Ket &input, std::size_t k, std::size_t d, Coupling c) {
    if (d < 2) {
        throw DimensionError("ancilla dimension must be at least 2");
    }
    if (k >= d) {
        throw IndexError("parity index out of range");
    }
    if (!input.all_qubits()) {
        throw DimensionError("projectors act on qubits only");
    }
    const std::size_t n = input.num_factors();
    const Operator generator = single_qubit_generator(c, d);
    std::vector<cplx> result(input.dim());
    const cplx weight = 1.0 / static_cast<double>(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<cplx> term(input.amps().begin(), input.amps().end());
        if (j > 0) {
            apply_to_every_qubit(term, n, generator.pow(j));
        }
        const cplx coeff = weight * root_of_unity(d, -static_cast<long long>(k * j));
        kernels::axpy(coeff, term, result);
    }
    return Ket(std::vector<std::size_t>(n, 2), std::move(result));
}

ProjectorSet build_projectors(std::size_t n, std::size_t d, Coupling c, const Envelope &envelope) {
    if (n == 0) {
        throw ArgumentError("need at least one qubit");
    }
    if (d < 2) {
        throw DimensionError("ancilla dimension must be at least 2");
    }
    if (n > envelope.max_projector_qubits) {
        throw ResourceError("explicit projectors limited to " +
                            std::to_string(envelope.max_projector_qubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    if (dim * dim * d * sizeof(cplx) > kMaxProjectorBytes) {
        throw ResourceError("explicit projector set would exceed the memory envelope");
    }

    const Operator generator = single_qubit_generator(c, d);
    std::vector<std::vector<cplx>> acc(d, std::vector<cplx>(dim * dim));
    const cplx weight = 1.0 / static_cast<double>(d);
    for (std::size_t j = 0; j < d; ++j) {
        // A_N^j = (A_1^j)^{(x) n}
        const Operator power = tensor_power(generator.pow(j), n);
        for (std::size_t i = 0; i < d; ++i) {
            const cplx coeff = weight * root_of_unity(d, -static_cast<long long>(i * j));
            kernels::axpy(coeff, power.entries(), acc[i]);
        }
    }

    ProjectorSet set;
    set.n = n;
    set.d = d;
    set.coupling = c;
    for (auto &entries : acc) {
        Operator p(dim, std::move(entries));
        set.dims.push_back(static_cast<std::size_t>(std::llround(p.trace().real())));
        set.projectors.push_back(std::move(p));
    }
    return set;
}

std::size_t projector_dim(std::size_t i, std::size_t n, std::size_t d) {
    if (d == 0 || i >= d) {
        throw IndexError("parity index out of range");
    }
    return static_cast<std::size_t>(residue_class_count(
        static_cast<unsigned>(n), static_cast<unsigned>(d), static_cast<unsigned>(i)));
}

std::vector<double> outcome_distribution(const Ket &input, std::size_t n, std::size_t d,
                                         Coupling c) {
    require_qubit_input(input, n);
    if (!input.normalized(kInputNormTol)) {
        throw PreconditionError("input must be normalized");
    }
    std::vector<double> p(d);
    for (std::size_t j = 0; j < d; ++j) {
        p[j] = inner(input, apply_projector(input, j, d, c)).real();
    }
    return p;
}

Ket photonic_module_action(const Ket &input, std::size_t ancilla_index, std::size_t d,
                           Coupling c) {
    if (d < 2) {
        throw DimensionError("ancilla dimension must be at least 2");
    }
    if (ancilla_index >= d) {
        throw IndexError("ancilla basis index out of range");
    }
    const Operator u = coupling_operator(c, d);
    Ket ancilla = (c == Coupling::Phase) ? fourier_ket(d, ancilla_index)
                                         : Ket::basis({d}, ancilla_index);
    std::vector<cplx> joint(input.dim() * d);
    for (std::size_t i = 0; i < d; ++i) {
        const Ket term = tensor({apply_projector(input, i, d, c), ancilla});
        kernels::axpy(1.0, term.amps(), joint);
        ancilla = u.apply(ancilla);
    }
    std::vector<std::size_t> dims(input.factor_dims().begin(), input.factor_dims().end());
    dims.push_back(d);
    return Ket(std::move(dims), std::move(joint));
}

} // namespace qparity::parity
