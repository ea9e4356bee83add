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
 * The generalized parity module: n qubits, each coupled once to a common
 * d-level ancilla, followed by a projective measurement of the ancilla.
 *
 * Two couplings are supported:
 *   - Phase: |0><0| (x) I + |1><1| (x) Z_d, ancilla prepared in |u_0> and
 *     measured in the Fourier basis. Outcome |u_m> heralds parity (-m) mod d.
 *   - Shift: |+><+| (x) I + |-><-| (x) X_d, ancilla prepared in |0> and
 *     measured in the computational basis. Outcome |m> heralds parity m.
 *
 * The sequential simulation (run_module, evolve) and the projector algebra
 * (apply_projector, build_projectors) are separate code paths so each can be
 * used to check the other.
 */
#pragma once

#include "qparity/exact.hpp"
#include "qparity/linalg.hpp"
#include "qparity/states.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace qparity::parity {

enum class Coupling { Phase, Shift };

enum class MeasurementBasis {
    Fourier,
    Computational,
    /// {U^m phi}_m for the coupling operator U and ancilla preparation phi.
    /// Outcome m heralds parity m.
    Orbit,
};

std::string_view to_string(Coupling c);
/// "phase" / "shift"; throws ArgumentError otherwise.
Coupling parse_coupling(std::string_view s);

/// Size limits. QPARITY_MAX_QUBITS overrides the state-vector limit; the
/// explicit-matrix limit is never larger than it.
struct Envelope {
    std::size_t max_statevector_qubits = 20;
    std::size_t max_projector_qubits = 14;
    std::size_t max_ancilla_dim = 64;

    static Envelope from_environment();
};

struct ModuleConfig {
    std::size_t n = 0;
    std::size_t d = 0;
    Coupling coupling = Coupling::Phase;
    Ket ancilla_prep = Ket(std::vector<cplx>{1.0, 0.0});
    MeasurementBasis measurement_basis = MeasurementBasis::Fourier;
    /// Qubit interaction order (0-based, qubit 1 = index 0). Empty means
    /// 0, 1, ..., n-1.
    std::vector<std::size_t> interaction_order;

    /// Default preparation and measurement for the coupling.
    static ModuleConfig standard(std::size_t n, std::size_t d, Coupling coupling);
};

/// Throws ConfigurationError, DimensionError or ResourceError.
void validate(const ModuleConfig &config, const Envelope &envelope = Envelope::from_environment());

/// The single-ancilla coupling operator: Z_d for Phase, X_d for Shift.
Operator coupling_operator(Coupling c, std::size_t d);

struct OutcomeRecord {
    std::size_t outcome = 0;
    std::size_t parity = 0;
    /// Present when the input is uniform over all basis states (|+>^n up to
    /// a global phase).
    std::optional<Rational> probability_exact;
    double probability = 0.0;
    /// Probability below 1e-12. Such branches have no post_state.
    bool zero_probability = false;
    std::optional<Ket> post_state;
    std::optional<states::ClassificationResult> classification;
};

/// Joint qubit (x) ancilla state after every qubit has interacted once.
Ket evolve(const Ket &input, const ModuleConfig &config);

/// Full branch enumeration, one record per ancilla outcome, sorted by parity.
/// Throws PreconditionError for an unnormalized input, ConfigurationError for
/// an inconsistent config.
std::vector<OutcomeRecord> run_module(const Ket &input, const ModuleConfig &config);

/// Exact heralding probability of parity k for |+>^n.
Rational uniform_input_probability(std::size_t n, std::size_t d, std::size_t k, Coupling c);

/// P_k |psi> (Phase) or ~P_k |psi> (Shift) from the defining sum
/// d^-1 sum_j w^{-kj} A^j, applied qubit by qubit without forming matrices.
Ket apply_projector(const Ket &input, std::size_t k, std::size_t d, Coupling c);

struct ProjectorSet {
    std::size_t n = 0;
    std::size_t d = 0;
    Coupling coupling = Coupling::Phase;
    std::vector<Operator> projectors;
    /// Rounded traces.
    std::vector<std::size_t> dims;
};

/// Explicit 2^n x 2^n matrices. Throws ResourceError past the envelope.
ProjectorSet build_projectors(std::size_t n, std::size_t d, Coupling c,
                              const Envelope &envelope = Envelope::from_environment());

/// sum_{j = i mod d} C(n, j). Throws IndexError unless i < d.
std::size_t projector_dim(std::size_t i, std::size_t n, std::size_t d);

/// p(j) = <psi|P_j|psi> through apply_projector.
std::vector<double> outcome_distribution(const Ket &input, std::size_t n, std::size_t d,
                                         Coupling c);

/// Closed-form joint state before measurement:
///   Phase: sum_i (P_i (x) Z_d^i) |psi>|u_k>
///   Shift: sum_i (~P_i (x) X_d^i) |psi>|k>
/// with k = ancilla_index. Throws IndexError unless ancilla_index < d.
Ket photonic_module_action(const Ket &input, std::size_t ancilla_index, std::size_t d,
                           Coupling c);

} // namespace qparity::parity
