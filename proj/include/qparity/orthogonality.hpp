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
 * Which ancilla unitaries U admit a state phi whose orbit
 * {phi, U phi, ..., U^{s-1} phi} is orthonormal, and with which amplitudes.
 *
 * Writing U = V D V^dagger with D = diag(lambda_j) and psi = V^dagger phi,
 * orthonormality of the orbit reduces to
 *
 *     sum_j |a_j|^2 lambda_j^i = delta_{0i},   i = 0 .. s-1,
 *
 * with s the number of distinct eigenvalues. The system has a solution iff the
 * distinct eigenvalues are exp(i phi_0) times the s-th roots of unity. Then
 * the squared amplitudes of each eigenspace must sum to 1/s; in the
 * nondegenerate case (s = d) every |a_j|^2 is 1/d.
 */
#pragma once

#include "qparity/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace qparity::orthogonality {

/// Default clustering tolerance for eigenphases on the circle.
inline constexpr double kGroupTol = 1e-9;

/// Eigenphases reduced into [0, 2 pi). At least two entries.
class EigenphaseSpec {
  public:
    /// Reduces every phase mod 2 pi. Throws ArgumentError for fewer than two
    /// phases or non-finite input.
    static EigenphaseSpec from_phases(std::vector<double> phases);
    /// offset + 2 pi m / d for m = 0..d-1.
    static EigenphaseSpec roots_of_unity(std::size_t d, double offset = 0.0);

    [[nodiscard]] std::span<const double> phases() const noexcept { return phases_; }
    [[nodiscard]] std::size_t size() const noexcept { return phases_.size(); }
    /// diag(exp(i phi_j))
    [[nodiscard]] Operator diagonal() const;

  private:
    explicit EigenphaseSpec(std::vector<double> phases) : phases_(std::move(phases)) {}
    std::vector<double> phases_;
};

struct DegeneracyStructure {
    std::size_t distinct = 0;
    /// Cluster sizes k_i, ordered like `members`.
    std::vector<std::size_t> multiplicities;
    /// Phase indices belonging to each cluster.
    std::vector<std::vector<std::size_t>> members;
    /// Smallest phase of each cluster, ascending.
    std::vector<double> representatives;
    double tolerance = kGroupTol;
};

struct EigenspaceConstraint {
    std::vector<std::size_t> indices;
    double required_sum = 0.0;
};

struct AmplitudeSolution {
    bool feasible = false;
    DegeneracyStructure structure;
    /// |a_j|^2, empty when infeasible. For degenerate specs this is the
    /// representative solution that spreads 1/s evenly over each eigenspace.
    std::vector<double> squared_amps;
    /// One entry per eigenspace, empty when infeasible.
    std::vector<EigenspaceConstraint> constraints;
    double phase_offset = 0.0;

    [[nodiscard]] bool degenerate() const noexcept {
        return std::any_of(structure.multiplicities.begin(), structure.multiplicities.end(),
                           [](std::size_t k) { return k > 1; });
    }
};

struct OrbitReport {
    /// gram(i, j) = <U^i phi | U^j phi>
    Operator gram;
    double max_deviation = 0.0;
    bool orthonormal = false;
};

/// Gram matrix of {U^i phi}_{i < orbit_len}. Throws PreconditionError if U is
/// not unitary or phi not normalized, DimensionError on a size mismatch and
/// ArgumentError if orbit_len is 0 or exceeds dim.
OrbitReport check_orbit(const Operator &u, const Ket &phi, std::size_t orbit_len,
                        double tol = kOperatorTol);

DegeneracyStructure classify_eigenphases(const EigenphaseSpec &spec, double group_tol = kGroupTol);

AmplitudeSolution solve_amplitudes(const EigenphaseSpec &spec, double group_tol = kGroupTol);

/// sum_j sqrt(|a_j|^2) exp(i theta_j) |j> on the solved magnitudes. Throws
/// InfeasibleError when the phases admit no solution and ArgumentError when theta
/// has the wrong length.
Ket admissible_state(const EigenphaseSpec &spec, std::span<const double> theta,
                     double group_tol = kGroupTol);

struct Reconstruction {
    bool feasible = false;
    /// Columns are eigenvectors of U in the order of `spec`.
    Operator basis;
    EigenphaseSpec spec;
    AmplitudeSolution solution;
};

/// Eigendecomposes U = V D V^dagger (eigenphases ascending in [0, 2 pi)) and
/// solves for admissible amplitudes. Throws PreconditionError if U is not
/// unitary.
Reconstruction reconstruct_general(const Operator &u, double tol = kGroupTol);

/// V * admissible_state(spec, theta): an orbit start for the original U.
Ket admissible_ancilla(const Reconstruction &r, std::span<const double> theta);

} // namespace qparity::orthogonality
