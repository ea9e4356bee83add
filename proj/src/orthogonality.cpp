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

#include "qparity/orthogonality.hpp"

#include "qparity/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace qparity::orthogonality {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_phase(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a value just below a multiple of 2 pi can round up to 2 pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

} // namespace

EigenphaseSpec EigenphaseSpec::from_phases(std::vector<double> phases) {
    if (phases.size() < 2) {
        throw ArgumentError("an eigenphase spec needs at least two phases");
    }
    for (double &p : phases) {
        if (!std::isfinite(p)) {
            throw ArgumentError("eigenphases must be finite");
        }
        p = reduce_phase(p);
    }
    return EigenphaseSpec(std::move(phases));
}

EigenphaseSpec EigenphaseSpec::roots_of_unity(std::size_t d, double offset) {
    std::vector<double> phases(d);
    for (std::size_t m = 0; m < d; ++m) {
        phases[m] = offset + kTwoPi * static_cast<double>(m) / static_cast<double>(d);
    }
    return from_phases(std::move(phases));
}

Operator EigenphaseSpec::diagonal() const {
    std::vector<cplx> diag(phases_.size());
    std::transform(phases_.begin(), phases_.end(), diag.begin(),
                   [](double p) { return std::polar(1.0, p); });
    return Operator::diagonal(diag);
}

OrbitReport check_orbit(const Operator &u, const Ket &phi, std::size_t orbit_len, double tol) {
    if (u.dim() != phi.dim()) {
        throw DimensionError("unitary and state have different dimensions");
    }
    if (orbit_len == 0 || orbit_len > u.dim()) {
        throw ArgumentError("orbit length must lie in [1, dim]");
    }
    if (!u.is_unitary()) {
        throw PreconditionError("check_orbit needs a unitary operator");
    }
    if (!phi.normalized(kOperatorTol)) {
        throw PreconditionError("check_orbit needs a normalized state");
    }

    std::vector<Ket> orbit;
    orbit.reserve(orbit_len);
    orbit.push_back(phi);
    for (std::size_t i = 1; i < orbit_len; ++i) {
        orbit.push_back(u.apply(orbit.back()));
    }

    std::vector<cplx> gram(orbit_len * orbit_len);
    double deviation = 0.0;
    for (std::size_t i = 0; i < orbit_len; ++i) {
        for (std::size_t j = 0; j < orbit_len; ++j) {
            const cplx g = inner(orbit[i], orbit[j]);
            gram[i * orbit_len + j] = g;
            const cplx target = (i == j) ? cplx(1.0) : cplx(0.0);
            deviation = std::max(deviation, std::abs(g - target));
        }
    }
    return OrbitReport{Operator(orbit_len, std::move(gram)), deviation, deviation <= tol};
}

DegeneracyStructure classify_eigenphases(const EigenphaseSpec &spec, double group_tol) {
    const auto phases = spec.phases();
    std::vector<std::size_t> order(phases.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return phases[a] < phases[b]; });

    std::vector<std::vector<std::size_t>> clusters;
    double previous = 0.0;
    for (std::size_t idx : order) {
        if (clusters.empty() || phases[idx] - previous > group_tol) {
            clusters.emplace_back();
        }
        clusters.back().push_back(idx);
        previous = phases[idx];
    }
    // The circle closes at 2 pi: phases just below it belong with those near 0.
    if (clusters.size() > 1) {
        const double first = phases[clusters.front().front()];
        const double last = phases[clusters.back().back()];
        if (first + kTwoPi - last <= group_tol) {
            clusters.front().insert(clusters.front().end(), clusters.back().begin(),
                                    clusters.back().end());
            clusters.pop_back();
        }
    }

    DegeneracyStructure out;
    out.tolerance = group_tol;
    out.distinct = clusters.size();
    for (auto &c : clusters) {
        out.representatives.push_back(phases[c.front()]);
        std::sort(c.begin(), c.end());
        out.multiplicities.push_back(c.size());
        out.members.push_back(std::move(c));
    }
    return out;
}

AmplitudeSolution solve_amplitudes(const EigenphaseSpec &spec, double group_tol) {
    AmplitudeSolution sol;
    sol.structure = classify_eigenphases(spec, group_tol);
    const auto &reps = sol.structure.representatives;
    const std::size_t s = sol.structure.distinct;
    const std::size_t d = spec.size();
    sol.phase_offset = reps.front();

    // Distinct eigenvalues must be evenly spaced around the circle.
    const double spacing = kTwoPi / static_cast<double>(s);
    bool feasible = true;
    for (std::size_t m = 0; m < s; ++m) {
        const double gap = (m + 1 < s) ? reps[m + 1] - reps[m] : reps.front() + kTwoPi - reps[m];
        if (std::abs(gap - spacing) > group_tol) {
            feasible = false;
            break;
        }
    }
    sol.feasible = feasible;
    if (!feasible) {
        return sol;
    }

    sol.squared_amps.assign(d, 0.0);
    const double per_space = 1.0 / static_cast<double>(s);
    for (std::size_t c = 0; c < s; ++c) {
        const auto &members = sol.structure.members[c];
        const double each = (s == d) ? 1.0 / static_cast<double>(d)
                                     : per_space / static_cast<double>(members.size());
        for (std::size_t j : members) {
            sol.squared_amps[j] = each;
        }
        sol.constraints.push_back(EigenspaceConstraint{members, per_space});
    }
    return sol;
}

Ket admissible_state(const EigenphaseSpec &spec, std::span<const double> theta, double group_tol) {
    if (theta.size() != spec.size()) {
        throw ArgumentError("theta must have one phase per eigenvalue");
    }
    const AmplitudeSolution sol = solve_amplitudes(spec, group_tol);
    if (!sol.feasible) {
        throw InfeasibleError("eigenphase spec admits no orthonormal orbit");
    }
    std::vector<cplx> amps(spec.size());
    for (std::size_t j = 0; j < spec.size(); ++j) {
        amps[j] = std::polar(std::sqrt(sol.squared_amps[j]), theta[j]);
    }
    return Ket(std::move(amps));
}

Reconstruction reconstruct_general(const Operator &u, double tol) {
    if (!u.is_unitary()) {
        throw PreconditionError("reconstruct_general needs a unitary operator");
    }
    const auto n = static_cast<Eigen::Index>(u.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = u(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    // A unitary is normal, so its Schur form is diagonal and Q is an
    // orthonormal eigenbasis even inside degenerate eigenspaces.
    const Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
    const Eigen::MatrixXcd &q = schur.matrixU();
    const Eigen::MatrixXcd &t = schur.matrixT();

    std::vector<double> phases(u.dim());
    for (std::size_t j = 0; j < u.dim(); ++j) {
        double p = reduce_phase(std::arg(t(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j))));
        if (kTwoPi - p <= tol) {
            p = 0.0;
        }
        phases[j] = p;
    }
    std::vector<std::size_t> order(u.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return phases[a] < phases[b]; });

    std::vector<double> sorted(u.dim());
    std::vector<cplx> v(u.dim() * u.dim());
    for (std::size_t col = 0; col < u.dim(); ++col) {
        const std::size_t src = order[col];
        sorted[col] = phases[src];
        for (std::size_t r = 0; r < u.dim(); ++r) {
            v[r * u.dim() + col] = q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(src));
        }
    }

    EigenphaseSpec spec = EigenphaseSpec::from_phases(std::move(sorted));
    AmplitudeSolution solution = solve_amplitudes(spec, tol);
    const bool feasible = solution.feasible;
    return Reconstruction{feasible, Operator(u.dim(), std::move(v)), std::move(spec),
                          std::move(solution)};
}

Ket admissible_ancilla(const Reconstruction &r, std::span<const double> theta) {
    return r.basis.apply(admissible_state(r.spec, theta, r.solution.structure.tolerance));
}

} // namespace qparity::orthogonality
