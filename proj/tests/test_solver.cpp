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


#include "qparity/error.hpp"
#include "qparity/orthogonality.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace qparity;
using namespace qparity::orthogonality;

using namespace qparity::oracles;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Operator random_unitary(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<std::vector<cplx>> cols;
    while (cols.size() < d) {
        std::vector<cplx> v(d);
        for (auto &x : v) {
            x = {g(rng), g(rng)};
        }
        for (const auto &c : cols) {
            cplx proj = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                proj += std::conj(c[i]) * v[i];
            }
            for (std::size_t i = 0; i < d; ++i) {
                v[i] -= proj * c[i];
            }
        }
        double nn = 0.0;
        for (const auto &x : v) {
            nn += std::norm(x);
        }
        for (auto &x : v) {
            x /= std::sqrt(nn);
        }
        cols.push_back(v);
    }
    std::vector<cplx> e(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            e[r * d + c] = cols[c][r];
        }
    }
    return Operator(d, std::move(e));
}

double gram_deviation(const EigenphaseSpec &spec, const AmplitudeSolution &sol) {
    const std::vector<double> theta(spec.size(), 0.0);
    return check_orbit(spec.diagonal(), admissible_state(spec, theta), sol.structure.distinct)
        .max_deviation;
}

} // namespace

TEST_CASE("roots of unity are feasible with equal weights") {
    for (std::size_t d = 2; d <= 8; ++d) {
        for (const double offset : {0.0, 0.4, -2.0}) {
            const auto spec = EigenphaseSpec::roots_of_unity(d, offset);
            const auto sol = solve_amplitudes(spec);
            REQUIRE(sol.feasible);
            CHECK_FALSE(sol.degenerate());
            CHECK(sol.structure.distinct == d);
            for (const double a : sol.squared_amps) {
                CHECK(a == doctest::Approx(1.0 / static_cast<double>(d)).epsilon(1e-12));
            }
            CHECK(gram_deviation(spec, sol) < 1e-12);
        }
    }
}

TEST_CASE("specs near the identity are infeasible") {
    CHECK_FALSE(solve_amplitudes(EigenphaseSpec::from_phases({0.0, 0.1})).feasible);
    const double eps = 0.01;
    const auto spec = EigenphaseSpec::from_phases({eps, -eps});
    CHECK_FALSE(solve_amplitudes(spec).feasible);
    const std::vector<double> theta(2, 0.0);
    CHECK_THROWS_AS(admissible_state(spec, theta), InfeasibleError);
    const Operator u = Operator::diagonal(std::vector<cplx>{std::polar(1.0, eps), std::polar(1.0, -eps)});
    CHECK_FALSE(reconstruct_general(u).feasible);
}

TEST_CASE("degenerate spec: per-eigenspace sums") {
    const auto spec = EigenphaseSpec::from_phases({0.0, 0.0, std::numbers::pi, std::numbers::pi});
    const auto sol = solve_amplitudes(spec);
    REQUIRE(sol.feasible);
    CHECK(sol.degenerate());
    CHECK(sol.structure.distinct == 2);
    CHECK(sol.structure.multiplicities == std::vector<std::size_t>{2, 2});
    REQUIRE(sol.constraints.size() == 2);
    for (const auto &c : sol.constraints) {
        CHECK(c.required_sum == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(c.indices.size() == 2);
    }
    CHECK(gram_deviation(spec, sol) < 1e-12);

    // any split within each eigenspace works
    std::vector<double> w{0.1, 0.4, 0.35, 0.15};
    CHECK(orbit_residual({0.0, 0.0, std::numbers::pi, std::numbers::pi}, w, 2) < 1e-24);
}

TEST_CASE("mixed multiplicities over three distinct values") {
    const double t = kTwoPi / 3.0;
    const auto spec = EigenphaseSpec::from_phases({0.0, t, 2 * t, 0.0, t});
    const auto sol = solve_amplitudes(spec);
    REQUIRE(sol.feasible);
    CHECK(sol.structure.distinct == 3);
    for (const auto &c : sol.constraints) {
        CHECK(c.required_sum == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    CHECK(gram_deviation(spec, sol) < 1e-12);
}

TEST_CASE("phases get clustered across the 2 pi wrap") {
    const auto spec = EigenphaseSpec::from_phases({1e-12, kTwoPi - 1e-12, std::numbers::pi});
    const auto s = classify_eigenphases(spec);
    CHECK(s.distinct == 2);
    CHECK(solve_amplitudes(spec).feasible);
}

TEST_CASE("brute-force oracle agrees for d <= 4") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    for (std::size_t d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < 6; ++trial) {
            CAPTURE(d);
            CAPTURE(trial);
            std::vector<double> phases;
            const bool feasible_case = trial % 2 == 0;
            if (feasible_case) {
                const auto r = EigenphaseSpec::roots_of_unity(d, uni(rng));
                phases.assign(r.phases().begin(), r.phases().end());
                std::shuffle(phases.begin(), phases.end(), rng);
            } else {
                for (std::size_t j = 0; j < d; ++j) {
                    phases.push_back(uni(rng));
                }
            }
            const auto spec = EigenphaseSpec::from_phases(phases);
            const auto sol = solve_amplitudes(spec);
            const std::vector<double> reduced(spec.phases().begin(), spec.phases().end());
            const auto oracle = brute_force(reduced, d);
            const bool oracle_feasible = oracle.residual < 1e-10;
            CHECK(sol.feasible == oracle_feasible);
            if (sol.feasible && oracle_feasible) {
                for (std::size_t j = 0; j < d; ++j) {
                    CHECK(std::abs(sol.squared_amps[j] - oracle.w[j]) < 1e-3);
                }
            }
            if (!oracle_feasible) {
                CHECK(oracle.residual > 1e-4);
            }
        }
    }
}

TEST_CASE("Vandermonde closed form agrees on distinct spectra") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    for (std::size_t d = 2; d <= 8; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> phases;
            if (trial % 2 == 0) {
                const auto r = EigenphaseSpec::roots_of_unity(d, uni(rng));
                phases.assign(r.phases().begin(), r.phases().end());
                std::shuffle(phases.begin(), phases.end(), rng);
            } else {
                for (std::size_t j = 0; j < d; ++j) {
                    phases.push_back(uni(rng));
                }
            }
            const auto w = vandermonde_weights(phases);
            const bool closed_feasible = std::all_of(w.begin(), w.end(), [](cplx x) {
                return std::abs(x.imag()) < 1e-9 && x.real() > 0.0;
            });
            const auto sol = solve_amplitudes(EigenphaseSpec::from_phases(phases));
            CHECK(sol.feasible == closed_feasible);
            if (sol.feasible && closed_feasible) {
                // the spec keeps the input order
                for (std::size_t j = 0; j < d; ++j) {
                    CHECK(sol.squared_amps[j] == doctest::Approx(w[j].real()).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("general unitaries are reconstructed and admit orbit starts") {
    std::mt19937_64 rng(17);
    for (std::size_t d = 2; d <= 6; ++d) {
        const Operator v = random_unitary(d, rng);
        const auto roots = EigenphaseSpec::roots_of_unity(d, 0.9);
        const Operator u = v * roots.diagonal() * v.adjoint();
        const auto r = reconstruct_general(u);
        REQUIRE(r.feasible);
        CHECK(r.basis.is_unitary());
        std::vector<double> theta(d);
        for (std::size_t j = 0; j < d; ++j) {
            theta[j] = 0.3 * static_cast<double>(j * j);
        }
        const Ket phi = admissible_ancilla(r, theta);
        CHECK(check_orbit(u, phi, d).max_deviation < 1e-10);
        CHECK(check_orbit(u, phi, d).orthonormal);
        // ascending eigenphases in [0, 2 pi)
        const auto ph = r.spec.phases();
        CHECK(std::is_sorted(ph.begin(), ph.end()));
    }
    // degenerate: U = V diag(1, 1, -1, -1) V^dagger
    const Operator v = random_unitary(4, rng);
    const auto spec = EigenphaseSpec::from_phases({0.0, 0.0, std::numbers::pi, std::numbers::pi});
    const Operator u = v * spec.diagonal() * v.adjoint();
    const auto r = reconstruct_general(u);
    REQUIRE(r.feasible);
    CHECK(r.solution.structure.distinct == 2);
    const std::vector<double> theta(4, 0.0);
    CHECK(check_orbit(u, admissible_ancilla(r, theta), 2).max_deviation < 1e-10);

    // the generalized Pauli operators themselves
    for (std::size_t d = 2; d <= 7; ++d) {
        CHECK(reconstruct_general(pauli_z(d)).feasible);
        CHECK(reconstruct_general(pauli_x(d)).feasible);
        CHECK(check_orbit(pauli_z(d), fourier_ket(d, 0), d).orthonormal);
        CHECK(check_orbit(pauli_x(d), Ket::basis({d}, 0), d).orthonormal);
        CHECK_FALSE(check_orbit(pauli_z(d), Ket::basis({d}, 0), d).orthonormal);
    }
}

TEST_CASE("solver input errors") {
    CHECK_THROWS_AS(EigenphaseSpec::from_phases({0.5}), ArgumentError);
    CHECK_THROWS_AS(EigenphaseSpec::from_phases({0.0, std::nan("")}), ArgumentError);
    const Operator not_unitary = Operator::diagonal(std::vector<cplx>{1.0, 0.5});
    CHECK_THROWS_AS(check_orbit(not_unitary, Ket::basis({2}, 0), 2), PreconditionError);
    CHECK_THROWS_AS(check_orbit(pauli_x(2), Ket(std::vector<cplx>{1.0, 1.0}), 2), PreconditionError);
    CHECK_THROWS_AS(check_orbit(pauli_x(2), Ket::basis({3}, 0), 2), DimensionError);
    CHECK_THROWS_AS(check_orbit(pauli_x(2), Ket::basis({2}, 0), 0), ArgumentError);
    CHECK_THROWS_AS(reconstruct_general(not_unitary), PreconditionError);
    const auto spec = EigenphaseSpec::roots_of_unity(3);
    const std::vector<double> theta(2, 0.0);
    CHECK_THROWS_AS(admissible_state(spec, theta), ArgumentError);
}
