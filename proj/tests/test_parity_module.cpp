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
#include "qparity/parity_module.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

using namespace qparity;
using namespace qparity::parity;

namespace {

Ket random_qubit_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(std::size_t{1} << n);
    for (auto &x : a) {
        x = {g(rng), g(rng)};
    }
    return Ket::qubits(n, std::move(a)).normalize();
}

/// Dense joint unitary: product over qubits of the controlled coupling,
/// built from explicit Kronecker products.
Operator dense_module(std::size_t n, std::size_t d, Coupling c, const std::vector<std::size_t> &order) {
    const Operator p0 = c == Coupling::Phase ? Operator(2, {1.0, 0.0, 0.0, 0.0})
                                             : Operator(2, {0.5, 0.5, 0.5, 0.5});
    const Operator p1 = c == Coupling::Phase ? Operator(2, {0.0, 0.0, 0.0, 1.0})
                                             : Operator(2, {0.5, -0.5, -0.5, 0.5});
    const Operator u = coupling_operator(c, d);
    Operator total = Operator::identity((std::size_t{1} << n) * d);
    for (const std::size_t q : order) {
        std::vector<Operator> a(n + 1, Operator::identity(2));
        std::vector<Operator> b(n + 1, Operator::identity(2));
        a[q] = p0;
        b[q] = p1;
        a[n] = Operator::identity(d);
        b[n] = u;
        total = (tensor(a) + tensor(b)) * total;
    }
    return total;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> o(n);
    for (std::size_t i = 0; i < n; ++i) {
        o[i] = i;
    }
    return o;
}

double max_diff(const Ket &a, const Ket &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace

TEST_CASE("sequential evolution equals the dense unitary") {
    std::mt19937_64 rng(1);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t d = 2; d <= 4; ++d) {
                const auto config = ModuleConfig::standard(n, d, c);
                const Ket input = random_qubit_state(n, rng);
                const Ket joint = evolve(input, config);
                const Ket oracle =
                    dense_module(n, d, c, identity_order(n)).apply(tensor({input, config.ancilla_prep}));
                CHECK(max_diff(joint, oracle) < 1e-12);
                CHECK(joint.factor_dims().size() == n + 1);
            }
        }
    }
}

TEST_CASE("sequential simulation equals projector application") {
    std::mt19937_64 rng(2);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            for (std::size_t d = 2; d <= 6; ++d) {
                const auto config = ModuleConfig::standard(n, d, c);
                for (int trial = 0; trial < 10; ++trial) {
                    const Ket input = random_qubit_state(n, rng);
                    const auto records = run_module(input, config);
                    REQUIRE(records.size() == d);
                    double total = 0.0;
                    for (const auto &r : records) {
                        const Ket proj = apply_projector(input, r.parity, d, c);
                        const double p = proj.norm_squared();
                        CHECK(std::abs(r.probability - p) <= 1e-12);
                        total += r.probability;
                        if (r.post_state) {
                            CHECK(fidelity(*r.post_state, proj.normalize()) >= 1.0 - 1e-10);
                        }
                    }
                    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("interaction order does not change the joint state") {
    std::mt19937_64 rng(3);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        auto config = ModuleConfig::standard(5, 4, c);
        const Ket input = random_qubit_state(5, rng);
        const Ket ref = evolve(input, config);
        std::vector<std::size_t> order = identity_order(5);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            config.interaction_order = order;
            CHECK(max_diff(evolve(input, config), ref) < 1e-12);
        }
        const Ket dense = dense_module(5, 4, c, order).apply(tensor({input, config.ancilla_prep}));
        CHECK(max_diff(dense, ref) < 1e-12);
    }
}

TEST_CASE("evolution matches the closed photonic-module form") {
    std::mt19937_64 rng(4);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        for (std::size_t d = 2; d <= 5; ++d) {
            for (std::size_t j = 0; j < d; ++j) {
                auto config = ModuleConfig::standard(4, d, c);
                config.ancilla_prep = c == Coupling::Phase ? fourier_ket(d, j) : Ket::basis({d}, j);
                const Ket input = random_qubit_state(4, rng);
                CHECK(max_diff(evolve(input, config), photonic_module_action(input, j, d, c)) < 1e-12);
            }
        }
    }
}

TEST_CASE("other basis preparations shift the outcome labels") {
    std::mt19937_64 rng(5);
    const std::size_t n = 4, d = 3;
    const Ket input = random_qubit_state(n, rng);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        const auto ref = outcome_distribution(input, n, d, c);
        for (std::size_t j = 0; j < d; ++j) {
            auto config = ModuleConfig::standard(n, d, c);
            config.ancilla_prep = c == Coupling::Phase ? fourier_ket(d, j) : Ket::basis({d}, j);
            for (const auto &r : run_module(input, config)) {
                CHECK(r.probability == doctest::Approx(ref[r.parity]).epsilon(1e-12));
                const std::size_t m = r.outcome;
                const std::size_t want = c == Coupling::Phase ? (j + d - m) % d : (m + d - j) % d;
                CHECK(r.parity == want);
            }
        }
    }
}

TEST_CASE("orbit readout with a solver-provided ancilla") {
    std::mt19937_64 rng(6);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        for (std::size_t d = 2; d <= 5; ++d) {
            const auto rec = orthogonality::reconstruct_general(coupling_operator(c, d));
            REQUIRE(rec.feasible);
            std::uniform_real_distribution<double> uni(0.0, 6.28);
            std::vector<double> theta(d);
            for (auto &t : theta) {
                t = uni(rng);
            }
            auto config = ModuleConfig::standard(3, d, c);
            config.ancilla_prep = orthogonality::admissible_ancilla(rec, theta);
            config.measurement_basis = MeasurementBasis::Orbit;
            const Ket input = random_qubit_state(3, rng);
            const auto ref = outcome_distribution(input, 3, d, c);
            for (const auto &r : run_module(input, config)) {
                CHECK(r.probability == doctest::Approx(ref[r.parity]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("uniform input gets exact probabilities") {
    const auto records = run_module(Ket::plus_state(3), ModuleConfig::standard(3, 3, Coupling::Phase));
    REQUIRE(records.size() == 3);
    CHECK(*records[0].probability_exact == Rational(1, 4));
    CHECK(*records[1].probability_exact == Rational(3, 8));
    CHECK(*records[2].probability_exact == Rational(3, 8));
    CHECK(records[0].classification->family == states::Family::GHZ);
    CHECK(records[1].classification->label() == "W");
    CHECK(records[2].classification->label() == "W [X^n]");

    const auto phased =
        run_module(Ket::plus_state(3).scaled(cplx(0, 1)), ModuleConfig::standard(3, 3, Coupling::Phase));
    CHECK(phased[1].probability_exact.has_value());

    std::mt19937_64 rng(7);
    const auto generic = run_module(random_qubit_state(3, rng), ModuleConfig::standard(3, 3, Coupling::Phase));
    CHECK_FALSE(generic[0].probability_exact.has_value());

    const auto shift = run_module(Ket::plus_state(4), ModuleConfig::standard(4, 3, Coupling::Shift));
    CHECK(*shift[0].probability_exact == Rational(1));
    CHECK(shift[1].zero_probability);
    CHECK_FALSE(shift[1].post_state.has_value());
    CHECK(uniform_input_probability(5, 3, 1, Coupling::Phase) == Rational(10, 32));
}

TEST_CASE("impossible parities are zero-probability branches") {
    const auto records = run_module(Ket::plus_state(2), ModuleConfig::standard(2, 5, Coupling::Phase));
    for (const auto &r : records) {
        CHECK(r.zero_probability == (r.parity > 2));
        CHECK(r.post_state.has_value() == (r.parity <= 2));
    }
}

TEST_CASE("explicit projectors agree with the matrix-free ones") {
    std::mt19937_64 rng(8);
    for (const Coupling c : {Coupling::Phase, Coupling::Shift}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (std::size_t d = 2; d <= 5; ++d) {
                const auto set = build_projectors(n, d, c);
                const Ket v = random_qubit_state(n, rng);
                for (std::size_t j = 0; j < d; ++j) {
                    CHECK(max_diff(set.projectors[j].apply(v), apply_projector(v, j, d, c)) < 1e-12);
                    CHECK(set.dims[j] == projector_dim(j, n, d));
                }
            }
        }
    }
}

TEST_CASE("configuration and precondition errors") {
    auto config = ModuleConfig::standard(3, 3, Coupling::Phase);
    config.measurement_basis = MeasurementBasis::Computational;
    CHECK_THROWS_AS(validate(config), ConfigurationError);

    config = ModuleConfig::standard(3, 3, Coupling::Shift);
    config.measurement_basis = MeasurementBasis::Fourier;
    CHECK_THROWS_AS(validate(config), ConfigurationError);

    config = ModuleConfig::standard(3, 3, Coupling::Phase);
    config.ancilla_prep = Ket::basis({3}, 0);
    CHECK_THROWS_AS(validate(config), ConfigurationError);

    config = ModuleConfig::standard(3, 3, Coupling::Phase);
    config.ancilla_prep = Ket::basis({3}, 0);
    config.measurement_basis = MeasurementBasis::Orbit;
    CHECK_THROWS_AS(validate(config), ConfigurationError);

    config = ModuleConfig::standard(3, 3, Coupling::Phase);
    config.interaction_order = {0, 0, 1};
    CHECK_THROWS_AS(validate(config), ConfigurationError);

    config = ModuleConfig::standard(3, 1, Coupling::Phase);
    CHECK_THROWS_AS(validate(config), DimensionError);

    config = ModuleConfig::standard(3, 3, Coupling::Phase);
    CHECK_THROWS_AS(run_module(Ket::plus_state(3).scaled(2.0), config), PreconditionError);
    CHECK_THROWS_AS(run_module(Ket::plus_state(4), config), DimensionError);

    Envelope small;
    small.max_statevector_qubits = 4;
    small.max_projector_qubits = 3;
    CHECK_THROWS_AS(validate(ModuleConfig::standard(5, 3, Coupling::Phase), small), ResourceError);
    CHECK_THROWS_AS(build_projectors(4, 3, Coupling::Phase, small), ResourceError);
    CHECK_THROWS_AS(apply_projector(Ket::plus_state(2), 3, 3, Coupling::Phase), IndexError);
    CHECK_THROWS_AS(projector_dim(3, 4, 3), IndexError);
    CHECK_THROWS_AS(parse_coupling("both"), ArgumentError);
    CHECK(parse_coupling("shift") == Coupling::Shift);
}

TEST_CASE("envelope from the environment") {
    ::setenv("QPARITY_MAX_QUBITS", "9", 1);
    const Envelope e = Envelope::from_environment();
    CHECK(e.max_statevector_qubits == 9);
    CHECK(e.max_projector_qubits == 9);
    ::setenv("QPARITY_MAX_QUBITS", "30", 1);
    const Envelope big = Envelope::from_environment();
    CHECK(big.max_statevector_qubits == 30);
    CHECK(big.max_projector_qubits == 14);
    ::unsetenv("QPARITY_MAX_QUBITS");
    CHECK(Envelope::from_environment().max_statevector_qubits == 20);
}
