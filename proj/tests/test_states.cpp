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
#include "qparity/exact.hpp"
#include "qparity/states.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

using namespace qparity;
using namespace qparity::states;

namespace {

constexpr double kTol = 1e-10;

Operator pauli_y() {
    return Operator(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0});
}

/// <v| A^{(x) n} |v> through an explicit matrix.
cplx dense_expectation(const Ket &v, const Operator &single) {
    const Operator a = tensor_power(single, v.num_factors());
    return inner(v, a.apply(v));
}

Ket random_qubit_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(std::size_t{1} << n);
    for (auto &x : a) {
        x = {g(rng), g(rng)};
    }
    return Ket::qubits(n, std::move(a)).normalize();
}

} // namespace

TEST_CASE("Dicke states by explicit enumeration") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Ket d = dicke(n, k);
            CHECK(d.normalized());
            const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
            for (std::size_t x = 0; x < d.dim(); ++x) {
                const bool in = static_cast<std::size_t>(std::popcount(x)) == k;
                CHECK(std::abs(d[x] - (in ? amp : 0.0)) < 1e-14);
            }
        }
    }
}

TEST_CASE("duality D_{n,n-k} = X^n D_{n,k}") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(fidelity(bitflip_all(dicke(n, k)), dicke(n, n - k)) ==
                  doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    const Ket flip = tensor_power(pauli_x(2), 3).apply(w(3));
    CHECK(fidelity(bitflip_all(w(3)), flip) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("named constructors") {
    const Ket g3 = ghz(3);
    CHECK(std::abs(g3[0] - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(g3[7] - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(w(4) == dicke(4, 1));
    CHECK(fidelity(g(5), g_general(5, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g_general(6, 3) == dicke(6, 3));
    CHECK(g_general(7, 2).normalized());
    CHECK_THROWS_AS(g_general(4, 5), ArgumentError);
    CHECK_THROWS_AS(bitflip_all(Ket::basis({3}, 0)), DimensionError);
}

TEST_CASE("Dicke decomposition reproduces symmetric states") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (std::size_t n = 2; n <= 7; ++n) {
        DickeDecomposition truth;
        truth.n = n;
        double nn = 0.0;
        for (std::size_t k = 0; k <= n; ++k) {
            const double c = std::abs(g(rng)) + 0.1;
            truth.coeffs[k] = c;
            nn += c * c;
        }
        for (auto &[k, c] : truth.coeffs) {
            c /= std::sqrt(nn);
        }
        const Ket v = dicke_span(truth).scaled(std::polar(1.0, 0.7));
        const auto dec = dicke_decompose(v);
        CHECK(dec.residual < 1e-12);
        for (const auto &[k, c] : truth.coeffs) {
            CHECK(std::abs(dec.coeffs.at(k) - c) < 1e-12);
        }
    }
    const Ket asym = Ket::qubits(2, {0.0, 1.0, 0.0, 0.0});
    const auto dec = dicke_decompose(asym);
    CHECK(dec.residual == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(dicke_decompose(Ket::qubits(2, {1.0, 1.0, 0.0, 0.0})), PreconditionError);
}

TEST_CASE("weight form divides by the smallest squared coefficient") {
    DickeDecomposition d;
    d.n = 5;
    d.coeffs[0] = 1.0 / std::sqrt(11.0);
    d.coeffs[3] = std::sqrt(10.0 / 11.0);
    CHECK(d.weight_form() == "0:1 3:10");
}

TEST_CASE("predicted branches follow sqrt(C(n, k + j d))") {
    const auto b = predicted_branch(5, 3, 0);
    REQUIRE(b.coeffs.size() == 2);
    CHECK(std::norm(b.coeffs.at(0)) == doctest::Approx(1.0 / 11.0));
    CHECK(std::norm(b.coeffs.at(3)) == doctest::Approx(10.0 / 11.0));
    CHECK(predicted_branch(3, 5, 4).coeffs.empty());
    CHECK_THROWS_AS(predicted_branch(5, 3, 3), ArgumentError);
    CHECK_THROWS_AS(predicted_branch(5, 1, 0), ArgumentError);
}

TEST_CASE("classification of the named families") {
    CHECK(classify(ghz(4)).label() == "GHZ");
    CHECK(classify(w(5)).label() == "W");
    CHECK(classify(bitflip_all(w(5))).label() == "W [X^n]");
    CHECK(classify(dicke(4, 2)).label() == "Dicke(4,2)");
    CHECK(classify(dicke(7, 4)).label() == "Dicke(7,3) [X^n]");
    CHECK(classify(g(5)).label() == "G_5");
    CHECK(classify(g_general(7, 2)).label() == "G(7,2)");
    CHECK(classify(g_general(7, 5)).label() == "G(7,2)");
    CHECK(is_g_general(classify(g(6)), 6, 1));
    CHECK(is_g_general(classify(g_general(9, 2)), 9, 2));
    CHECK(is_g_general(classify(g_general(9, 2)), 9, 7));
    CHECK_FALSE(is_g_general(classify(g_general(9, 2)), 9, 3));
    // global phase does not matter
    CHECK(classify(ghz(3).scaled(cplx(0, 1))).family == Family::GHZ);

    const Ket prod = tensor({Ket(std::vector<cplx>{0.6, 0.8}), Ket(std::vector<cplx>{0.8, cplx(0, 0.6)}),
                             Ket(std::vector<cplx>{1.0, 0.0})});
    CHECK(classify(prod).family == Family::Product);

    DickeDecomposition mix;
    mix.n = 5;
    mix.coeffs[0] = 1.0 / std::sqrt(11.0);
    mix.coeffs[3] = std::sqrt(10.0 / 11.0);
    CHECK(classify(dicke_span(mix)).family == Family::DickeSum);

    std::mt19937_64 rng(9);
    CHECK(classify(random_qubit_state(4, rng)).family == Family::Other);
}

TEST_CASE("X^n and Y^n expectations against dense operators") {
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 7; ++n) {
        const Ket v = random_qubit_state(n, rng);
        const auto e = expectations(v);
        const cplx x = dense_expectation(v, pauli_x(2));
        const cplx y = dense_expectation(v, pauli_y());
        CHECK(std::abs(cplx(e.x_all, e.x_imag) - x) < 1e-12);
        CHECK(std::abs(cplx(e.y_all, e.y_imag) - y) < 1e-12);
    }
}

TEST_CASE("G(n,k) expectations match the closed form") {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto e = expectations(g_general(n, k));
            if (2 * k == n) {
                CHECK(e.y_all == doctest::Approx(1.0).epsilon(kTol));
                continue;
            }
            CHECK(e.x_all == doctest::Approx(1.0).epsilon(kTol));
            const double want = (n % 2 == 1) ? 0.0 : (((n / 2 + k) % 2 == 0) ? 1.0 : -1.0);
            CHECK(std::abs(e.y_all - want) < kTol);
        }
    }
}
