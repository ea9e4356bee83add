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
#include "qparity/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qparity;

namespace {

constexpr double kTol = 1e-12;

bool close(cplx a, cplx b, double tol = kTol) { return std::abs(a - b) < tol; }

} // namespace

TEST_CASE("clock and shift satisfy Z X = w X Z") {
    for (std::size_t d = 2; d <= 9; ++d) {
        const Operator x = pauli_x(d);
        const Operator z = pauli_z(d);
        CHECK(x.is_unitary());
        CHECK(z.is_unitary());
        CHECK((z * x).max_deviation((x * z).scaled(root_of_unity(d, 1))) < kTol);
        CHECK(x.pow(d).max_deviation(Operator::identity(d)) < kTol);
        CHECK(z.pow(d).max_deviation(Operator::identity(d)) < kTol);
    }
}

TEST_CASE("shift moves |j> to |j+1 mod d>") {
    const std::size_t d = 5;
    const Operator x = pauli_x(d);
    for (std::size_t j = 0; j < d; ++j) {
        CHECK(x.apply(Ket::basis({d}, j)) == Ket::basis({d}, (j + 1) % d));
    }
}

TEST_CASE("Fourier kets: orthonormal, eigenvectors of X, permuted by Z") {
    for (std::size_t d = 2; d <= 7; ++d) {
        const Operator x = pauli_x(d);
        const Operator z = pauli_z(d);
        for (std::size_t j = 0; j < d; ++j) {
            const Ket u = fourier_ket(d, j);
            for (std::size_t k = 0; k < d; ++k) {
                CHECK(close(inner(u, fourier_ket(d, k)), j == k ? 1.0 : 0.0));
            }
            // X u_j is proportional to u_j
            CHECK(fidelity(x.apply(u), u) == doctest::Approx(1.0).epsilon(1e-12));
            // Z u_j = u_{j-1}: the convention the phase coupling relies on
            CHECK(fidelity(z.apply(u), fourier_ket(d, (j + d - 1) % d)) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("mixed-radix index: first factor most significant") {
    const std::vector<std::size_t> dims{2, 2, 3};
    CHECK(basis_index::from_digits(std::vector<std::size_t>{1, 0, 2}, dims) == 8);
    CHECK(basis_index::to_digits(8, dims) == std::vector<std::size_t>{1, 0, 2});
    for (std::size_t v = 0; v < 12; ++v) {
        CHECK(basis_index::from_digits(basis_index::to_digits(v, dims), dims) == v);
    }
    const Ket k = tensor({Ket::basis({2}, 1), Ket::basis({2}, 0), Ket::basis({3}, 2)});
    CHECK(k == Ket::basis(dims, 8));
}

TEST_CASE("tensor of operators acts factorwise") {
    const Operator a = pauli_x(2);
    const Operator b = pauli_z(3);
    const Ket u = Ket::basis({2}, 0);
    const Ket v = fourier_ket(3, 1);
    const Ket lhs = tensor({a, b}).apply(tensor({u, v}));
    const Ket rhs = tensor({a.apply(u), b.apply(v)});
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        CHECK(close(lhs[i], rhs[i]));
    }
    CHECK(tensor_power(hadamard(), 3).is_unitary());
    CHECK(tensor_power(hadamard(), 3).dim() == 8);
}

TEST_CASE("Hadamard conjugation swaps X and Z on a qubit") {
    const Operator h = hadamard();
    CHECK((h * pauli_z(2) * h).max_deviation(pauli_x(2)) < kTol);
}

TEST_CASE("plus state and normalization") {
    const Ket p = Ket::plus_state(4);
    CHECK(p.normalized());
    CHECK(p.all_qubits());
    CHECK(p.num_factors() == 4);
    const Ket twice = p.scaled(2.0);
    CHECK_FALSE(twice.normalized());
    CHECK(twice.normalize().normalized());
    CHECK_THROWS_AS((void)Ket::qubits(2, std::vector<cplx>(4)).normalize(), ArgumentError);
}

TEST_CASE("canonical phase makes the first nonzero amplitude real positive") {
    const Ket k(std::vector<cplx>{0.0, cplx(0, 0.6), cplx(0, -0.8)});
    const Ket c = canonical_phase(k);
    CHECK(close(c[1], 0.6));
    CHECK(close(c[2], -0.8));
    CHECK_THROWS_AS((void)canonical_phase(Ket(std::vector<cplx>{0.0, 0.0})), ArgumentError);
}

TEST_CASE("operator checks") {
    const Operator p = Operator::diagonal(std::vector<cplx>{1.0, 0.0});
    CHECK(p.is_projector());
    CHECK(p.is_hermitian());
    CHECK_FALSE(p.is_unitary());
    CHECK_FALSE(pauli_z(3).is_hermitian());
    CHECK(close(pauli_z(4).trace(), 0.0));
    CHECK(close(Operator::identity(5).trace(), 5.0));
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(pauli_x(1), DimensionError);
    CHECK_THROWS_AS(pauli_z(0), DimensionError);
    CHECK_THROWS_AS(fourier_ket(3, 3), IndexError);
    CHECK_THROWS_AS(Ket::basis({2, 2}, 4), IndexError);
    CHECK_THROWS_AS(Ket({2, 2}, std::vector<cplx>(3)), DimensionError);
    CHECK_THROWS_AS(tensor(std::span<const Ket>{}), ArgumentError);
    CHECK_THROWS_AS(inner(Ket::plus_state(2), Ket::plus_state(3)), DimensionError);
    CHECK_THROWS_AS(pauli_x(2) * pauli_x(3), DimensionError);
}

TEST_CASE("exact combinatorics") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(62, 31) == 465428353255261088ULL);
    CHECK(binomial(3, 5) == 0);
    CHECK_THROWS_AS(binomial(63, 1), ArgumentError);
    CHECK(residue_class_count(5, 3, 1) == 10);
    CHECK(to_string(Rational(6, 16)) == "3/8");
    CHECK(to_string(Rational(4)) == "4/1");
    // each residue class sums to 2^n
    for (unsigned n = 1; n <= 20; ++n) {
        for (unsigned d = 1; d <= n; ++d) {
            std::uint64_t total = 0;
            for (unsigned r = 0; r < d; ++r) {
                total += residue_class_count(n, d, r);
            }
            CHECK(total == (std::uint64_t{1} << n));
        }
    }
}
