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
 * Dense kets and operators over small tensor-product Hilbert spaces, plus the
 * clock/shift (generalized Pauli) family and the discrete Fourier basis.
 *
 * Index convention: the leftmost tensor factor is the most significant
 * mixed-radix digit. In a joint qubit/ancilla space the qubits come first
 * (qubit 1 leftmost) and the ancilla is the last factor.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <vector>

namespace qparity {

using cplx = std::complex<double>;

/// Max-entry tolerance for unitarity/projector checks.
inline constexpr double kOperatorTol = 1e-10;
/// Tolerance on |<k|k> - 1| for a ket to count as normalized.
inline constexpr double kNormTol = 1e-12;
/// States are equal when their fidelity is at least 1 - kFidelityTol.
inline constexpr double kFidelityTol = 1e-10;

/// omega_d^k = exp(2 pi i k / d), with k reduced mod d first.
cplx root_of_unity(std::size_t d, long long k);

/// Mixed-radix basis labels over a list of factor dimensions.
namespace basis_index {

std::vector<std::size_t> to_digits(std::size_t value, std::span<const std::size_t> dims);
std::size_t from_digits(std::span<const std::size_t> digits, std::span<const std::size_t> dims);

} // namespace basis_index

class Ket {
  public:
    /// Throws DimensionError unless amps.size() equals the product of factor_dims.
    Ket(std::vector<std::size_t> factor_dims, std::vector<cplx> amps);

    /// Single factor of dimension amps.size().
    explicit Ket(std::vector<cplx> amps);

    static Ket basis(std::vector<std::size_t> factor_dims, std::size_t index);
    /// n qubits, amplitudes length 2^n.
    static Ket qubits(std::size_t n, std::vector<cplx> amps);
    /// |+>^n
    static Ket plus_state(std::size_t n);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const std::size_t> factor_dims() const noexcept { return dims_; }
    [[nodiscard]] std::span<const cplx> amps() const noexcept { return amps_; }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] std::size_t num_factors() const noexcept { return dims_.size(); }
    [[nodiscard]] bool all_qubits() const noexcept;

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] double norm() const;
    [[nodiscard]] bool normalized(double tol = kNormTol) const;

    /// Throws ArgumentError on a zero vector.
    [[nodiscard]] Ket normalize() const;
    [[nodiscard]] Ket scaled(cplx factor) const;

    friend bool operator==(const Ket &, const Ket &) = default;

  private:
    std::vector<std::size_t> dims_;
    std::vector<cplx> amps_;
};

/// Dense square complex matrix, row-major.
class Operator {
  public:
    Operator(std::size_t dim, std::vector<cplx> entries);

    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t dim);
    static Operator diagonal(std::span<const cplx> diag);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] cplx operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const cplx> entries() const noexcept { return entries_; }
    [[nodiscard]] std::span<const cplx> row(std::size_t r) const {
        return std::span<const cplx>(entries_).subspan(r * dim_, dim_);
    }

    [[nodiscard]] Operator adjoint() const;
    [[nodiscard]] Operator scaled(cplx factor) const;
    [[nodiscard]] Operator pow(std::size_t exponent) const;
    [[nodiscard]] cplx trace() const;

    /// Keeps the ket's factor structure.
    [[nodiscard]] Ket apply(const Ket &k) const;

    /// max_ij |A_ij - B_ij|
    [[nodiscard]] double max_deviation(const Operator &other) const;

    [[nodiscard]] bool is_unitary(double tol = kOperatorTol) const;
    [[nodiscard]] bool is_hermitian(double tol = kOperatorTol) const;
    [[nodiscard]] bool is_projector(double tol = kOperatorTol) const;

    friend Operator operator*(const Operator &a, const Operator &b);
    friend Operator operator+(const Operator &a, const Operator &b);
    friend Operator operator-(const Operator &a, const Operator &b);
    friend bool operator==(const Operator &, const Operator &) = default;

  private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

/// Cyclic shift X_d|i> = |i+1 mod d>. Throws DimensionError for d < 2.
Operator pauli_x(std::size_t d);
/// Clock Z_d = diag(1, w, ..., w^{d-1}), w = exp(2 pi i / d).
Operator pauli_z(std::size_t d);
Operator hadamard();

/// |u_k> = d^{-1/2} sum_j w^{-kj} |j>. Throws IndexError unless k < d.
Ket fourier_ket(std::size_t d, std::size_t k);

/// Kronecker products, left to right. Empty input throws ArgumentError.
Ket tensor(std::span<const Ket> factors);
Ket tensor(std::initializer_list<Ket> factors);
Operator tensor(std::span<const Operator> factors);
Operator tensor(std::initializer_list<Operator> factors);
/// op^{(x) count}
Operator tensor_power(const Operator &op, std::size_t count);

/// <a|b>, conjugate-linear in a.
cplx inner(const Ket &a, const Ket &b);
/// |<a|b>|^2 / (<a|a><b|b>)
double fidelity(const Ket &a, const Ket &b);

/// Rotates the global phase so the first amplitude with modulus > tol is
/// real and positive. Throws ArgumentError when norm <= tol.
Ket canonical_phase(const Ket &k, double tol = 1e-12);

} // namespace qparity
