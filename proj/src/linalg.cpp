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

#include "qparity/linalg.hpp"

#include "qparity/error.hpp"
#include "qparity/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace qparity {

cplx root_of_unity(std::size_t d, long long k) {
    const auto dd = static_cast<long long>(d);
    const long long r = ((k % dd) + dd) % dd;
    if (r == 0) {
        return {1.0, 0.0};
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(d));
}

namespace basis_index {

std::vector<std::size_t> to_digits(std::size_t value, std::span<const std::size_t> dims) {
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        digits[i] = value % dims[i];
        value /= dims[i];
    }
    if (value != 0) {
        throw IndexError("basis index exceeds product of factor dimensions");
    }
    return digits;
}

std::size_t from_digits(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
    if (digits.size() != dims.size()) {
        throw DimensionError("digit count does not match factor count");
    }
    std::size_t value = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (digits[i] >= dims[i]) {
            throw IndexError("digit out of range for its factor");
        }
        value = value * dims[i] + digits[i];
    }
    return value;
}

} // namespace basis_index

namespace {

std::size_t product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

} // namespace

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(std::vector<std::size_t> factor_dims, std::vector<cplx> amps)
    : dims_(std::move(factor_dims)), amps_(std::move(amps)) {
    if (dims_.empty()) {
        throw DimensionError("ket needs at least one factor");
    }
    if (std::any_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; })) {
        throw DimensionError("factor dimensions must be positive");
    }
    if (product(dims_) != amps_.size()) {
        throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                             " does not match factor dimensions");
    }
}

Ket::Ket(std::vector<cplx> amps) : dims_{amps.size()}, amps_(std::move(amps)) {
    if (amps_.empty()) {
        throw DimensionError("factor dimensions must be positive");
    }
}

Ket Ket::basis(std::vector<std::size_t> factor_dims, std::size_t index) {
    const std::size_t dim = product(factor_dims);
    if (index >= dim) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<cplx> amps(dim);
    amps[index] = 1.0;
    return Ket(std::move(factor_dims), std::move(amps));
}

Ket Ket::qubits(std::size_t n, std::vector<cplx> amps) {
    return Ket(std::vector<std::size_t>(n, 2), std::move(amps));
}

Ket Ket::plus_state(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    return qubits(n, std::vector<cplx>(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)))));
}

bool Ket::all_qubits() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 2; });
}

double Ket::norm_squared() const { return kernels::norm2(amps_); }

double Ket::norm() const { return std::sqrt(norm_squared()); }

bool Ket::normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

Ket Ket::normalize() const {
    const double n = norm();
    if (n == 0.0) {
        throw ArgumentError("cannot normalize the zero vector");
    }
    return scaled(1.0 / n);
}

Ket Ket::scaled(cplx factor) const {
    std::vector<cplx> amps = amps_;
    kernels::scale(factor, amps);
    return Ket(dims_, std::move(amps));
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) {
        throw DimensionError("operator dimension must be positive");
    }
    if (entries_.size() != dim_ * dim_) {
        throw DimensionError("operator needs dim*dim entries");
    }
}

Operator Operator::identity(std::size_t dim) {
    std::vector<cplx> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return Operator(dim, std::move(e));
}

Operator Operator::zero(std::size_t dim) { return Operator(dim, std::vector<cplx>(dim * dim)); }

Operator Operator::diagonal(std::span<const cplx> diag) {
    const std::size_t dim = diag.size();
    std::vector<cplx> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = diag[i];
    }
    return Operator(dim, std::move(e));
}

Operator Operator::adjoint() const {
    std::vector<cplx> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return Operator(dim_, std::move(e));
}

Operator Operator::scaled(cplx factor) const {
    std::vector<cplx> e = entries_;
    kernels::scale(factor, e);
    return Operator(dim_, std::move(e));
}

Operator Operator::pow(std::size_t exponent) const {
    Operator result = identity(dim_);
    Operator base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

cplx Operator::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += entries_[i * dim_ + i];
    }
    return t;
}

Ket Operator::apply(const Ket &k) const {
    if (k.dim() != dim_) {
        throw DimensionError("operator/ket dimension mismatch");
    }
    std::vector<cplx> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        out[r] = kernels::dotu(row(r), k.amps());
    }
    return Ket(std::vector<std::size_t>(k.factor_dims().begin(), k.factor_dims().end()),
               std::move(out));
}

double Operator::max_deviation(const Operator &other) const {
    if (other.dim_ != dim_) {
        throw DimensionError("operator dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

bool Operator::is_unitary(double tol) const {
    return (adjoint() * *this).max_deviation(identity(dim_)) <= tol;
}

bool Operator::is_hermitian(double tol) const { return adjoint().max_deviation(*this) <= tol; }

bool Operator::is_projector(double tol) const {
    return is_hermitian(tol) && (*this * *this).max_deviation(*this) <= tol;
}

Operator operator*(const Operator &a, const Operator &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("operator dimension mismatch");
    }
    const std::size_t n = a.dim_;
    std::vector<cplx> c(n * n);
    std::span<cplx> out(c);
    for (std::size_t i = 0; i < n; ++i) {
        std::span<cplx> out_row = out.subspan(i * n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a.entries_[i * n + k];
            if (aik == cplx(0.0)) {
                continue;
            }
            kernels::axpy(aik, b.row(k), out_row);
        }
    }
    return Operator(n, std::move(c));
}

Operator operator+(const Operator &a, const Operator &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("operator dimension mismatch");
    }
    std::vector<cplx> e = a.entries_;
    kernels::axpy(1.0, b.entries_, e);
    return Operator(a.dim_, std::move(e));
}

Operator operator-(const Operator &a, const Operator &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("operator dimension mismatch");
    }
    std::vector<cplx> e = a.entries_;
    kernels::axpy(-1.0, b.entries_, e);
    return Operator(a.dim_, std::move(e));
}

// ---------------------------------------------------------------------------
// Generalized Pauli family

Operator pauli_x(std::size_t d) {
    if (d < 2) {
        throw DimensionError("qudit dimension must be at least 2");
    }
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        e[((i + 1) % d) * d + i] = 1.0;
    }
    return Operator(d, std::move(e));
}

Operator pauli_z(std::size_t d) {
    if (d < 2) {
        throw DimensionError("qudit dimension must be at least 2");
    }
    std::vector<cplx> diag(d);
    for (std::size_t i = 0; i < d; ++i) {
        diag[i] = root_of_unity(d, static_cast<long long>(i));
    }
    return Operator::diagonal(diag);
}

Operator hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return Operator(2, {h, h, h, -h});
}

Ket fourier_ket(std::size_t d, std::size_t k) {
    if (d < 1) {
        throw DimensionError("dimension must be positive");
    }
    if (k >= d) {
        throw IndexError("Fourier index " + std::to_string(k) + " out of range for d=" +
                         std::to_string(d));
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<cplx> amps(d);
    for (std::size_t j = 0; j < d; ++j) {
        amps[j] = norm * root_of_unity(d, -static_cast<long long>(k * j));
    }
    return Ket(std::move(amps));
}

// ---------------------------------------------------------------------------
// Tensor products

Ket tensor(std::span<const Ket> factors) {
    if (factors.empty()) {
        throw ArgumentError("tensor of an empty list");
    }
    std::vector<std::size_t> dims;
    std::vector<cplx> amps{1.0};
    for (const Ket &f : factors) {
        dims.insert(dims.end(), f.factor_dims().begin(), f.factor_dims().end());
        std::vector<cplx> next(amps.size() * f.dim());
        for (std::size_t i = 0; i < amps.size(); ++i) {
            std::span<cplx> block(next.data() + i * f.dim(), f.dim());
            kernels::axpy(amps[i], f.amps(), block);
        }
        amps = std::move(next);
    }
    return Ket(std::move(dims), std::move(amps));
}

Ket tensor(std::initializer_list<Ket> factors) {
    return tensor(std::span<const Ket>(factors.begin(), factors.size()));
}

Operator tensor(std::span<const Operator> factors) {
    if (factors.empty()) {
        throw ArgumentError("tensor of an empty list");
    }
    Operator acc = factors.front();
    for (std::size_t f = 1; f < factors.size(); ++f) {
        const Operator &b = factors[f];
        const std::size_t na = acc.dim();
        const std::size_t nb = b.dim();
        const std::size_t n = na * nb;
        std::vector<cplx> e(n * n);
        for (std::size_t ar = 0; ar < na; ++ar) {
            for (std::size_t ac = 0; ac < na; ++ac) {
                const cplx x = acc(ar, ac);
                if (x == cplx(0.0)) {
                    continue;
                }
                for (std::size_t br = 0; br < nb; ++br) {
                    std::span<cplx> dst(e.data() + (ar * nb + br) * n + ac * nb, nb);
                    kernels::axpy(x, b.row(br), dst);
                }
            }
        }
        acc = Operator(n, std::move(e));
    }
    return acc;
}

Operator tensor(std::initializer_list<Operator> factors) {
    return tensor(std::span<const Operator>(factors.begin(), factors.size()));
}

Operator tensor_power(const Operator &op, std::size_t count) {
    if (count == 0) {
        throw ArgumentError("tensor power needs at least one factor");
    }
    return tensor(std::vector<Operator>(count, op));
}

// ---------------------------------------------------------------------------

cplx inner(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product of kets with different dimensions");
    }
    return kernels::dotc(a.amps(), b.amps());
}

double fidelity(const Ket &a, const Ket &b) {
    const double na = a.norm_squared();
    const double nb = b.norm_squared();
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return std::norm(inner(a, b)) / (na * nb);
}

Ket canonical_phase(const Ket &k, double tol) {
    if (k.norm() <= tol) {
        throw ArgumentError("canonical phase of a zero vector");
    }
    for (const cplx a : k.amps()) {
        const double m = std::abs(a);
        if (m > tol) {
            return k.scaled(std::conj(a) / m);
        }
    }
    // Norm exceeds tol but every entry is at or below it.
    return k;
}

} // namespace qparity
