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
 * Complex-double inner-loop kernels used by the state-vector code.
 *
 * Every kernel has a scalar reference implementation. An AVX2/FMA variant is
 * compiled into a separate translation unit and selected at runtime when the
 * CPU supports it. The environment variable QPARITY_KERNELS=scalar|avx2
 * forces a particular table.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qparity::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;

    /// sum_i conj(a_i) * b_i
    cplx (*dotc)(const cplx *a, const cplx *b, std::size_t n);
    /// sum_i a_i * b_i
    cplx (*dotu)(const cplx *a, const cplx *b, std::size_t n);
    /// sum_i |a_i|^2
    double (*norm2)(const cplx *a, std::size_t n);
    /// y_i += alpha * x_i
    void (*axpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
    /// x_i *= alpha
    void (*scale)(cplx alpha, cplx *x, std::size_t n);
    /// x_i *= p_i
    void (*cmul)(cplx *x, const cplx *p, std::size_t n);
    /// (a_i, b_i) <- (a_i + b_i, a_i - b_i)
    void (*butterfly)(cplx *a, cplx *b, std::size_t n);
    /// (a_i, b_i) <- (g00 a_i + g01 b_i, g10 a_i + g11 b_i), g row-major 2x2
    void (*apply2x2)(const cplx *g, cplx *a, cplx *b, std::size_t n);
};

const KernelTable &scalar_table();

/// AVX2/FMA table, or nullptr if it was not compiled in or the CPU lacks
/// the instructions.
const KernelTable *avx2_table();

/// Table chosen once at first use.
const KernelTable &active();

// Span front ends over the active table.

inline cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    return active().dotc(a.data(), b.data(), a.size());
}
inline cplx dotu(std::span<const cplx> a, std::span<const cplx> b) {
    return active().dotu(a.data(), b.data(), a.size());
}
inline double norm2(std::span<const cplx> a) {
    return active().norm2(a.data(), a.size());
}
inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void scale(cplx alpha, std::span<cplx> x) {
    active().scale(alpha, x.data(), x.size());
}
inline void cmul(std::span<cplx> x, std::span<const cplx> p) {
    active().cmul(x.data(), p.data(), x.size());
}
inline void butterfly(std::span<cplx> a, std::span<cplx> b) {
    active().butterfly(a.data(), b.data(), a.size());
}
inline void apply2x2(const cplx (&g)[4], std::span<cplx> a, std::span<cplx> b) {
    active().apply2x2(g, a.data(), b.data(), a.size());
}

} // namespace qparity::kernels
