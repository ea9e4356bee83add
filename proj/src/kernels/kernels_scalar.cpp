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

#include "qparity/kernels.hpp"

namespace qparity::kernels {
namespace {

// Products are spelled out so the reference path never goes through the
// C99 Annex G __muldc3 helper.
inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

cplx dotc(const cplx *a, const cplx *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotu(const cplx *a, const cplx *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2(const cplx *a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += mul(alpha, x[i]);
    }
}

void scale(cplx alpha, cplx *x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = mul(alpha, x[i]);
    }
}

void cmul(cplx *x, const cplx *p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = mul(x[i], p[i]);
    }
}

void butterfly(cplx *a, cplx *b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx s = a[i] + b[i];
        const cplx t = a[i] - b[i];
        a[i] = s;
        b[i] = t;
    }
}

void apply2x2(const cplx *g, cplx *a, cplx *b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx x = a[i];
        const cplx y = b[i];
        a[i] = mul(g[0], x) + mul(g[1], y);
        b[i] = mul(g[2], x) + mul(g[3], y);
    }
}

} // namespace

const KernelTable &scalar_table() {
    static constexpr KernelTable table{
        "scalar", dotc, dotu, norm2, axpy, scale, cmul, butterfly, apply2x2,
    };
    return table;
}

} // namespace qparity::kernels
