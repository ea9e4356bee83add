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

// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include "qparity/kernels.hpp"

#include <immintrin.h>

namespace qparity::kernels::avx2 {
namespace {

// One __m256d holds two interleaved complex values [re0, im0, re1, im1].

inline __m256d load(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0x5); }

inline __m256d mul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(swap_re_im(a), b_im));
}

struct Broadcast {
    __m256d re;
    __m256d im;
    explicit Broadcast(cplx c)
        : re(_mm256_set1_pd(c.real())), im(_mm256_set1_pd(c.imag())) {}
};

inline __m256d mul(const Broadcast &alpha, __m256d x) {
    return _mm256_fmaddsub_pd(x, alpha.re, _mm256_mul_pd(swap_re_im(x), alpha.im));
}

inline cplx mul_scalar(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

struct LaneSums {
    double even;
    double odd;
};

inline LaneSums lane_sums(__m256d v) {
    alignas(32) double t[4];
    _mm256_store_pd(t, v);
    return {t[0] + t[2], t[1] + t[3]};
}

cplx dotc(const cplx *a, const cplx *b, std::size_t n) {
    __m256d direct = _mm256_setzero_pd();
    __m256d crossed = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        const __m256d vb = load(b + i);
        direct = _mm256_fmadd_pd(va, vb, direct);
        crossed = _mm256_fmadd_pd(va, swap_re_im(vb), crossed);
    }
    const LaneSums d = lane_sums(direct);
    const LaneSums c = lane_sums(crossed);
    double re = d.even + d.odd;
    double im = c.even - c.odd;
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotu(const cplx *a, const cplx *b, std::size_t n) {
    __m256d direct = _mm256_setzero_pd();
    __m256d crossed = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        const __m256d vb = load(b + i);
        direct = _mm256_fmadd_pd(va, vb, direct);
        crossed = _mm256_fmadd_pd(va, swap_re_im(vb), crossed);
    }
    const LaneSums d = lane_sums(direct);
    const LaneSums c = lane_sums(crossed);
    double re = d.even - d.odd;
    double im = c.even + c.odd;
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2(const cplx *a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    const LaneSums s = lane_sums(acc);
    double total = s.even + s.odd;
    for (; i < n; ++i) {
        total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return total;
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const Broadcast va(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store(y + i, _mm256_add_pd(load(y + i), mul(va, load(x + i))));
    }
    for (; i < n; ++i) {
        y[i] += mul_scalar(alpha, x[i]);
    }
}

void scale(cplx alpha, cplx *x, std::size_t n) {
    const Broadcast va(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store(x + i, mul(va, load(x + i)));
    }
    for (; i < n; ++i) {
        x[i] = mul_scalar(alpha, x[i]);
    }
}

void cmul(cplx *x, const cplx *p, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store(x + i, mul(load(x + i), load(p + i)));
    }
    for (; i < n; ++i) {
        x[i] = mul_scalar(x[i], p[i]);
    }
}

void butterfly(cplx *a, cplx *b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        const __m256d vb = load(b + i);
        store(a + i, _mm256_add_pd(va, vb));
        store(b + i, _mm256_sub_pd(va, vb));
    }
    for (; i < n; ++i) {
        const cplx s = a[i] + b[i];
        const cplx t = a[i] - b[i];
        a[i] = s;
        b[i] = t;
    }
}

void apply2x2(const cplx *g, cplx *a, cplx *b, std::size_t n) {
    const Broadcast g00(g[0]);
    const Broadcast g01(g[1]);
    const Broadcast g10(g[2]);
    const Broadcast g11(g[3]);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        const __m256d vb = load(b + i);
        store(a + i, _mm256_add_pd(mul(g00, va), mul(g01, vb)));
        store(b + i, _mm256_add_pd(mul(g10, va), mul(g11, vb)));
    }
    for (; i < n; ++i) {
        const cplx x = a[i];
        const cplx y = b[i];
        a[i] = mul_scalar(g[0], x) + mul_scalar(g[1], y);
        b[i] = mul_scalar(g[2], x) + mul_scalar(g[3], y);
    }
}

} // namespace

const KernelTable &table() {
    static constexpr KernelTable t{
        "avx2", dotc, dotu, norm2, axpy, scale, cmul, butterfly, apply2x2,
    };
    return t;
}

} // namespace qparity::kernels::avx2
