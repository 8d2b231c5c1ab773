// Copyright 2026 The jcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2/FMA kernels. Compiled with per-function target attributes so the rest
// of the library keeps the baseline ISA; only called after a CPUID check.

#include "jcd/simd.hpp"

#if defined(JCD_HAVE_AVX2)

#include <immintrin.h>

#define JCD_AVX2 __attribute__((target("avx2,fma")))

namespace jcd::simd::detail {

namespace {

JCD_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (even lanes) - (odd lanes)
JCD_AVX2 inline double hsub_alternating(__m256d v) {
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    return hsum(_mm256_mul_pd(v, sign));
}

} // namespace

// Each 256-bit register holds two complex numbers [re0, im0, re1, im1].
JCD_AVX2 cplx dotc_avx2(const cplx *a, const cplx *b, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    __m256d same0 = _mm256_setzero_pd(), same1 = _mm256_setzero_pd();
    __m256d swap0 = _mm256_setzero_pd(), swap1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
        const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
        const __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
        const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
        same0 = _mm256_fmadd_pd(va0, vb0, same0);
        same1 = _mm256_fmadd_pd(va1, vb1, same1);
        swap0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), swap0);
        swap1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), swap1);
    }
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * k);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
        same0 = _mm256_fmadd_pd(va, vb, same0);
        swap0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), swap0);
    }
    // same: [ar*br, ai*bi, ...] -> real part; swap: [ar*bi, ai*br, ...] -> imag
    double re = hsum(_mm256_add_pd(same0, same1));
    double im = hsub_alternating(_mm256_add_pd(swap0, swap1));
    for (; k < n; ++k) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, im};
}

JCD_AVX2 void axpy_avx2(double alpha, const cplx *x, cplx *y, std::size_t n) {
    const double *px = reinterpret_cast<const double *>(x);
    double *py = reinterpret_cast<double *>(y);
    const std::size_t len = 2 * n;
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        const __m256d vy = _mm256_loadu_pd(py + k);
        _mm256_storeu_pd(py + k, _mm256_fmadd_pd(va, _mm256_loadu_pd(px + k), vy));
    }
    for (; k < len; ++k)
        py[k] += alpha * px[k];
}

JCD_AVX2 double sqnorm_avx2(const cplx *a, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= len; k += 8) {
        const __m256d v0 = _mm256_loadu_pd(pa + k);
        const __m256d v1 = _mm256_loadu_pd(pa + k + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < len; ++k)
        s += pa[k] * pa[k];
    return s;
}

JCD_AVX2 double sqdist_avx2(const cplx *a, const cplx *b, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= len; k += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(pa + k), _mm256_loadu_pd(pb + k));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(pa + k + 4), _mm256_loadu_pd(pb + k + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < len; ++k) {
        const double d = pa[k] - pb[k];
        s += d * d;
    }
    return s;
}

} // namespace jcd::simd::detail

#endif // JCD_HAVE_AVX2
