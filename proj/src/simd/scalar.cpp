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

// Reference kernels. Written on the real/imaginary parts directly so the
// arithmetic is exactly what the vector variants do lane by lane.

#include "jcd/simd.hpp"

namespace jcd::simd::detail {

cplx dotc_scalar(const cplx *a, const cplx *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void axpy_scalar(double alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        y[k] = {y[k].real() + alpha * x[k].real(), y[k].imag() + alpha * x[k].imag()};
}

double sqnorm_scalar(const cplx *a, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        s += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    return s;
}

double sqdist_scalar(const cplx *a, const cplx *b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dr = a[k].real() - b[k].real();
        const double di = a[k].imag() - b[k].imag();
        s += dr * dr + di * di;
    }
    return s;
}

} // namespace jcd::simd::detail
