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
#pragma once

// Inner-loop kernels over contiguous complex arrays.
//
// Every kernel has a portable scalar reference implementation and, where the
// build targets x86-64, an AVX2/FMA variant. The variant is chosen once at
// first use from CPUID; setting JCD_SIMD=scalar in the environment forces the
// reference path. Variants agree with the reference up to summation order.

#include <cassert>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "jcd/types.hpp"

namespace jcd::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;
    /// sum_k conj(a[k]) * b[k]
    cplx (*dotc)(const cplx *a, const cplx *b, std::size_t n);
    /// y[k] += alpha * x[k]
    void (*axpy)(double alpha, const cplx *x, cplx *y, std::size_t n);
    /// sum_k |a[k]|^2
    double (*sqnorm)(const cplx *a, std::size_t n);
    /// sum_k |a[k] - b[k]|^2
    double (*sqdist)(const cplx *a, const cplx *b, std::size_t n);
};

/// Kernel table selected for this process.
const KernelTable &active();

/// Table for a specific ISA, or nullptr when the CPU or build lacks it.
const KernelTable *table_for(Isa isa);

/// All ISAs usable on this machine, scalar first.
std::vector<Isa> available_isas();

inline cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    assert(a.size() == b.size());
    return active().dotc(a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const cplx> x, std::span<cplx> y) {
    assert(x.size() == y.size());
    active().axpy(alpha, x.data(), y.data(), x.size());
}

inline double sqnorm(std::span<const cplx> a) { return active().sqnorm(a.data(), a.size()); }

inline double sqdist(std::span<const cplx> a, std::span<const cplx> b) {
    assert(a.size() == b.size());
    return active().sqdist(a.data(), b.data(), a.size());
}

/// Views of a dense Eigen matrix as a flat array.
inline std::span<const cplx> flat(const CMatrix &m) {
    return {m.data(), static_cast<std::size_t>(m.size())};
}
inline std::span<cplx> flat(CMatrix &m) { return {m.data(), static_cast<std::size_t>(m.size())}; }

namespace detail {
cplx dotc_scalar(const cplx *a, const cplx *b, std::size_t n);
void axpy_scalar(double alpha, const cplx *x, cplx *y, std::size_t n);
double sqnorm_scalar(const cplx *a, std::size_t n);
double sqdist_scalar(const cplx *a, const cplx *b, std::size_t n);

#if defined(JCD_HAVE_AVX2)
cplx dotc_avx2(const cplx *a, const cplx *b, std::size_t n);
void axpy_avx2(double alpha, const cplx *x, cplx *y, std::size_t n);
double sqnorm_avx2(const cplx *a, std::size_t n);
double sqdist_avx2(const cplx *a, const cplx *b, std::size_t n);
#endif
} // namespace detail

} // namespace jcd::simd
