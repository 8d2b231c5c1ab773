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

#include <cstdlib>
#include <string_view>

#include "jcd/simd.hpp"

namespace jcd::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, "scalar", detail::dotc_scalar, detail::axpy_scalar,
                              detail::sqnorm_scalar, detail::sqdist_scalar};

#if defined(JCD_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, "avx2", detail::dotc_avx2, detail::axpy_avx2,
                            detail::sqnorm_avx2, detail::sqdist_avx2};

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable &select() {
    if (const char *env = std::getenv("JCD_SIMD"); env && std::string_view(env) == "scalar")
        return kScalar;
#if defined(JCD_HAVE_AVX2)
    if (cpu_has_avx2())
        return kAvx2;
#endif
    return kScalar;
}

} // namespace

const KernelTable &active() {
    static const KernelTable &table = select();
    return table;
}

const KernelTable *table_for(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return &kScalar;
    case Isa::Avx2:
#if defined(JCD_HAVE_AVX2)
        return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
        return nullptr;
#endif
    }
    return nullptr;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    if (table_for(Isa::Avx2) != nullptr)
        out.push_back(Isa::Avx2);
    return out;
}

} // namespace jcd::simd
