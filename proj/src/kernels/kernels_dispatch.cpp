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

#include <cstdlib>
#include <string_view>

namespace qparity::kernels {

#if defined(QPARITY_HAVE_AVX2)
namespace avx2 {
const KernelTable &table();
}
#endif

namespace {

bool cpu_has_avx2_fma() {
#if defined(QPARITY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &select_table() {
    const KernelTable *simd = avx2_table();
    if (const char *forced = std::getenv("QPARITY_KERNELS")) {
        const std::string_view name(forced);
        if (name == "scalar") {
            return scalar_table();
        }
        if (name == "avx2" && simd != nullptr) {
            return *simd;
        }
    }
    return simd != nullptr ? *simd : scalar_table();
}

} // namespace

const KernelTable *avx2_table() {
#if defined(QPARITY_HAVE_AVX2)
    static const bool supported = cpu_has_avx2_fma();
    return supported ? &avx2::table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    static const KernelTable &table = select_table();
    return table;
}

} // namespace qparity::kernels
