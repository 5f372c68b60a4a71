// Copyright 2026 The lindsim Authors
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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "lindsim/error.hpp"
#include "lindsim/numerics/kernels.hpp"

namespace lindsim::kernels {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::kScalar:
        return "scalar";
    case Isa::kAvx2:
        return "avx2";
    }
    return "unknown";
}

bool cpu_supports_avx2() noexcept {
#if defined(LINDSIM_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable *avx2_table() noexcept {
#if defined(LINDSIM_HAVE_AVX2)
    if (cpu_supports_avx2()) {
        return &detail::avx2_table_unchecked();
    }
#endif
    return nullptr;
}

namespace {

const KernelTable *initial_table() noexcept {
    const char *env = std::getenv("LINDSIM_ISA");
    if (env != nullptr && std::string_view(env) == "scalar") {
        return &scalar_table();
    }
    if (const KernelTable *t = avx2_table()) {
        return t;
    }
    return &scalar_table();
}

std::atomic<const KernelTable *> &current() noexcept {
    static std::atomic<const KernelTable *> table{initial_table()};
    return table;
}

} // namespace

const KernelTable &active() noexcept {
    return *current().load(std::memory_order_relaxed);
}

void set_active(Isa isa) {
    switch (isa) {
    case Isa::kScalar:
        current().store(&scalar_table());
        return;
    case Isa::kAvx2:
        if (const KernelTable *t = avx2_table()) {
            current().store(t);
            return;
        }
        throw DomainError("avx2 kernels are not available on this machine");
    }
}

} // namespace lindsim::kernels
