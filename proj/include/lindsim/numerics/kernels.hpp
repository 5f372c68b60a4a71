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

/**
 * @file
 * Complex BLAS-1 style inner loops. Every kernel has a portable scalar
 * reference implementation and, on x86-64, an AVX2/FMA variant. The
 * variant is picked once at startup from CPUID; `LINDSIM_ISA=scalar`
 * in the environment forces the reference path.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace lindsim::kernels {

using Complex = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;
    /// y += a * x
    void (*axpy)(std::size_t n, Complex a, const Complex *x, Complex *y);
    /// sum conj(x_i) * y_i
    Complex (*dotc)(std::size_t n, const Complex *x, const Complex *y);
    /// sum x_i * y_i
    Complex (*dotu)(std::size_t n, const Complex *x, const Complex *y);
    /// sum |x_i|^2
    double (*norm2)(std::size_t n, const Complex *x);
    /// x *= a
    void (*scale)(std::size_t n, Complex a, Complex *x);
};

const KernelTable &scalar_table() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable *avx2_table() noexcept;

/// Best table supported by this machine, honoring LINDSIM_ISA.
const KernelTable &active() noexcept;

/// Switches the process-wide table. Throws DomainError if unavailable.
void set_active(Isa isa);

bool cpu_supports_avx2() noexcept;

// Convenience wrappers over the active table.
inline void axpy(std::size_t n, Complex a, const Complex *x, Complex *y) {
    active().axpy(n, a, x, y);
}
inline Complex dotc(std::size_t n, const Complex *x, const Complex *y) {
    return active().dotc(n, x, y);
}
inline Complex dotu(std::size_t n, const Complex *x, const Complex *y) {
    return active().dotu(n, x, y);
}
inline double norm2(std::size_t n, const Complex *x) {
    return active().norm2(n, x);
}
inline void scale(std::size_t n, Complex a, Complex *x) {
    active().scale(n, a, x);
}

namespace detail {
const KernelTable &avx2_table_unchecked() noexcept;
} // namespace detail

} // namespace lindsim::kernels
