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

#include "lindsim/numerics/kernels.hpp"

namespace lindsim::kernels {
namespace {

// Written on the real/imaginary parts so the compiler does not route through
// the Annex G special-case multiply.

void axpy_scalar(std::size_t n, Complex a, const Complex *x, Complex *y) {
    const double ar = a.real();
    const double ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        y[i] = Complex(y[i].real() + ar * xr - ai * xi,
                       y[i].imag() + ar * xi + ai * xr);
    }
}

Complex dotc_scalar(std::size_t n, const Complex *x, const Complex *y) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

Complex dotu_scalar(std::size_t n, const Complex *x, const Complex *y) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
    }
    return {re, im};
}

double norm2_scalar(std::size_t n, const Complex *x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

void scale_scalar(std::size_t n, Complex a, Complex *x) {
    const double ar = a.real();
    const double ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        x[i] = Complex(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

constexpr KernelTable kScalarTable{Isa::kScalar, axpy_scalar, dotc_scalar,
                                   dotu_scalar, norm2_scalar, scale_scalar};

} // namespace

const KernelTable &scalar_table() noexcept { return kScalarTable; }

} // namespace lindsim::kernels
