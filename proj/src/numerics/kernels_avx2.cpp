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

// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include "lindsim/numerics/kernels.hpp"

namespace lindsim::kernels {
namespace {

// A __m256d holds two complex numbers laid out as [re0, im0, re1, im1].

inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}
inline void store2(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// a * x for packed complex x and broadcast a.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, swap_re_im(x)));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(std::size_t n, Complex a, const Complex *x, Complex *y) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(y + i,
               _mm256_add_pd(load2(y + i), cmul_broadcast(ar, ai, load2(x + i))));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        y[i] = Complex(y[i].real() + a.real() * xr - a.imag() * xi,
                       y[i].imag() + a.real() * xi + a.imag() * xr);
    }
}

// Accumulates x*y lanewise in `direct` and x*swap(y) in `crossed`:
//   direct  = [xr*yr, xi*yi, ...]   crossed = [xr*yi, xi*yr, ...]
void dot_accumulate(std::size_t n, const Complex *x, const Complex *y,
                    double &rr, double &ii, double &ri, double &ir) {
    __m256d direct = _mm256_setzero_pd();
    __m256d crossed = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        direct = _mm256_fmadd_pd(xv, yv, direct);
        crossed = _mm256_fmadd_pd(xv, swap_re_im(yv), crossed);
    }
    alignas(32) double d[4];
    alignas(32) double c[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(c, crossed);
    rr = d[0] + d[2];
    ii = d[1] + d[3];
    ri = c[0] + c[2];
    ir = c[1] + c[3];
    for (; i < n; ++i) {
        rr += x[i].real() * y[i].real();
        ii += x[i].imag() * y[i].imag();
        ri += x[i].real() * y[i].imag();
        ir += x[i].imag() * y[i].real();
    }
}

Complex dotc_avx2(std::size_t n, const Complex *x, const Complex *y) {
    double rr, ii, ri, ir;
    dot_accumulate(n, x, y, rr, ii, ri, ir);
    return {rr + ii, ri - ir};
}

Complex dotu_avx2(std::size_t n, const Complex *x, const Complex *y) {
    double rr, ii, ri, ir;
    dot_accumulate(n, x, y, rr, ii, ri, ir);
    return {rr - ii, ri + ir};
}

double norm2_avx2(std::size_t n, const Complex *x) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double out = hsum(acc);
    for (; i < n; ++i) {
        out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return out;
}

void scale_avx2(std::size_t n, Complex a, Complex *x) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(x + i, cmul_broadcast(ar, ai, load2(x + i)));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        x[i] = Complex(a.real() * xr - a.imag() * xi,
                       a.real() * xi + a.imag() * xr);
    }
}

constexpr KernelTable kAvx2Table{Isa::kAvx2, axpy_avx2, dotc_avx2,
                                 dotu_avx2, norm2_avx2, scale_avx2};

} // namespace

namespace detail {
const KernelTable &avx2_table_unchecked() noexcept { return kAvx2Table; }
} // namespace detail

} // namespace lindsim::kernels
