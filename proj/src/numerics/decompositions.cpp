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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lindsim/error.hpp"
#include "lindsim/numerics/kernels.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

namespace {

constexpr int kMaxSweeps = 100;

struct Rotation {
    double c;
    double s;
};

// Smaller-angle Jacobi rotation annihilating a 2x2 real symmetric block with
// off-diagonal g > 0 and diagonal difference (hi - lo).
Rotation jacobi_rotation(double lo, double hi, double g) {
    const double tau = (hi - lo) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c};
}

double off_diagonal_norm2(const ComplexMatrix &a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                acc += std::norm(a(i, j));
            }
        }
    }
    return acc;
}

} // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw DimensionError("hermitian_eigen: matrix is not square");
    }
    const std::size_t n = m.rows();
    ComplexMatrix a = m + m.adjoint();
    a *= 0.5;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double target = 1e-30 * scale * scale;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm2(a) <= target) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-300 || g <= 1e-18 * scale) {
                    continue;
                }
                const Complex e = apq / g;
                const Complex ec = std::conj(e);
                const auto [c, s] =
                    jacobi_rotation(a(p, p).real(), a(q, q).real(), g);
                // Columns: A <- A V with V = diag(1, conj(e)) * rotation.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q) * ec;
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q) * ec;
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
                // Rows: A <- V^dagger A.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k) * e;
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    // Orthogonalize the shorter dimension's vectors; they are rows here.
    ComplexMatrix r = m.rows() > m.cols() ? m.adjoint() : m;
    const std::size_t n = r.rows();
    const std::size_t len = r.cols();
    const auto &k = kernels::active();
    std::vector<Complex> tmp(len);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Complex *rp = r.row(p).data();
                Complex *rq = r.row(q).data();
                const double alpha = k.norm2(len, rp);
                const double beta = k.norm2(len, rq);
                const Complex gamma = k.dotc(len, rp, rq);
                const double g = std::abs(gamma);
                if (g <= 1e-15 * std::sqrt(alpha * beta) || g <= 1e-300) {
                    continue;
                }
                rotated = true;
                const Complex ec = std::conj(gamma / g);
                const auto [c, s] = jacobi_rotation(alpha, beta, g);
                std::copy(rp, rp + len, tmp.begin());
                k.scale(len, c, rp);
                k.axpy(len, -s * ec, rq, rp);
                k.scale(len, c * ec, rq);
                k.axpy(len, s, tmp.data(), rq);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::sqrt(k.norm2(len, r.row(i).data()));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double trace_norm(const ComplexMatrix &m) {
    const auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double spectral_norm(const ComplexMatrix &m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

} // namespace lindsim
