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

#include "lindsim/numerics/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lindsim/error.hpp"
#include "lindsim/numerics/kernels.hpp"

namespace lindsim {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                Complex *dst = &out(i * b.rows() + k, j * b.cols());
                kernels::axpy(b.cols(), aij, b.row(k).data(), dst);
            }
        }
    }
    return out;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    StateVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < b.dim(); ++k) {
            out[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                              std::size_t{1},
                                              std::multiplies<>());
    if (!m.is_square() || m.rows() != total) {
        throw DimensionError("partial_trace: matrix is not " +
                             std::to_string(total) + "x" +
                             std::to_string(total));
    }
    std::vector<bool> kept(dims.size(), false);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= dims.size() || (i > 0 && keep[i] <= keep[i - 1])) {
            throw DomainError(
                "partial_trace: kept subsystems must be increasing and valid");
        }
        kept[keep[i]] = true;
    }
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        (kept[k] ? kept_dim : traced_dim) *= dims[k];
    }
    // full_index[a * traced_dim + t] for kept index a and traced index t.
    std::vector<std::size_t> full_index(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        std::size_t a = 0;
        std::size_t t = 0;
        std::size_t a_stride = 1;
        std::size_t t_stride = 1;
        for (std::size_t k = dims.size(); k-- > 0;) {
            const std::size_t digit = rem % dims[k];
            rem /= dims[k];
            if (kept[k]) {
                a += digit * a_stride;
                a_stride *= dims[k];
            } else {
                t += digit * t_stride;
                t_stride *= dims[k];
            }
        }
        full_index[a * traced_dim + t] = idx;
    }
    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t a = 0; a < kept_dim; ++a) {
        for (std::size_t b = 0; b < kept_dim; ++b) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                acc += m(full_index[a * traced_dim + t],
                         full_index[b * traced_dim + t]);
            }
            out(a, b) = acc;
        }
    }
    return out;
}

ComplexMatrix unitary_from_first_column(const StateVector &v) {
    const std::size_t n = v.dim();
    if (n == 0) {
        throw DimensionError("unitary_from_first_column: empty vector");
    }
    v.require_normalized();
    const StateVector &unit = v;
    // Rotate the global phase so the leading entry is real and non-negative,
    // reflect e0 onto it, then restore the phase.
    const double phi = std::arg(unit[0]);
    const Complex phase = std::polar(1.0, phi);
    StateVector w = unit;
    w *= std::conj(phase);
    w[0] = Complex(std::abs(unit[0]), 0.0);
    StateVector u = w;
    u *= -1.0;
    u[0] += 1.0;
    const double uu = u.norm() * u.norm();
    ComplexMatrix h = ComplexMatrix::identity(n);
    if (uu > 1e-30) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                h(i, j) -= 2.0 * u[i] * std::conj(u[j]) / uu;
            }
        }
    }
    h *= phase;
    return h;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <=
           tol;
}

ComplexMatrix linear_combination(std::span<const Complex> weights,
                                 std::span<const ComplexMatrix> terms) {
    if (weights.size() != terms.size() || terms.empty()) {
        throw DimensionError(
            "linear_combination: need matching, non-empty weights and terms");
    }
    ComplexMatrix out(terms[0].rows(), terms[0].cols());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].rows() != out.rows() || terms[k].cols() != out.cols()) {
            throw DimensionError("linear_combination: term shapes differ");
        }
        kernels::axpy(out.entries().size(), weights[k], terms[k].data(),
                      out.data());
    }
    return out;
}

} // namespace lindsim
