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

#include "lindsim/numerics/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lindsim/error.hpp"
#include "lindsim/numerics/kernels.hpp"

namespace lindsim {

namespace {

std::string shape(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shapes " +
                             shape(a.rows(), a.cols()) + " and " +
                             shape(b.rows(), b.cols()) + " differ");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionError("matrix of shape " + shape(rows, cols) +
                             " given " + std::to_string(entries_.size()) +
                             " entries");
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of non-square matrix " +
                             shape(rows_, cols_));
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        acc += (*this)(i, i);
    }
    return acc;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::norm2(entries_.size(), entries_.data()));
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const auto &z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    kernels::axpy(entries_.size(), 1.0, other.entries_.data(),
                  entries_.data());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtract");
    kernels::axpy(entries_.size(), -1.0, other.entries_.data(),
                  entries_.data());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    kernels::scale(entries_.size(), scale, entries_.data());
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: " + shape(a.rows(), a.cols()) + " * " +
                             shape(b.rows(), b.cols()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    const auto &k = kernels::active();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex *ci = c.row(i).data();
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Complex ail = a(i, l);
            if (ail != Complex{}) {
                k.axpy(b.cols(), ail, b.row(l).data(), ci);
            }
        }
    }
    return c;
}

StateVector operator*(const ComplexMatrix &a, const StateVector &v) {
    if (a.cols() != v.dim()) {
        throw DimensionError("matrix-vector: " + shape(a.rows(), a.cols()) +
                             " * " + std::to_string(v.dim()));
    }
    StateVector out(a.rows());
    const auto &k = kernels::active();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out[i] = k.dotu(a.cols(), a.row(i).data(), v.amplitudes().data());
    }
    return out;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index " + std::to_string(index) +
                             " out of range for dimension " +
                             std::to_string(dim));
    }
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

double StateVector::norm() const {
    return std::sqrt(kernels::norm2(amplitudes_.size(), amplitudes_.data()));
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    StateVector out = *this;
    out *= 1.0 / n;
    return out;
}

void StateVector::require_normalized(double tol) const {
    const double n = norm();
    if (!(std::abs(n - 1.0) <= tol)) {
        throw DomainError("state has norm " + std::to_string(n) +
                          ", expected 1");
    }
}

StateVector &StateVector::operator+=(const StateVector &other) {
    if (other.dim() != dim()) {
        throw DimensionError("vector add: dimensions differ");
    }
    kernels::axpy(dim(), 1.0, other.amplitudes_.data(), amplitudes_.data());
    return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
    if (other.dim() != dim()) {
        throw DimensionError("vector subtract: dimensions differ");
    }
    kernels::axpy(dim(), -1.0, other.amplitudes_.data(), amplitudes_.data());
    return *this;
}

StateVector &StateVector::operator*=(Complex scale) {
    kernels::scale(dim(), scale, amplitudes_.data());
    return *this;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product: dimensions differ");
    }
    return kernels::dotc(a.dim(), a.amplitudes().data(),
                         b.amplitudes().data());
}

ComplexMatrix outer(const StateVector &a, const StateVector &b) {
    ComplexMatrix m(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            m(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return best;
}

} // namespace lindsim
