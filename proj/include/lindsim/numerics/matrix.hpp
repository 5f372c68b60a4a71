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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lindsim {

using Complex = std::complex<double>;

/// Dense row-major complex matrix in double precision.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    Complex &operator()(std::size_t i, std::size_t j) noexcept {
        return entries_[i * cols_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * cols_ + j];
    }

    [[nodiscard]] std::span<Complex> row(std::size_t i) noexcept {
        return {entries_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const Complex> row(std::size_t i) const noexcept {
        return {entries_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<Complex> entries() noexcept { return entries_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] Complex *data() noexcept { return entries_.data(); }
    [[nodiscard]] const Complex *data() const noexcept {
        return entries_.data();
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] ComplexMatrix transpose() const;
    [[nodiscard]] ComplexMatrix conjugate() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    /// Largest entry modulus.
    [[nodiscard]] double max_abs() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Complex vector carrying a pure state or an unnormalized branch of one.
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : amplitudes_(dim) {}
    explicit StateVector(std::vector<Complex> amplitudes)
        : amplitudes_(std::move(amplitudes)) {}
    StateVector(std::initializer_list<Complex> amplitudes)
        : amplitudes_(amplitudes) {}

    static StateVector basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    Complex &operator[](std::size_t i) noexcept { return amplitudes_[i]; }
    const Complex &operator[](std::size_t i) const noexcept {
        return amplitudes_[i];
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }

    [[nodiscard]] double norm() const;
    [[nodiscard]] StateVector normalized() const;
    /// Throws DomainError unless |norm - 1| <= tol.
    void require_normalized(double tol = 1e-10) const;

    StateVector &operator+=(const StateVector &other);
    StateVector &operator-=(const StateVector &other);
    StateVector &operator*=(Complex scale);
    friend StateVector operator+(StateVector a, const StateVector &b) {
        return a += b;
    }
    friend StateVector operator-(StateVector a, const StateVector &b) {
        return a -= b;
    }
    friend StateVector operator*(Complex s, StateVector a) { return a *= s; }

  private:
    std::vector<Complex> amplitudes_;
};

/// <a|b> with the first argument conjugated.
Complex inner(const StateVector &a, const StateVector &b);

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
StateVector operator*(const ComplexMatrix &a, const StateVector &v);

/// |a><b|
ComplexMatrix outer(const StateVector &a, const StateVector &b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace lindsim
