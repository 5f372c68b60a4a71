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
 * Quantum channels in Kraus, superoperator and Choi form.
 *
 * Operators are vectorized by stacking columns: vec(X)[i + j d] = X[i, j],
 * so that vec(A X B) = (B^T (x) A) vec(X). The Choi matrix is unnormalized
 * with the system factor first:
 *
 *     J(T) = sum_{ij} T(|i><j|) (x) |i><j|,   J[a d + i, b d + j] = T(|i><j|)[a, b].
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lindsim/numerics/matrix.hpp"
#include "lindsim/pauli/spec.hpp"

namespace lindsim {

/// Column-stacked vectorization.
StateVector vec(const ComplexMatrix &m);
ComplexMatrix unvec(const StateVector &v, std::size_t d);

/// A linear map on d x d matrices as a d^2 x d^2 matrix on vec(.).
class Superoperator {
  public:
    Superoperator() = default;
    /// Throws DimensionError unless `matrix` is d^2 x d^2.
    Superoperator(std::size_t d, ComplexMatrix matrix);

    static Superoperator identity(std::size_t d);
    static Superoperator zero(std::size_t d);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

    [[nodiscard]] ComplexMatrix apply(const ComplexMatrix &x) const;
    /// The Hilbert-Schmidt adjoint map.
    [[nodiscard]] Superoperator adjoint() const;
    /// this after `first`: (this o first)(X) = this(first(X)).
    [[nodiscard]] Superoperator after(const Superoperator &first) const;
    [[nodiscard]] Superoperator power(unsigned k) const;

    friend Superoperator operator+(const Superoperator &a,
                                   const Superoperator &b);
    friend Superoperator operator-(const Superoperator &a,
                                   const Superoperator &b);
    friend Superoperator operator*(Complex s, const Superoperator &a);

  private:
    std::size_t dim_ = 0;
    ComplexMatrix matrix_;
};

class ChoiMatrix {
  public:
    ChoiMatrix() = default;
    ChoiMatrix(std::size_t d, ComplexMatrix matrix);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    /// Smallest eigenvalue of the Hermitian part.
    [[nodiscard]] double min_eigenvalue() const;
    /// PSD to -tol, the test for complete positivity.
    [[nodiscard]] bool is_completely_positive(double tol = 1e-9) const;
    [[nodiscard]] Complex trace() const { return matrix_.trace(); }

  private:
    std::size_t dim_ = 0;
    ComplexMatrix matrix_;
};

class KrausChannel {
  public:
    KrausChannel() = default;
    /// Throws DimensionError unless every operator is square of equal size.
    explicit KrausChannel(std::vector<ComplexMatrix> operators);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<ComplexMatrix> &operators() const noexcept {
        return operators_;
    }
    /// ||sum_j A_j^dagger A_j - I|| in spectral norm.
    [[nodiscard]] double tp_defect() const;
    [[nodiscard]] bool trace_preserving(double tol = 1e-10) const {
        return tp_defect() <= tol;
    }
    [[nodiscard]] ComplexMatrix apply(const ComplexMatrix &rho) const;

  private:
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> operators_;
};

/// Generator of the master equation for Hamiltonian `h` and jumps `jumps`.
Superoperator lindblad_superop(const ComplexMatrix &h,
                               std::span<const ComplexMatrix> jumps);
Superoperator lindblad_superop(const LindbladSpec &spec);

/// e^{L t}. Throws DomainError for t < 0.
Superoperator exact_evolution(const LindbladSpec &spec, double t);

/// 1 + delta L. Throws DomainError for delta < 0.
Superoperator first_order_map(const LindbladSpec &spec, double delta);

/// X -> U X U^dagger.
Superoperator unitary_superop(const ComplexMatrix &u);

Superoperator kraus_to_superop(const KrausChannel &c);
ChoiMatrix kraus_to_choi(const KrausChannel &c);
ChoiMatrix superop_to_choi(const Superoperator &s);
Superoperator choi_to_superop(const ChoiMatrix &j);

} // namespace lindsim
