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

#include <cstddef>
#include <span>
#include <vector>

#include "lindsim/numerics/matrix.hpp"

namespace lindsim {

/// Kronecker product; the left factor indexes the slow (high) digit.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
StateVector kron(const StateVector &a, const StateVector &b);

/// Matrix exponential by scaling and squaring a truncated Taylor series.
/// The series is cut once a term falls below `tol` relative to the scaled
/// argument, so the result is accurate to roughly `tol` times ||m||.
ComplexMatrix expm(const ComplexMatrix &m, double tol = 1e-12);

struct EigenDecomposition {
    std::vector<double> values;   ///< ascending
    ComplexMatrix vectors;        ///< column k pairs with values[k]
};

/// Eigen-decomposition of a Hermitian matrix (cyclic complex Jacobi).
/// Only the Hermitian part (m + m^dagger)/2 is used.
EigenDecomposition hermitian_eigen(const ComplexMatrix &m);

/// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const ComplexMatrix &m);

double trace_norm(const ComplexMatrix &m);
double spectral_norm(const ComplexMatrix &m);

/// Partial trace over a tensor product. `dims` lists subsystem dimensions
/// with dims[0] the most significant; `keep` lists kept subsystem indices in
/// increasing order.
ComplexMatrix partial_trace(const ComplexMatrix &m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// A unitary whose first column is exactly `v`. Requires ||v|| = 1.
ComplexMatrix unitary_from_first_column(const StateVector &v);

bool is_hermitian(const ComplexMatrix &m, double tol);
bool is_unitary(const ComplexMatrix &m, double tol);

/// sum_k w_k m_k.
ComplexMatrix linear_combination(std::span<const Complex> weights,
                                 std::span<const ComplexMatrix> terms);

} // namespace lindsim
