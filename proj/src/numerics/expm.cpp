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

#include <cmath>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

ComplexMatrix expm(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        throw DimensionError("expm: matrix is not square");
    }
    if (!(tol > 0.0)) {
        throw DomainError("expm: tolerance must be positive");
    }
    const std::size_t n = m.rows();
    const double norm = m.frobenius_norm();
    if (!std::isfinite(norm)) {
        throw DomainError("expm: matrix has non-finite entries");
    }
    // Scale so that ||m / 2^s||_F <= 1/2.
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    ComplexMatrix a = m;
    a *= std::ldexp(1.0, -squarings);

    // Squaring amplifies the series error by about 2^s.
    const double term_tol = tol * std::ldexp(1.0, -squarings);
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 60; ++k) {
        term = term * a;
        term *= 1.0 / k;
        sum += term;
        if (term.frobenius_norm() < term_tol) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

} // namespace lindsim
