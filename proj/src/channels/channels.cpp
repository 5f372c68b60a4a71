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

#include "lindsim/channels/channels.hpp"

#include <string>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

namespace {

void require_square_of(const ComplexMatrix &m, std::size_t n,
                       const char *what) {
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError(std::string(what) + ": expected " +
                             std::to_string(n) + "x" + std::to_string(n) +
                             ", got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
}

void require_same_dim(const Superoperator &a, const Superoperator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("superoperators act on different dimensions");
    }
}

} // namespace

StateVector vec(const ComplexMatrix &m) {
    StateVector v(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            v[i + j * m.rows()] = m(i, j);
        }
    }
    return v;
}

ComplexMatrix unvec(const StateVector &v, std::size_t d) {
    if (v.dim() != d * d) {
        throw DimensionError("unvec: vector of length " +
                             std::to_string(v.dim()) + " is not " +
                             std::to_string(d) + "^2");
    }
    ComplexMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            m(i, j) = v[i + j * d];
        }
    }
    return m;
}

Superoperator::Superoperator(std::size_t d, ComplexMatrix matrix)
    : dim_(d), matrix_(std::move(matrix)) {
    require_square_of(matrix_, d * d, "superoperator");
}

Superoperator Superoperator::identity(std::size_t d) {
    return {d, ComplexMatrix::identity(d * d)};
}

Superoperator Superoperator::zero(std::size_t d) {
    return {d, ComplexMatrix(d * d, d * d)};
}

ComplexMatrix Superoperator::apply(const ComplexMatrix &x) const {
    require_square_of(x, dim_, "superoperator input");
    return unvec(matrix_ * vec(x), dim_);
}

Superoperator Superoperator::adjoint() const {
    return {dim_, matrix_.adjoint()};
}

Superoperator Superoperator::after(const Superoperator &first) const {
    require_same_dim(*this, first);
    return {dim_, matrix_ * first.matrix_};
}

Superoperator Superoperator::power(unsigned k) const {
    Superoperator result = identity(dim_);
    Superoperator base = *this;
    while (k > 0) {
        if (k & 1U) {
            result = result.after(base);
        }
        k >>= 1U;
        if (k > 0) {
            base = base.after(base);
        }
    }
    return result;
}

Superoperator operator+(const Superoperator &a, const Superoperator &b) {
    require_same_dim(a, b);
    return {a.dim_, a.matrix_ + b.matrix_};
}

Superoperator operator-(const Superoperator &a, const Superoperator &b) {
    require_same_dim(a, b);
    return {a.dim_, a.matrix_ - b.matrix_};
}

Superoperator operator*(Complex s, const Superoperator &a) {
    return {a.dim_, a.matrix_ * s};
}

ChoiMatrix::ChoiMatrix(std::size_t d, ComplexMatrix matrix)
    : dim_(d), matrix_(std::move(matrix)) {
    require_square_of(matrix_, d * d, "Choi matrix");
}

double ChoiMatrix::min_eigenvalue() const {
    return hermitian_eigen(matrix_).values.front();
}

bool ChoiMatrix::is_completely_positive(double tol) const {
    return min_eigenvalue() >= -tol;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
    if (operators_.empty()) {
        throw DimensionError("Kraus channel needs at least one operator");
    }
    dim_ = operators_.front().rows();
    for (const auto &a : operators_) {
        require_square_of(a, dim_, "Kraus operator");
    }
}

double KrausChannel::tp_defect() const {
    ComplexMatrix sum = ComplexMatrix::identity(dim_) * Complex(-1.0);
    for (const auto &a : operators_) {
        sum += a.adjoint() * a;
    }
    return spectral_norm(sum);
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix &rho) const {
    require_square_of(rho, dim_, "Kraus channel input");
    ComplexMatrix out(dim_, dim_);
    for (const auto &a : operators_) {
        out += a * rho * a.adjoint();
    }
    return out;
}

Superoperator lindblad_superop(const ComplexMatrix &h,
                               std::span<const ComplexMatrix> jumps) {
    const std::size_t d = h.rows();
    require_square_of(h, d, "Hamiltonian");
    const ComplexMatrix id = ComplexMatrix::identity(d);
    // -i (I (x) H - H^T (x) I)
    ComplexMatrix gen = (kron(id, h) - kron(h.transpose(), id)) *
                        Complex(0.0, -1.0);
    for (const auto &l : jumps) {
        require_square_of(l, d, "jump operator");
        const ComplexMatrix ldl = l.adjoint() * l;
        gen += kron(l.conjugate(), l);
        gen -= kron(id, ldl) * Complex(0.5);
        gen -= kron(ldl.transpose(), id) * Complex(0.5);
    }
    return {d, std::move(gen)};
}

Superoperator lindblad_superop(const LindbladSpec &spec) {
    const auto jumps = spec.jump_matrices();
    return lindblad_superop(spec.hamiltonian_matrix(), jumps);
}

Superoperator exact_evolution(const LindbladSpec &spec, double t) {
    if (!(t >= 0.0)) {
        throw DomainError("evolution time must be non-negative");
    }
    const Superoperator gen = lindblad_superop(spec);
    return {gen.dim(), expm(gen.matrix() * Complex(t))};
}

Superoperator first_order_map(const LindbladSpec &spec, double delta) {
    if (!(delta >= 0.0)) {
        throw DomainError("delta must be non-negative");
    }
    const Superoperator gen = lindblad_superop(spec);
    return Superoperator::identity(gen.dim()) + Complex(delta) * gen;
}

Superoperator unitary_superop(const ComplexMatrix &u) {
    require_square_of(u, u.rows(), "unitary");
    return {u.rows(), kron(u.conjugate(), u)};
}

Superoperator kraus_to_superop(const KrausChannel &c) {
    const std::size_t d = c.dim();
    ComplexMatrix s(d * d, d * d);
    for (const auto &a : c.operators()) {
        s += kron(a.conjugate(), a);
    }
    return {d, std::move(s)};
}

ChoiMatrix kraus_to_choi(const KrausChannel &c) {
    // J = sum_k |A_k>><<A_k| with |A>>[a d + i] = A[a, i].
    const std::size_t d = c.dim();
    ComplexMatrix j(d * d, d * d);
    for (const auto &a : c.operators()) {
        const StateVector flat(std::vector<Complex>(a.entries().begin(),
                                                    a.entries().end()));
        j += outer(flat, flat);
    }
    return {d, std::move(j)};
}

ChoiMatrix superop_to_choi(const Superoperator &s) {
    const std::size_t d = s.dim();
    ComplexMatrix j(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t jj = 0; jj < d; ++jj) {
                    j(a * d + i, b * d + jj) =
                        s.matrix()(a + b * d, i + jj * d);
                }
            }
        }
    }
    return {d, std::move(j)};
}

Superoperator choi_to_superop(const ChoiMatrix &choi) {
    const std::size_t d = choi.dim();
    ComplexMatrix s(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t jj = 0; jj < d; ++jj) {
                    s(a + b * d, i + jj * d) =
                        choi.matrix()(a * d + i, b * d + jj);
                }
            }
        }
    }
    return {d, std::move(s)};
}

} // namespace lindsim
