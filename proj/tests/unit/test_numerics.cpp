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

// Dense kernels against Eigen as an independent oracle.
#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lindsim/error.hpp"
#include "lindsim/numerics/fit.hpp"
#include "lindsim/numerics/linalg.hpp"
#include "test_support.hpp"

using namespace lindsim;
using lindsim::testing::random_hermitian;
using lindsim::testing::random_matrix;
using lindsim::testing::random_state;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            out(i, k) = m(i, k);
        }
    }
    return out;
}

double max_diff(const ComplexMatrix &a, const Eigen::MatrixXcd &b) {
    return (to_eigen(a) - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("matrix products and adjoints match Eigen") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 1 + trial % 5;
        const std::size_t c = 1 + (trial * 3) % 7;
        const ComplexMatrix a = random_matrix(rng, r, c);
        const ComplexMatrix b = random_matrix(rng, c, 3);
        CHECK(max_diff(a * b, to_eigen(a) * to_eigen(b)) < 1e-12);
        CHECK(max_diff(a.adjoint(), to_eigen(a).adjoint()) == 0.0);
        CHECK(max_diff(a.transpose(), to_eigen(a).transpose()) == 0.0);
        CHECK(std::abs(a.frobenius_norm() - to_eigen(a).norm()) < 1e-12);
    }
}

TEST_CASE("shape mismatches throw DimensionError") {
    const ComplexMatrix a(2, 3);
    CHECK_THROWS_AS(a * a, DimensionError);
    CHECK_THROWS_AS(a + ComplexMatrix(3, 2), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(2, 2) * StateVector(3), DimensionError);
}

TEST_CASE("kron puts the left factor on the slow index") {
    std::mt19937_64 rng(12);
    const ComplexMatrix a = random_matrix(rng, 2, 3);
    const ComplexMatrix b = random_matrix(rng, 3, 2);
    const Eigen::MatrixXcd expected =
        Eigen::kroneckerProduct(to_eigen(a), to_eigen(b)).eval();
    CHECK(max_diff(kron(a, b), expected) < 1e-14);

    const StateVector u{1.0, 2.0};
    const StateVector v{3.0, Complex(0.0, 1.0)};
    const StateVector uv = kron(u, v);
    CHECK(uv[1] == Complex(0.0, 1.0));
    CHECK(uv[2] == Complex(6.0, 0.0));
}

TEST_CASE("expm agrees with Eigen's matrix exponential") {
    std::mt19937_64 rng(13);
    for (double scale : {1e-3, 0.3, 2.0, 12.0}) {
        for (std::size_t d : {1, 2, 4, 7}) {
            const ComplexMatrix m = random_matrix(rng, d, d, scale);
            const Eigen::MatrixXcd oracle = to_eigen(m).exp();
            const double tol = 1e-10 * std::max(1.0, oracle.norm());
            CHECK(max_diff(expm(m), oracle) < tol);
        }
    }
}

TEST_CASE("expm of i times a Hermitian matrix is unitary") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix h = random_hermitian(rng, 5, 3.0);
        CHECK(is_unitary(expm(h * Complex(0.0, -1.0)), 1e-11));
    }
    CHECK(max_abs_diff(expm(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) ==
          0.0);
}

TEST_CASE("hermitian_eigen matches SelfAdjointEigenSolver") {
    std::mt19937_64 rng(15);
    for (std::size_t d : {1, 2, 3, 8, 16}) {
        const ComplexMatrix h = random_hermitian(rng, d);
        const EigenDecomposition eig = hermitian_eigen(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(to_eigen(h));
        for (std::size_t k = 0; k < d; ++k) {
            CHECK(std::abs(eig.values[k] - oracle.eigenvalues()(k)) < 1e-10);
        }
        // Reconstruction V diag(w) V^dagger.
        ComplexMatrix w(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            w(k, k) = eig.values[k];
        }
        CHECK(max_abs_diff(eig.vectors * w * eig.vectors.adjoint(), h) < 1e-10);
        CHECK(is_unitary(eig.vectors, 1e-10));
    }
}

TEST_CASE("singular values, trace norm and spectral norm match JacobiSVD") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = 1 + trial % 6;
        const std::size_t c = 1 + (trial * 5) % 6;
        const ComplexMatrix m = random_matrix(rng, r, c);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
        const auto oracle = svd.singularValues();
        const std::vector<double> ours = singular_values(m);
        REQUIRE(ours.size() == static_cast<std::size_t>(oracle.size()));
        for (std::size_t k = 0; k < ours.size(); ++k) {
            CHECK(std::abs(ours[k] - oracle(k)) < 1e-10);
        }
        CHECK(std::abs(trace_norm(m) - oracle.sum()) < 1e-10);
        CHECK(std::abs(spectral_norm(m) - oracle(0)) < 1e-10);
    }
}

TEST_CASE("partial trace of a product state returns the kept factor") {
    std::mt19937_64 rng(17);
    const ComplexMatrix a = lindsim::testing::random_density(rng, 2);
    const ComplexMatrix b = lindsim::testing::random_density(rng, 3);
    const ComplexMatrix c = lindsim::testing::random_density(rng, 2);
    const ComplexMatrix abc = kron(kron(a, b), c);
    const std::vector<std::size_t> dims{2, 3, 2};
    const std::vector<std::size_t> keep_b{1};
    const std::vector<std::size_t> keep_ac{0, 2};
    CHECK(max_abs_diff(partial_trace(abc, dims, keep_b), b) < 1e-14);
    CHECK(max_abs_diff(partial_trace(abc, dims, keep_ac), kron(a, c)) < 1e-14);
}

TEST_CASE("unitary_from_first_column completes a unit vector") {
    std::mt19937_64 rng(18);
    for (std::size_t d : {1, 2, 5, 9}) {
        const StateVector v = random_state(rng, d);
        const ComplexMatrix u = unitary_from_first_column(v);
        CHECK(is_unitary(u, 1e-12));
        for (std::size_t i = 0; i < d; ++i) {
            CHECK(std::abs(u(i, 0) - v[i]) < 1e-15);
        }
    }
    CHECK_THROWS_AS(unitary_from_first_column(StateVector{1.0, 1.0}),
                    DomainError);
}

TEST_CASE("state vector norms and inner products") {
    const StateVector a{Complex(0.0, 1.0), 1.0};
    const StateVector b{1.0, 0.0};
    CHECK(inner(a, b) == Complex(0.0, -1.0));
    CHECK(std::abs(a.norm() - std::numbers::sqrt2) < 1e-15);
    CHECK_THROWS_AS(a.require_normalized(), DomainError);
    CHECK_NOTHROW(a.normalized().require_normalized());
}

TEST_CASE("slope_fit recovers power laws") {
    const std::vector<double> x{1.0, 2.0, 4.0, 8.0};
    std::vector<double> y;
    for (double v : x) {
        y.push_back(3.0 * std::pow(v, -1.5));
    }
    const LineFit fit = slope_fit(x, y);
    CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
    const std::vector<double> bad{1.0, 0.0, 2.0, 3.0};
    CHECK_THROWS_AS(slope_fit(x, bad), DomainError);
    CHECK_THROWS_AS(slope_fit(std::vector<double>{1.0, 2.0},
                              std::vector<double>{1.0, 2.0}),
                    DomainError);
}
