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

#include <doctest.h>

#include <cmath>
#include <random>

#include "lindsim/channels/channels.hpp"
#include "lindsim/channels/diamond.hpp"
#include "lindsim/dilation/dilation.hpp"
#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"
#include "lindsim/pauli/random_spec.hpp"
#include "test_support.hpp"

using namespace lindsim;

namespace {

DiamondOptions sandwich_only() {
    DiamondOptions options;
    options.refine = false;
    return options;
}

ComplexMatrix normalized(ComplexMatrix h) {
    h *= Complex(1.0 / spectral_norm(h));
    return h;
}

} // namespace

TEST_CASE("build_j") {
    const DilationSpec ad = build_j(amplitude_damping_spec());
    CHECK(ad.ancilla_dim == 2);
    CHECK(ad.system_dim == 2);
    CHECK(spectral_norm(ad.j) == doctest::Approx(1.0).epsilon(1e-12));
    // |1>_anc |0>_sys <- |0>_anc |1>_sys carries L = |0><1|.
    CHECK(std::abs(ad.j(2, 1) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(ad.j(1, 2) - Complex(1.0)) < 1e-15);

    const DilationSpec closed =
        build_j(parse_spec(R"({n:1, H:[{beta:1, pauli:"Z"}], L:[]})"));
    CHECK(closed.ancilla_dim == 1);
    CHECK(closed.j.max_abs() == 0.0);

    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        RandomSpecOptions options;
        options.n = 1 + trial % 2;
        const LindbladSpec spec = random_spec(rng, options);
        const DilationSpec d = build_j(spec);
        CHECK(is_hermitian(d.j, 1e-14));
        CHECK(is_hermitian(joint_hamiltonian(d), 1e-14));
        // Block (0, 0) of J is zero.
        for (std::size_t i = 0; i < d.system_dim; ++i) {
            for (std::size_t k = 0; k < d.system_dim; ++k) {
                CHECK(std::abs(d.j(i, k)) == 0.0);
            }
        }
    }
}

TEST_CASE("fig1 evolution for amplitude damping has a closed form") {
    // Each round rotates |0>|1> into |1>|0> by angle sqrt(t/N), so the
    // excited population after N rounds is cos(sqrt(t/N))^(2N).
    const DilationSpec d = build_j(amplitude_damping_spec());
    const ComplexMatrix excited{{0.0, 0.0}, {0.0, 1.0}};
    for (unsigned n : {1U, 4U, 32U}) {
        const double t = 0.7;
        const ComplexMatrix out = fig1_evolve(d, t, n).apply(excited);
        CHECK(out(1, 1).real() ==
              doctest::Approx(std::pow(std::cos(std::sqrt(t / n)), 2.0 * n))
                  .epsilon(1e-12));
        CHECK(out.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("fig1 evolution is a channel that converges") {
    std::mt19937_64 rng(82);
    RandomSpecOptions options;
    options.n = 1;
    const LindbladSpec spec = random_spec(rng, options);
    const DilationSpec d = build_j(spec);
    const Superoperator exact = exact_evolution(spec, 0.5);
    double previous = 1e9;
    for (unsigned n : {4U, 16U, 64U, 256U}) {
        const Superoperator step = fig1_evolve(d, 0.5, n);
        const ChoiMatrix choi = superop_to_choi(step);
        CHECK(choi.is_completely_positive(1e-10));
        const ComplexMatrix rho = testing::random_density(rng, 2);
        CHECK(step.apply(rho).trace().real() ==
              doctest::Approx(1.0).epsilon(1e-12));
        const double err = diamond_bounds(step - exact, sandwich_only()).upper;
        CHECK(err < previous);
        previous = err;
    }

    const DilationSpec idle =
        build_j(parse_spec(R"({n:1, H:[], L:[]})"));
    CHECK(max_abs_diff(fig1_evolve(idle, 1.0, 3).matrix(),
                       Superoperator::identity(2).matrix()) < 1e-15);
    CHECK_THROWS_AS(fig1_evolve(d, 1.0, 0), DomainError);
    CHECK_THROWS_AS(fig1_evolve(d, 0.0, 2), DomainError);
}

TEST_CASE("discretization check") {
    const LindbladSpec ad = amplitude_damping_spec();
    const ComplexMatrix h = normalized(joint_hamiltonian(build_j(ad)));
    const DiscretizationResult frozen =
        discretization_check(h, 2, ad, 1.0, 4, 0.0, 0.05);
    CHECK(frozen.certified_fail);
    CHECK_FALSE(frozen.pass);
    CHECK(frozen.per_stage_errors.size() == 4);
    CHECK(frozen.total_time == 0.0);

    // At N = 1 one reset step of length delta must match e^{L T}; for AD the
    // excited population is cos^2(delta), so delta = acos(e^{-T/2}) is exact
    // on populations. The coherence then decays by cos(delta) = e^{-T/2} as
    // well, so the whole channel is exact.
    const double t = 0.4;
    const double delta = std::acos(std::exp(-t / 2.0));
    const DiscretizationResult single =
        discretization_check(h, 2, ad, t, 1, delta, 1e-6);
    CHECK(single.pass);
    CHECK(single.per_stage_errors.front().upper < 1e-9);

    ComplexMatrix unnormalized = h;
    unnormalized *= Complex(2.0);
    CHECK_THROWS_AS(discretization_check(unnormalized, 2, ad, t, 1, 0.1, 0.05),
                    DomainError);
    CHECK_THROWS_AS(discretization_check(h, 2, ad, t, 0, 0.1, 0.05),
                    DomainError);
    CHECK_THROWS_AS(discretization_check(h, 2, ad, t, 1, -0.1, 0.05),
                    DomainError);
}

TEST_CASE("minimal delta scan brackets the threshold") {
    const DeltaScan scan =
        min_delta_scan(amplitude_damping_spec(), 1.0, 4, 0.25, sandwich_only());
    CHECK(scan.delta_fail < scan.delta_pass);
    CHECK(scan.total_time == doctest::Approx(4 * scan.delta_pass));
    CHECK(scan.total_time_fail == doctest::Approx(4 * scan.delta_fail));
}

TEST_CASE("local approximation") {
    std::mt19937_64 rng(83);
    const ComplexMatrix h = normalized(testing::random_hermitian(rng, 4));
    const LocalApprox still = local_approx_compare(h, 2, 0.0);
    CHECK(still.diamond_upper < 1e-12);
    CHECK(still.dist < 1e-12);

    // No coupling between ancilla levels: resetting to |0> then evolving is
    // exactly the unitary of block (0, 0).
    ComplexMatrix block = h;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (i / 2 != k / 2) {
                block(i, k) = 0.0;
            }
        }
    }
    const LocalApprox blocked = local_approx_compare(normalized(block), 2, 0.3);
    CHECK(blocked.diamond_upper < 1e-10);

    const LocalApprox coupled = local_approx_compare(h, 2, 0.1);
    CHECK(coupled.choi_lower <= coupled.diamond_upper + 1e-12);
    CHECK(coupled.dist <= coupled.diamond_upper + 1e-9);
    CHECK(coupled.g.rows() == 2);
    CHECK_THROWS_AS(local_approx_compare(Complex(3.0) * h, 2, 0.1),
                    DomainError);
}
