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
#include <vector>

#include "lindsim/error.hpp"
#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/lcu/gadget.hpp"
#include "lindsim/numerics/fit.hpp"
#include "lindsim/numerics/linalg.hpp"
#include "lindsim/oaa/segment.hpp"
#include "lindsim/pauli/random_spec.hpp"
#include "test_support.hpp"

using namespace lindsim;
using lindsim::testing::random_state;

namespace {

LindbladSpec sample_spec(std::mt19937_64 &rng) {
    RandomSpecOptions options;
    options.n = 1 + rng() % 2;
    options.max_jumps = 2;
    options.max_terms = 3;
    return random_spec(rng, options);
}

} // namespace

TEST_CASE("m_delta_kraus for amplitude damping at delta = 1/4") {
    const KrausChannel k = m_delta_kraus(amplitude_damping_spec(), 0.25);
    REQUIRE(k.operators().size() == 2);
    CHECK(max_abs_diff(k.operators()[0],
                       ComplexMatrix{{1.0, 0.0}, {0.0, 0.875}}) < 1e-15);
    CHECK(max_abs_diff(k.operators()[1],
                       ComplexMatrix{{0.0, 0.5}, {0.0, 0.0}}) < 1e-15);
    CHECK(k.tp_defect() == doctest::Approx(0.015625).epsilon(1e-12));
    CHECK_THROWS_AS(m_delta_kraus(amplitude_damping_spec(), 0.0),
                    DomainError);
}

TEST_CASE("m_delta_kraus defect stays below (delta ops)^2") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const LindbladSpec spec = sample_spec(rng);
        for (double delta : {0.3, 0.05, 0.001}) {
            const double bound = std::pow(delta * ops_norm(spec), 2);
            CHECK(m_delta_kraus(spec, delta).tp_defect() <= bound + 1e-10);
        }
    }
}

TEST_CASE("m_delta_lcu coefficients for amplitude damping") {
    const ChannelLCU lcu = m_delta_lcu(amplitude_damping_spec(), 0.25);
    REQUIRE(lcu.s.size() == 2);
    CHECK(lcu.s[0] == doctest::Approx(1.125).epsilon(1e-14));
    CHECK(lcu.s[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lcu.c[0] == doctest::Approx(0.0));
    CHECK(lcu.c[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lcu.p == doctest::Approx(1.0 / (1.125 * 1.125 + 0.25)).epsilon(1e-14));
    const StateVector mu = mu_state(lcu.s);
    CHECK(mu[0].real() == doctest::Approx(0.9138).epsilon(1e-4));
    CHECK(mu[1].real() == doctest::Approx(0.4061).epsilon(1e-4));
}

TEST_CASE("m_delta_lcu rows rebuild the Kraus operators") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const LindbladSpec spec = sample_spec(rng);
        const double delta = 0.02 + 0.1 * (trial % 5);
        const ChannelLCU lcu = m_delta_lcu(spec, delta);
        const auto kraus = m_delta_kraus(spec, delta).operators();
        const auto rebuilt = lcu.kraus_operators();
        REQUIRE(rebuilt.size() == kraus.size());
        double sum_sq = 0.0;
        for (std::size_t j = 0; j < kraus.size(); ++j) {
            CHECK(max_abs_diff(rebuilt[j], kraus[j]) < 1e-10);
            double s = 0.0;
            for (const LcuTerm &t : lcu.rows[j]) {
                CHECK(t.alpha >= 0.0);
                CHECK(is_unitary(t.unitary, 1e-12));
                s += t.alpha;
            }
            CHECK(s == doctest::Approx(lcu.s[j]).epsilon(1e-14));
            sum_sq += s * s;
        }
        CHECK(lcu.p == doctest::Approx(1.0 / sum_sq).epsilon(1e-14));
        CHECK(lcu.p ==
              doctest::Approx(success_parameter(spec, delta)).epsilon(1e-12));
        // 1 + m q^2 + q slots at most in row 0, identity first.
        CHECK(lcu.rows[0].size() <= 1 + spec.m() * spec.q() * spec.q() + spec.q());
        CHECK(max_abs_diff(lcu.rows[0][0].unitary,
                           ComplexMatrix::identity(spec.dim())) == 0.0);
    }
}

TEST_CASE("Hamiltonian-only spec has s_0 = 1 + delta c_0") {
    const LindbladSpec spec = LindbladSpec::create(
        1, {1, {{0.3, PauliString("X")}, {0.2, PauliString("Z")}}}, {});
    const ChannelLCU lcu = m_delta_lcu(spec, 0.1);
    REQUIRE(lcu.s.size() == 1);
    CHECK(lcu.s[0] == doctest::Approx(1.05).epsilon(1e-14));
    CHECK(lcu.rows[0].size() == 3);
}

TEST_CASE("1/p - 1 is 2 delta pauli_norm to first order") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const LindbladSpec spec = sample_spec(rng);
        std::vector<double> xs;
        std::vector<double> ys;
        for (double delta = 1e-3; delta <= 1e-2 + 1e-15; delta += 1.5e-3) {
            xs.push_back(delta);
            ys.push_back(1.0 / m_delta_lcu(spec, delta).p - 1.0);
        }
        const LineFit fit = slope_fit(xs, ys);
        CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.05));
        CHECK(std::exp(fit.intercept) ==
              doctest::Approx(2.0 * pauli_norm(spec)).epsilon(0.05));
    }
}

TEST_CASE("mu_state normalizes over every index") {
    const StateVector a = mu_state(std::vector<double>{3.0, 4.0});
    CHECK(a[0].real() == doctest::Approx(0.6));
    CHECK(a[1].real() == doctest::Approx(0.8));
    CHECK(mu_state(std::vector<double>{2.0})[0] == Complex(1.0));
    CHECK_THROWS_AS(mu_state(std::vector<double>{0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(mu_state(std::vector<double>{1.0, -1.0}), DomainError);
}

TEST_CASE("standard LCU success") {
    CHECK(standard_lcu_success(std::vector<double>{1.0}) == 1.0);
    const double root = 0.5;
    const std::vector<double> alphas{0.75, 0.25, 0.25, 0.25};
    CHECK(standard_lcu_success(alphas) ==
          doctest::Approx(1.0 / ((1 + root) * (1 + root))).epsilon(1e-14));
    for (double delta = 0.01; delta < 1.0; delta += 0.07) {
        const double fresh = 1.0 / (1.0 + delta);
        const double standard = 1.0 / std::pow(1.0 + std::sqrt(delta), 2);
        CHECK(fresh > standard);
    }
}

TEST_CASE("multi-B first columns and unitarity") {
    std::vector<std::vector<LcuTerm>> rows(2);
    rows[0] = {{0.25, ComplexMatrix::identity(2)},
               {0.25, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}}};
    rows[1] = {{0.7, ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}}};
    const ChannelLCU lcu = ChannelLCU::from_rows(2, rows);
    const ComplexMatrix b = build_multi_b(lcu, 2);
    CHECK(is_unitary(b, 1e-12));
    // Index = k * m_dim + j on indicator (x) purifier.
    CHECK(b(0, 0).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(b(2, 0).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(std::abs(b(1, 1) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(b(3, 1)) < 1e-15);

    const ComplexMatrix u = build_multi_u(lcu, 2);
    CHECK(is_unitary(u, 1e-12));
    std::vector<std::vector<LcuTerm>> bad(1);
    bad[0] = {{1.0, ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}}}};
    CHECK_THROWS_AS(build_multi_u(ChannelLCU::from_rows(2, bad), 1),
                    DomainError);
}

TEST_CASE("gadget W is the multi-B sandwich of multi-U") {
    std::mt19937_64 rng(54);
    const LindbladSpec spec = sample_spec(rng);
    const LcuGadget g = LcuGadget::build(m_delta_lcu(spec, 0.1));
    const ComplexMatrix bi =
        kron(g.multi_b, ComplexMatrix::identity(spec.dim()));
    CHECK(max_abs_diff(g.w, bi.adjoint() * g.multi_u * bi) < 1e-12);
    CHECK(is_unitary(g.w, 1e-11));
    CHECK(g.m_dim == spec.m() + 1);
}

TEST_CASE("W gadget: the indicator-0 block is sqrt(p) sum_j |j> A_j psi") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        const LindbladSpec spec = sample_spec(rng);
        for (double delta : {0.1, 0.05}) {
            const LcuGadget g = LcuGadget::build(m_delta_lcu(spec, delta));
            const auto kraus = m_delta_kraus(spec, delta).operators();
            const std::size_t d = spec.dim();
            for (int s = 0; s < 4; ++s) {
                const StateVector psi = random_state(rng, d);
                const WOutcome out = apply_w(g, psi);
                StateVector expected(g.m_dim * d);
                for (std::size_t j = 0; j < kraus.size(); ++j) {
                    const StateVector branch = kraus[j] * psi;
                    for (std::size_t a = 0; a < d; ++a) {
                        expected[j * d + a] = std::sqrt(out.p) * branch[a];
                    }
                }
                CHECK((out.success_part - expected).norm() <= 1e-9);
            }
        }
    }
}

TEST_CASE("a single unitary Kraus operator succeeds with probability p") {
    std::vector<std::vector<LcuTerm>> rows(1);
    rows[0] = {{0.6, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}},
               {0.8, ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}}};
    // (0.6 X + 0.8 Z) is unitary, so the channel is trace preserving.
    const LcuGadget g = LcuGadget::build(ChannelLCU::from_rows(2, rows));
    std::mt19937_64 rng(56);
    const StateVector psi = random_state(rng, 2);
    const WOutcome out = apply_w(g, psi);
    const double prob = out.success_part.norm() * out.success_part.norm();
    CHECK(prob == doctest::Approx(out.p).epsilon(1e-12));
    CHECK(out.p == doctest::Approx(1.0 / 1.96).epsilon(1e-14));
    CHECK_THROWS_AS(apply_w(g, StateVector{1.0, 1.0}), DomainError);
}
