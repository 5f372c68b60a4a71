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
#include <numbers>
#include <random>
#include <vector>

#include "lindsim/channels/channels.hpp"
#include "lindsim/channels/diamond.hpp"
#include "lindsim/error.hpp"
#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/lcu/gadget.hpp"
#include "lindsim/numerics/fit.hpp"
#include "lindsim/numerics/linalg.hpp"
#include "lindsim/oaa/isometry.hpp"
#include "lindsim/oaa/segment.hpp"
#include "lindsim/oaa/simulate.hpp"
#include "lindsim/oaa/transfer.hpp"
#include "lindsim/pauli/random_spec.hpp"
#include "lindsim/cli/experiments.hpp"
#include "test_support.hpp"

using namespace lindsim;
using lindsim::testing::random_state;

namespace {

LindbladSpec small_spec(std::mt19937_64 &rng) {
    RandomSpecOptions options;
    options.n = 1;
    options.max_jumps = 1;
    options.max_terms = 2;
    return random_spec(rng, options);
}

double diamond_upper(const Superoperator &a, const Superoperator &b) {
    DiamondOptions options;
    options.refine = false;
    return diamond_bounds(a - b, options).upper;
}

// S <- A_0^dagger S A_0 + A_1^dagger S A_1 keeps S = diag(1, s) with
// s <- (1 - delta/2)^2 s + delta, whose fixed point is 1 / (1 - delta/4).
double ad_defect(double delta, unsigned r) {
    return delta / (4.0 - delta) *
           (1.0 - std::pow(1.0 - delta / 2.0, 2.0 * r));
}

} // namespace

TEST_CASE("solve_delta puts p^r at 1/4") {
    const LindbladSpec ad = amplitude_damping_spec();
    const double d1 = solve_delta(ad, 1);
    CHECK(d1 == doctest::Approx(1.2915).epsilon(1e-4));
    CHECK(success_parameter(ad, d1) == doctest::Approx(0.25).epsilon(1e-12));
    for (unsigned r : {2U, 7U, 100U}) {
        const double d = solve_delta(ad, r);
        CHECK(std::pow(success_parameter(ad, d), r) ==
              doctest::Approx(0.25).epsilon(1e-12));
    }
    // p ~ 1 - 2 delta P for small delta, so p^r = 1/4 gives r delta P -> ln 2.
    const double product = solve_delta(ad, 100) * 100 * pauli_norm(ad);
    CHECK(product > 0.69);
    CHECK(product < 0.70);
    CHECK_THROWS_AS(solve_delta(ad, 0), DomainError);
}

TEST_CASE("success_parameter equals 1 / sum s_j^2 of the LCU") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const LindbladSpec spec = small_spec(rng);
        const double delta = 0.05 + 0.5 * (rng() % 100) / 100.0;
        CHECK(success_parameter(spec, delta) ==
              doctest::Approx(m_delta_lcu(spec, delta).p).epsilon(1e-12));
    }
}

TEST_CASE("dilute") {
    CHECK(dilute(0.25, 0.25) == doctest::Approx(0.0));
    const double phi = dilute(0.5, 0.25);
    CHECK(std::cos(phi) * std::cos(phi) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(dilute(0.25, 0.5), DomainError);
    CHECK_THROWS_AS(dilute(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(dilute(1.5, 0.25), DomainError);
}

TEST_CASE("segment plans") {
    const LindbladSpec ad = amplitude_damping_spec();
    const SegmentPlan plain = plan_segment(ad, 4);
    CHECK_FALSE(plain.diluted);
    CHECK(plain.total_success() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(plain.dims().size() == 2 * 4 + 1);

    const SegmentPlan timed = plan_segment_for_time(ad, 0.3, 4);
    CHECK(timed.diluted);
    CHECK(timed.time() == doctest::Approx(0.3));
    CHECK(timed.total_success() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(timed.dims().front() == 2);
    CHECK_THROWS_AS(plan_segment_for_time(ad, 5.0, 1), DomainError);

    const SegmentPlan capped = truncate_ancilla(timed, 2);
    REQUIRE(capped.h.has_value());
    CHECK(*capped.h == 2);
    CHECK_THROWS_AS(truncate_ancilla(timed, 5), DomainError);

    const SegmentPlan toy = plan_lcu_segment(cli::hadamard_lcu(), 2);
    CHECK_FALSE(toy.diluted);
    CHECK(toy.total_success() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(plan_lcu_segment(cli::hadamard_lcu(), 1).diluted);
    CHECK_THROWS_AS(plan_lcu_segment(cli::hadamard_lcu(), 3), DomainError);
}

TEST_CASE("segment TP defect: recursion against enumeration") {
    const LindbladSpec ad = amplitude_damping_spec();
    for (unsigned r : {1U, 2U, 5U, 9U}) {
        const double delta = 0.3;
        const KrausChannel step = m_delta_kraus(ad, delta);
        CHECK(tp_defect_segment(step, r) ==
              doctest::Approx(ad_defect(delta, r)).epsilon(1e-12));
        CHECK(tp_defect_segment_enumerated(step, r) ==
              doctest::Approx(ad_defect(delta, r)).epsilon(1e-12));
    }
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 15; ++trial) {
        const LindbladSpec spec = small_spec(rng);
        const KrausChannel step = m_delta_kraus(spec, 0.1);
        CHECK(tp_defect_segment(step, 1) ==
              doctest::Approx(step.tp_defect()).epsilon(1e-12));
        const unsigned r = 2 + trial % 4;
        CHECK(std::abs(tp_defect_segment(step, r) -
                       tp_defect_segment_enumerated(step, r)) < 1e-12);
    }
    CHECK_THROWS_AS(
        tp_defect_segment_enumerated(m_delta_kraus(ad, 0.1), 13), LimitError);
}

TEST_CASE("isometry circuit: W-hat is an isometry with the right blocks") {
    std::mt19937_64 rng(63);
    const LindbladSpec ad = amplitude_damping_spec();
    const SegmentPlan plan = plan_segment_for_time(ad, 0.2, 2);
    const SegmentCircuit circuit(plan,
                                 LcuGadget::build(m_delta_lcu(ad, plan.delta)));
    const StateVector psi = random_state(rng, 2);
    const IsometryState start = circuit.initial_state(psi);
    const IsometryState moved = circuit.apply_w_hat(start);
    CHECK(moved.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-13));
    const IsometryState back = circuit.apply_w_hat_adjoint(moved);
    CHECK(testing::max_abs_diff(back.amplitudes, start.amplitudes) < 1e-13);

    // P_0 What |Psi> = sqrt(p^r cos^2) |0>|0^r> sum_j |j> Ahat_j |psi>.
    const IsometryState good = circuit.project_p0(moved);
    const IsometryState target = circuit.target_state(psi);
    StateVector scaled = target.amplitudes;
    scaled *= Complex(std::sqrt(plan.total_success()));
    CHECK(testing::max_abs_diff(good.amplitudes, scaled) < 1e-13);

    const IsometryState amplified = circuit.apply_f(psi);
    CHECK(amplified.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("isometry circuit: r = 1 success block matches the LCU gadget") {
    std::mt19937_64 rng(64);
    const LindbladSpec spec = small_spec(rng);
    const SegmentPlan plan = plan_segment(spec, 1);
    const LcuGadget gadget = LcuGadget::build(m_delta_lcu(spec, plan.delta));
    const SegmentCircuit circuit(plan, gadget);
    const StateVector psi = random_state(rng, 2);
    const WOutcome w = apply_w(gadget, psi);
    const IsometryState good =
        circuit.project_p0(circuit.apply_w_hat(circuit.initial_state(psi)));
    // With no dilution qubit the indicator-0 slice leads the vector.
    for (std::size_t i = 0; i < w.success_part.dim(); ++i) {
        CHECK(std::abs(good.amplitudes[i] - w.success_part[i]) < 1e-13);
    }
}

TEST_CASE("state-vector route agrees with the transfer route") {
    std::mt19937_64 rng(65);
    for (int trial = 0; trial < 12; ++trial) {
        const LindbladSpec spec = small_spec(rng);
        const unsigned r = 1 + trial % 3;
        SegmentPlan plan = (trial % 2 == 0)
                               ? plan_segment(spec, r)
                               : plan_segment_for_time(
                                     spec, 0.5 * r * solve_delta(spec, r), r);
        if (trial % 4 == 3) {
            plan = truncate_ancilla(plan, r - 1);
        }
        CAPTURE(trial);
        const ChannelLCU lcu = m_delta_lcu(spec, plan.delta);
        const SegmentCircuit circuit(plan, LcuGadget::build(lcu));
        const SegmentOperators ops = segment_operators(lcu, plan);

        CHECK(max_abs_diff(circuit.q_operator(), ops.q) < 1e-12);
        CHECK(max_abs_diff(circuit.extract_channel().matrix(),
                           segment_channel(ops).matrix()) < 1e-12);
        for (int k = 0; k < 3; ++k) {
            const StateVector psi = random_state(rng, 2);
            const IsometryState f = circuit.apply_f(psi);
            const IsometryState ideal = circuit.target_state(psi);
            const double direct = (f.amplitudes - ideal.amplitudes).norm();
            CHECK(oaa_error(ops, psi) == doctest::Approx(direct).epsilon(1e-9));
            if (!plan.h) {
                CHECK(perp_leakage(ops, psi) ==
                      doctest::Approx(circuit.perp_leakage(psi))
                          .epsilon(1e-9)
                          .scale(1e-12));
            }
        }
    }
}

TEST_CASE("single-unitary toy amplifies exactly") {
    const ChannelLCU toy = cli::hadamard_lcu();
    const SegmentPlan plan = plan_lcu_segment(toy, 2);
    const SegmentOperators ops = segment_operators(toy, plan);
    CHECK(oaa_error(ops) < 1e-10);
    const ComplexMatrix hadamard = toy.kraus_operators()[0];
    const Superoperator ideal = unitary_superop(hadamard * hadamard);
    CHECK(diamond_upper(segment_channel(ops), ideal) < 1e-10);

    // One copy with p = 1/2 gets diluted to 1/4 and is still exact.
    const SegmentPlan diluted = plan_lcu_segment(toy, 1);
    CHECK(oaa_error(segment_operators(toy, diluted)) < 1e-10);
}

TEST_CASE("Psi-perp leakage decays like 1/r") {
    const LindbladSpec ad = amplitude_damping_spec();
    std::vector<double> rs;
    std::vector<double> leak;
    for (unsigned r : {16U, 32U, 64U, 128U}) {
        const SegmentPlan plan = plan_segment(ad, r);
        const SegmentOperators ops =
            segment_operators(m_delta_lcu(ad, plan.delta), plan);
        rs.push_back(r);
        leak.push_back(spectral_norm(perp_leakage_operator(ops)));
    }
    const LineFit fit = slope_fit(rs, leak);
    CHECK(fit.slope > -1.2);
    CHECK(fit.slope < -0.8);
}

TEST_CASE("Q eigenvalues approach 1/4") {
    const LindbladSpec ad = amplitude_damping_spec();
    double previous = 1.0;
    for (unsigned r : {8U, 32U, 128U}) {
        const SegmentPlan plan = plan_segment(ad, r);
        const SegmentOperators ops =
            segment_operators(m_delta_lcu(ad, plan.delta), plan);
        double spread = 0.0;
        for (double e : hermitian_eigen(ops.q).values) {
            spread = std::max(spread, std::abs(e - 0.25));
        }
        CAPTURE(r);
        CHECK(spread * r < 0.5);
        CHECK(spread < previous);
        previous = spread;
    }
}

TEST_CASE("simulate") {
    const LindbladSpec ad = amplitude_damping_spec();
    const SimulationReport zero = simulate(ad, 0.0, 0.05);
    CHECK(zero.total.upper < 0.05);

    const SimulationReport run = simulate(ad, std::log(2.0), 0.05);
    CHECK(run.segments == 1);
    CHECK(run.dilution_cos2 <= 1.0);
    CHECK(run.segment_upper <= 0.05 + 1e-12);
    CHECK(run.total.lower <= 0.05);
    CHECK(diamond_upper(run.channel, exact_evolution(ad, std::log(2.0))) ==
          doctest::Approx(run.total.upper).epsilon(1e-9));

    const SimulationReport two = simulate(ad, 2.0 * std::log(2.0), 0.05);
    CHECK(two.segments == 2);
    CHECK(two.segment_time == doctest::Approx(std::log(2.0)));

    SimulationLimits tight;
    tight.max_r = 2;
    CHECK_THROWS_AS(simulate(ad, std::log(2.0), 1e-4, tight), LimitError);
    SimulationLimits narrow;
    narrow.max_qubits = 0;
    CHECK_THROWS_AS(simulate(ad, 0.1, 0.05, narrow), LimitError);
    CHECK_THROWS_AS(simulate(ad, -1.0, 0.05), DomainError);
    CHECK_THROWS_AS(simulate(ad, 1.0, 0.0), DomainError);
}
