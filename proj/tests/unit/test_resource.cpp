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
#include <string>

#include <json.hpp>

#include "lindsim/error.hpp"
#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/oaa/segment.hpp"
#include "lindsim/oaa/transfer.hpp"
#include "lindsim/pauli/random_spec.hpp"
#include "lindsim/resource/resource_model.hpp"

using namespace lindsim;

namespace {

// 1 - sum_{k <= h} e^{-lambda} lambda^k / k!, the complement route.
double poisson_tail_by_cdf(unsigned h) {
    double term = std::exp(-kPoissonRate);
    double cdf = term;
    for (unsigned k = 1; k <= h; ++k) {
        term *= kPoissonRate / k;
        cdf += term;
    }
    return 1.0 - cdf;
}

} // namespace

TEST_CASE("poisson_tail matches the complementary CDF") {
    double previous = 1.0;
    for (unsigned h = 0; h <= 12; ++h) {
        const double tail = poisson_tail(h);
        CHECK(tail == doctest::Approx(poisson_tail_by_cdf(h)).epsilon(1e-9));
        CHECK(tail < previous);
        previous = tail;
    }
    CHECK(poisson_tail(0) == doctest::Approx(1.0 - std::exp(-1.5)));
}

TEST_CASE("poisson_h") {
    CHECK(poisson_h(1e-3) == 6);
    CHECK(poisson_h(1e-2) == 5);
    CHECK(poisson_h(0.5) == 1);
    unsigned previous = 0;
    for (double eps = 0.9; eps > 1e-12; eps /= 3.0) {
        const unsigned h = poisson_h(eps);
        CHECK(poisson_tail(h) <= eps);
        if (h > 0) {
            CHECK(poisson_tail(h - 1) > eps);
        }
        CHECK(h >= previous);
        previous = h;
    }
    CHECK_THROWS_AS(poisson_h(0.0), DomainError);
    CHECK_THROWS_AS(poisson_h(1.0), DomainError);
    CHECK_THROWS_AS(poisson_h(-0.5), DomainError);
}

TEST_CASE("not00 probability stays under its bound") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        RandomSpecOptions options;
        options.n = 1 + trial % 2;
        const LindbladSpec spec = random_spec(rng, options);
        for (double delta : {0.001, 0.01, 0.1}) {
            const double pr = not00_probability(spec, delta);
            CHECK(pr >= 0.0);
            CHECK(pr <= not00_bound(spec, delta) + 1e-15);
        }
    }
    // Independent route: 1 - p s_0 from the LCU itself.
    const LindbladSpec ad = amplitude_damping_spec();
    const ChannelLCU lcu = m_delta_lcu(ad, 0.05);
    CHECK(not00_probability(ad, 0.05) ==
          doctest::Approx(1.0 - lcu.p * lcu.s[0]).epsilon(1e-12));
}

TEST_CASE("cost report") {
    const LindbladSpec ad = amplitude_damping_spec();
    const CostReport a = cost_report(ad, 1.0, 0.05);
    const CostReport b = cost_report(ad, 1.0, 0.05);
    CHECK(cost_report_json(a) == cost_report_json(b));
    CHECK(a.segments == 2);
    CHECK(a.r == 40);
    CHECK(a.truncation_eps == doctest::Approx(0.0125));
    CHECK(a.h == poisson_h(0.0125));
    CHECK(a.multi_u_occurrences == a.h);
    CHECK(a.multi_u_total == std::uint64_t{a.segments} * a.h);
    CHECK(a.q_dim == 1 + a.q + a.m * a.q * a.q);

    const auto doc = nlohmann::json::parse(cost_report_json(a));
    CHECK(doc.at("gate_count").get<std::uint64_t>() == a.gate_count);
    CHECK(doc.at("constants").at("controlled_pauli_cost") == 1);
    CHECK(doc.at("constants").at("register_bit_cost") == 1);

    // Doubling t on a whole number of segments doubles the segment count;
    // the per-segment cost grows only through h and the position labels.
    const double unit = std::log(2.0) / pauli_norm(ad);
    const CostReport one = cost_report(ad, 8 * unit, 0.05);
    const CostReport two = cost_report(ad, 16 * unit, 0.05);
    CHECK(two.segments == 2 * one.segments);
    const double ratio = static_cast<double>(two.gate_count) / one.gate_count;
    CHECK(ratio >= 2.0);
    CHECK(ratio < 2.6);

    CHECK(cost_report(ad, 0.0, 0.05).segments == 1);
    CHECK_THROWS_AS(cost_report(ad, -1.0, 0.05), DomainError);
    CHECK_THROWS_AS(cost_report(ad, 1.0, 1.5), DomainError);
}

TEST_CASE("Hamming cap removes at most the binomial tail") {
    const LindbladSpec ad = amplitude_damping_spec();
    for (unsigned r : {32U, 64U}) {
        const SegmentPlan plan = plan_segment(ad, r);
        const ChannelLCU lcu = m_delta_lcu(ad, plan.delta);
        for (unsigned h : {1U, 2U, 4U}) {
            CAPTURE(r);
            CAPTURE(h);
            const SegmentOperators ops =
                segment_operators(lcu, truncate_ancilla(plan, h));
            const double tail = hamming_tail(lcu, r, h);
            CHECK(ops.discarded_mass >= 0.0);
            CHECK(ops.discarded_mass <= 2.0 * tail + 1e-12);
            CHECK(tail <= poisson_tail(h));
        }
    }
}
