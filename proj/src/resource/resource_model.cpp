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

#include "lindsim/resource/resource_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "lindsim/error.hpp"

namespace lindsim {

namespace {

// ceil(log2(x)) for x >= 1, exact on integers.
unsigned ceil_log2(std::uint64_t x) {
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < x) {
        ++bits;
    }
    return bits;
}

double jump_c_squared(const LindbladSpec &spec) {
    double sum = 0.0;
    for (const auto &j : spec.jumps()) {
        sum += j.beta_sum() * j.beta_sum();
    }
    return sum;
}

} // namespace

double poisson_tail(unsigned h) {
    // Terms beyond h decay faster than geometrically once k > 1.5, so a few
    // dozen terms reach double precision.
    double term = std::exp(-kPoissonRate);
    for (unsigned k = 1; k <= h + 1; ++k) {
        term *= kPoissonRate / k;
    }
    double tail = 0.0;
    for (unsigned k = h + 1; term > 0.0 && k < h + 200; ++k) {
        tail += term;
        term *= kPoissonRate / (k + 1);
    }
    return tail;
}

unsigned poisson_h(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("poisson_h needs 0 < eps < 1");
    }
    unsigned h = 0;
    while (poisson_tail(h) > eps) {
        ++h;
    }
    return h;
}

double not00_probability(const LindbladSpec &spec, double delta) {
    if (!(delta > 0.0)) {
        throw DomainError("not00_probability needs delta > 0");
    }
    const double jump_sq = jump_c_squared(spec);
    const double c0 = spec.hamiltonian().beta_sum();
    const double s0 = 1.0 + 0.5 * delta * jump_sq + delta * c0;
    const double total = s0 * s0 + delta * jump_sq;
    // 1 - s0/total written without cancellation.
    return delta * (s0 * (0.5 * jump_sq + c0) + jump_sq) / total;
}

double not00_bound(const LindbladSpec &spec, double delta) {
    const double k = 0.5 * jump_c_squared(spec) + spec.hamiltonian().beta_sum();
    return 1.5 * delta * pauli_norm(spec) + k * k * delta * delta;
}

CostReport cost_report(const LindbladSpec &spec, double t, double eps) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("cost_report needs a finite t >= 0");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("cost_report needs 0 < eps < 1");
    }
    CostReport c;
    const double tau = t * pauli_norm(spec);
    c.segments = std::max(
        1U, static_cast<unsigned>(std::ceil(tau / std::numbers::ln2 - 1e-12)));
    c.truncation_eps = eps / (2.0 * c.segments);
    c.h = poisson_h(c.truncation_eps);
    c.r = static_cast<std::uint64_t>(std::ceil(c.segments / eps));
    c.n = spec.n();
    c.m = static_cast<unsigned>(spec.m());
    c.q = static_cast<unsigned>(spec.q());
    c.q_dim = 1 + c.q + c.m * c.q * c.q;
    c.bits_positions = ceil_log2(c.r + 1) * c.h;
    c.bits_indicators = ceil_log2(c.q_dim) * c.h;
    c.bits_purifiers = ceil_log2(std::uint64_t{c.m} + 1) * c.h;
    c.multi_u_occurrences = c.h;
    c.multi_u_total = std::uint64_t{c.h} * c.segments;

    const std::uint64_t select_bits =
        ceil_log2(std::max<std::uint64_t>(1, std::uint64_t{c.m} * c.q_dim));
    const std::uint64_t multi_u_cost = std::uint64_t{c.h} * c.q_dim *
                                       (select_bits + c.n) *
                                       CostReport::kControlledPauliCost;
    const std::uint64_t register_cost =
        c.bits_positions + c.bits_indicators + c.bits_purifiers;
    c.gate_count = c.segments * (multi_u_cost +
                                 register_cost * CostReport::kRegisterBitCost);
    return c;
}

std::string cost_report_json(const CostReport &c) {
    nlohmann::ordered_json j;
    j["segments"] = c.segments;
    j["r"] = c.r;
    j["h"] = c.h;
    j["n"] = c.n;
    j["m"] = c.m;
    j["q"] = c.q;
    j["q_dim"] = c.q_dim;
    j["truncation_eps"] = c.truncation_eps;
    j["register_bits"] = {{"a", c.bits_positions},
                          {"b", c.bits_indicators},
                          {"c", c.bits_purifiers}};
    j["multi_u_occurrences"] = c.multi_u_occurrences;
    j["multi_u_total"] = c.multi_u_total;
    j["gate_count"] = c.gate_count;
    j["constants"] = {{"controlled_pauli_cost", CostReport::kControlledPauliCost},
                      {"register_bit_cost", CostReport::kRegisterBitCost},
                      {"poisson_rate", kPoissonRate}};
    return j.dump(2);
}

} // namespace lindsim
