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
 * Ancilla concentration and an auditable gate-counting model for the full
 * simulation circuit. All elementary-gate constants are 1 and named in the
 * serialized report.
 */
#pragma once

#include <cstdint>
#include <string>

#include "lindsim/pauli/spec.hpp"

namespace lindsim {

/// Mean number of positions away from (0, 0) in one segment, large-r limit.
inline constexpr double kPoissonRate = 1.5;

/// P(Poisson(1.5) > h), summed over the tail terms directly.
double poisson_tail(unsigned h);

/// Smallest h with poisson_tail(h) <= eps. Throws DomainError unless
/// 0 < eps < 1.
unsigned poisson_h(double eps);

/// 1 - s_0 / sum_j s_j^2: the chance one position leaves (0, 0).
double not00_probability(const LindbladSpec &spec, double delta);

/// (3/2) delta P + K delta^2 with K = (sum_{j>=1} c_j^2 / 2 + c_0)^2; never
/// below not00_probability.
double not00_bound(const LindbladSpec &spec, double delta);

struct CostReport {
    unsigned segments = 0;
    std::uint64_t r = 0;        ///< positions per segment
    unsigned h = 0;             ///< Hamming cap per segment
    unsigned n = 0;
    unsigned m = 0;
    unsigned q = 0;             ///< largest term count among H and the L_j
    unsigned q_dim = 0;         ///< indicator alphabet 1 + q + m q^2
    double truncation_eps = 0.0; ///< per-segment tail budget
    unsigned bits_positions = 0;  ///< a: h position labels of ceil(log2(r+1)) bits
    unsigned bits_indicators = 0; ///< b: h indicator values
    unsigned bits_purifiers = 0;  ///< c: h purifier values
    unsigned multi_u_occurrences = 0;  ///< per segment, equal to h
    std::uint64_t multi_u_total = 0;   ///< over all segments
    std::uint64_t gate_count = 0;

    // Unit constants of the counting model.
    static constexpr std::uint64_t kControlledPauliCost = 1;   // C_U
    /// Reflections and the weight encoder, per bit of a + b + c.
    static constexpr std::uint64_t kRegisterBitCost = 1;
};

/// Gate and register counts for simulating to time t within eps.
///
/// segments = max(1, ceil(t * pauli_norm / ln 2)); truncation_eps =
/// eps / (2 segments); h = poisson_h(truncation_eps); r = ceil(segments / eps)
/// because one segment's error is O(1/r); and
///
///     gate_count = segments * (h q_dim (ceil(log2(max(1, m q_dim))) + n) C_U
///                              + (a + b + c) C_R),
///
/// with C_U = kControlledPauliCost and C_R = kRegisterBitCost.
///
/// Throws DomainError for t < 0 or eps outside (0, 1).
CostReport cost_report(const LindbladSpec &spec, double t, double eps);

/// Pretty-printed JSON with every field and constant.
std::string cost_report_json(const CostReport &report);

} // namespace lindsim
