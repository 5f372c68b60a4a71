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
 * One constant-time segment: r copies of the channel-LCU circuit sharing the
 * system register, optionally preceded by a dilution qubit that lowers the
 * overall success parameter to exactly 1/4.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/pauli/spec.hpp"

namespace lindsim {

struct SegmentPlan {
    unsigned r = 1;
    double delta = 0.0;            ///< per-step time; 0 for a generic LCU
    double p = 1.0;                ///< per-step success parameter
    std::optional<unsigned> h;     ///< Hamming-weight cap; nullopt = none
    double target_p_total = 0.25;
    /// cos^2 of the dilution rotation; 1 when no dilution qubit is present.
    double dilution_cos2 = 1.0;
    bool diluted = false;
    std::size_t q_dim = 1;         ///< indicator dimension per position
    std::size_t m_dim = 1;         ///< purifier dimension per position
    std::size_t sys_dim = 2;

    /// Register dimensions, most significant first:
    /// [2 if diluted], then (q_dim, m_dim) for positions 0..r-1, then sys_dim.
    [[nodiscard]] std::vector<std::size_t> dims() const;
    [[nodiscard]] double time() const { return r * delta; }
    /// p^r times the dilution factor.
    [[nodiscard]] double total_success() const;
};

/// Positive root delta of p(delta)^r = 1/4. Throws DomainError for r < 1 or
/// a spec with zero Pauli norm.
double solve_delta(const LindbladSpec &spec, unsigned r);

/// Closed form 1 / (1 + 2 delta P + delta^2 (P + c_0)^2 / 4), with P the
/// Pauli norm and c_0 the Hamiltonian beta sum; equals 1 / sum_j s_j^2.
double success_parameter(const LindbladSpec &spec, double delta);

/// Angle phi with cos^2 phi = p_target / p_actual. Throws DomainError unless
/// 0 < p_target <= p_actual <= 1.
double dilute(double p_actual, double p_target);

/// Segment with delta = solve_delta(spec, r) and no dilution qubit.
SegmentPlan plan_segment(const LindbladSpec &spec, unsigned r);

/// Segment covering time `t_seg` in r equal steps; a dilution qubit brings
/// p^r down to 1/4. Throws DomainError if p^r < 1/4.
SegmentPlan plan_segment_for_time(const LindbladSpec &spec, double t_seg,
                                  unsigned r);

/// Segment of r copies of an arbitrary channel LCU, diluted when
/// p^r > 1/4 + 1e-12. Throws DomainError if p^r < 1/4 - 1e-12.
SegmentPlan plan_lcu_segment(const ChannelLCU &lcu, unsigned r);

/// Same plan with the Hamming-weight cap h. Throws DomainError if h > r.
SegmentPlan truncate_ancilla(const SegmentPlan &plan, unsigned h);

/// ||sum_{j_0..j_{r-1}} (A_{j_0}...A_{j_{r-1}})^dagger (A_{j_0}...A_{j_{r-1}}) - I||
/// evaluated through the Heisenberg recursion S <- sum_j A_j^dagger S A_j.
double tp_defect_segment(const KrausChannel &step, unsigned r);
/// sum over Kraus words of Ahat^dagger Ahat by the same recursion.
ComplexMatrix segment_kraus_gram(const KrausChannel &step, unsigned r);

/// Same quantity by explicit enumeration of all (m+1)^r Kraus words.
/// Throws LimitError above 4096 words.
double tp_defect_segment_enumerated(const KrausChannel &step, unsigned r);

} // namespace lindsim
