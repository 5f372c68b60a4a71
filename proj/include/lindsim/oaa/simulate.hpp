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
 * End-to-end simulation: split [0, t] into segments of Pauli-norm time at
 * most ln 2, amplify each segment, and compose.
 */
#pragma once

#include <optional>

#include "lindsim/channels/channels.hpp"
#include "lindsim/channels/diamond.hpp"
#include "lindsim/pauli/spec.hpp"

namespace lindsim {

struct SimulationLimits {
    unsigned max_qubits = 3;
    unsigned max_r = 4096;
    std::optional<unsigned> h; ///< Hamming cap applied to every segment
    DiamondOptions diamond;
};

struct SimulationReport {
    Superoperator channel;     ///< composed output map
    unsigned segments = 0;
    unsigned r = 0;            ///< steps per segment
    double segment_time = 0.0;
    double delta = 0.0;
    double p = 1.0;            ///< per-step success parameter
    double dilution_cos2 = 1.0;
    /// Certified upper bound on one segment's diamond distance to e^{L t_seg}.
    double segment_upper = 0.0;
    /// Bounds on the composed map's diamond distance to e^{L t}.
    DiamondBounds total;
};

/// Segments = ceil(t * pauli_norm / ln 2), all of equal length and each
/// diluted to success 1/4. r doubles from 1 until one segment's certified
/// upper bound is at most eps / segments.
///
/// Throws DomainError for t < 0 or eps <= 0, LimitError when n exceeds
/// limits.max_qubits, and LimitError carrying the achieved bound when r
/// would exceed limits.max_r or the composed lower bound exceeds eps.
SimulationReport simulate(const LindbladSpec &spec, double t, double eps,
                          const SimulationLimits &limits = {});

} // namespace lindsim
