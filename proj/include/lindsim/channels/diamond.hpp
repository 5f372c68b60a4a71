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

#pragma once

#include <cstdint>

#include "lindsim/channels/channels.hpp"

namespace lindsim {

struct DiamondOptions {
    int restarts = 20;   ///< random starts besides the maximally entangled one
    int iterations = 50; ///< alignment steps per start
    std::uint64_t seed = 0x5eed;
    bool refine = true;  ///< false skips the ascent and returns the sandwich
};

/// Certified interval for the diamond norm of a Hermiticity-preserving map.
struct DiamondBounds {
    double lower = 0.0;      ///< max of the Choi bound and the ascent value
    double upper = 0.0;      ///< ||J||_1
    double choi_lower = 0.0; ///< ||J||_1 / d
};

/// Sandwich ||J||_1 / d <= ||T||_diamond <= ||J||_1, with the lower end
/// raised by a monotone ascent of ||(T (x) 1)(|psi><psi|)||_1 over pure
/// inputs on the system and a same-size reference. Every ascent value is the
/// trace norm of an actual output, so `lower` stays a valid lower bound.
DiamondBounds diamond_bounds(const Superoperator &t,
                             const DiamondOptions &options = {});

/// Lower bound on the induced trace norm max_rho ||T(rho)||_1 by the same
/// ascent without a reference system.
double induced_trace_norm_lower(const Superoperator &t,
                                const DiamondOptions &options = {});

} // namespace lindsim
