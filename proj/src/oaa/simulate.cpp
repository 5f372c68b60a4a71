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

#include "lindsim/oaa/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "lindsim/error.hpp"
#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/oaa/segment.hpp"
#include "lindsim/oaa/transfer.hpp"

namespace lindsim {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

SimulationReport simulate(const LindbladSpec &spec, double t, double eps,
                          const SimulationLimits &limits) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("simulate needs a finite t >= 0");
    }
    if (!(eps > 0.0)) {
        throw DomainError("simulate needs eps > 0");
    }
    if (spec.n() > limits.max_qubits) {
        throw LimitError("simulate is limited to " +
                         std::to_string(limits.max_qubits) + " qubits, spec has " +
                         std::to_string(spec.n()));
    }
    SimulationReport report;
    const double tau = t * pauli_norm(spec);
    if (tau == 0.0) {
        report.channel = Superoperator::identity(spec.dim());
        return report;
    }

    const unsigned segments =
        static_cast<unsigned>(std::ceil(tau / std::numbers::ln2 - 1e-12));
    report.segments = segments;
    report.segment_time = t / segments;
    const Superoperator exact_segment =
        exact_evolution(spec, report.segment_time);
    const double budget = eps / segments;

    DiamondOptions quick = limits.diamond;
    quick.refine = false;
    Superoperator segment;
    double achieved = 0.0;
    for (unsigned r = 1;; r *= 2) {
        if (r > limits.max_r) {
            throw LimitError("eps = " + fmt(eps) + " not reached with r <= " +
                             std::to_string(limits.max_r) +
                             "; best per-segment bound " + fmt(achieved) +
                             " against a budget of " + fmt(budget));
        }
        SegmentPlan plan = plan_segment_for_time(spec, report.segment_time, r);
        if (limits.h && *limits.h < r) {
            plan = truncate_ancilla(plan, *limits.h);
        }
        const ChannelLCU lcu = m_delta_lcu(spec, plan.delta);
        segment = segment_channel(segment_operators(lcu, plan));
        achieved = diamond_bounds(segment - exact_segment, quick).upper;
        report.r = r;
        report.delta = plan.delta;
        report.p = plan.p;
        report.dilution_cos2 = plan.dilution_cos2;
        report.segment_upper = achieved;
        if (achieved <= budget) {
            break;
        }
    }

    report.channel = segment.power(segments);
    report.total = diamond_bounds(report.channel - exact_evolution(spec, t),
                                  limits.diamond);
    if (report.total.lower > eps) {
        throw LimitError("composed map is certified " + fmt(report.total.lower) +
                         " away from the exact evolution, above eps = " +
                         fmt(eps));
    }
    return report;
}

} // namespace lindsim
