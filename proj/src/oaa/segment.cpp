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

#include "lindsim/oaa/segment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

namespace {

constexpr double kTotalTolerance = 1e-12;
constexpr std::size_t kMaxEnumeratedWords = 4096;

std::size_t m_delta_q_dim(const LindbladSpec &spec) {
    std::size_t row0 = 1 + spec.hamiltonian().terms.size();
    std::size_t longest = 0;
    for (const auto &j : spec.jumps()) {
        row0 += j.terms.size() * j.terms.size();
        longest = std::max(longest, j.terms.size());
    }
    return std::max(row0, longest);
}

SegmentPlan base_plan(const LindbladSpec &spec, unsigned r, double delta) {
    SegmentPlan plan;
    plan.r = r;
    plan.delta = delta;
    plan.p = success_parameter(spec, delta);
    plan.q_dim = m_delta_q_dim(spec);
    plan.m_dim = spec.m() + 1;
    plan.sys_dim = spec.dim();
    return plan;
}

void require_r(unsigned r) {
    if (r < 1) {
        throw DomainError("segment needs r >= 1");
    }
}

// Dilutes when p^r sits above 1/4; an exact 1/4 needs no extra qubit.
void apply_dilution(SegmentPlan &plan) {
    const double total = std::pow(plan.p, plan.r);
    if (total < plan.target_p_total - kTotalTolerance) {
        throw DomainError("success parameter p^r = " + std::to_string(total) +
                          " is already below the target " +
                          std::to_string(plan.target_p_total));
    }
    if (total > plan.target_p_total + kTotalTolerance) {
        plan.diluted = true;
        plan.dilution_cos2 = plan.target_p_total / total;
    }
}

} // namespace

std::vector<std::size_t> SegmentPlan::dims() const {
    std::vector<std::size_t> out;
    if (diluted) {
        out.push_back(2);
    }
    for (unsigned i = 0; i < r; ++i) {
        out.push_back(q_dim);
        out.push_back(m_dim);
    }
    out.push_back(sys_dim);
    return out;
}

double SegmentPlan::total_success() const {
    return dilution_cos2 * std::pow(p, r);
}

double solve_delta(const LindbladSpec &spec, unsigned r) {
    require_r(r);
    const double big_p = pauli_norm(spec);
    if (!(big_p > 0.0)) {
        throw DomainError("solve_delta needs a spec with positive Pauli norm");
    }
    const double c0 = spec.hamiltonian().beta_sum();
    // Rationalized root of (P + c0)^2/4 delta^2 + 2 P delta - x = 0 with
    // x = 4^{1/r} - 1; this form does not cancel for large r.
    const double x = std::expm1(std::log(4.0) / r);
    const double a = 0.25 * (big_p + c0) * (big_p + c0);
    return x / (big_p + std::sqrt(big_p * big_p + a * x));
}

double success_parameter(const LindbladSpec &spec, double delta) {
    if (!(delta >= 0.0)) {
        throw DomainError("delta must be non-negative");
    }
    const double big_p = pauli_norm(spec);
    const double c0 = spec.hamiltonian().beta_sum();
    const double half = 0.5 * (big_p + c0) * delta;
    return 1.0 / (1.0 + 2.0 * delta * big_p + half * half);
}

double dilute(double p_actual, double p_target) {
    if (!(p_target > 0.0) || !(p_actual <= 1.0) || !(p_target <= p_actual)) {
        throw DomainError("dilute needs 0 < p_target <= p_actual <= 1");
    }
    return std::acos(std::sqrt(p_target / p_actual));
}

SegmentPlan plan_segment(const LindbladSpec &spec, unsigned r) {
    return base_plan(spec, r, solve_delta(spec, r));
}

SegmentPlan plan_segment_for_time(const LindbladSpec &spec, double t_seg,
                                  unsigned r) {
    require_r(r);
    if (!(t_seg > 0.0)) {
        throw DomainError("segment time must be positive");
    }
    SegmentPlan plan = base_plan(spec, r, t_seg / r);
    apply_dilution(plan);
    return plan;
}

SegmentPlan plan_lcu_segment(const ChannelLCU &lcu, unsigned r) {
    require_r(r);
    SegmentPlan plan;
    plan.r = r;
    plan.p = lcu.p;
    plan.q_dim = std::max<std::size_t>(1, lcu.max_row_length());
    plan.m_dim = lcu.rows.size();
    plan.sys_dim = lcu.dim;
    apply_dilution(plan);
    return plan;
}

SegmentPlan truncate_ancilla(const SegmentPlan &plan, unsigned h) {
    if (h > plan.r) {
        throw DomainError("truncation weight h = " + std::to_string(h) +
                          " exceeds r = " + std::to_string(plan.r));
    }
    SegmentPlan out = plan;
    out.h = h;
    return out;
}

ComplexMatrix segment_kraus_gram(const KrausChannel &step, unsigned r) {
    ComplexMatrix s = ComplexMatrix::identity(step.dim());
    for (unsigned i = 0; i < r; ++i) {
        ComplexMatrix next(step.dim(), step.dim());
        for (const auto &a : step.operators()) {
            next += a.adjoint() * s * a;
        }
        s = std::move(next);
    }
    return s;
}

double tp_defect_segment(const KrausChannel &step, unsigned r) {
    return spectral_norm(segment_kraus_gram(step, r) -
                         ComplexMatrix::identity(step.dim()));
}

double tp_defect_segment_enumerated(const KrausChannel &step, unsigned r) {
    const std::size_t kinds = step.operators().size();
    double words = 1.0;
    for (unsigned i = 0; i < r; ++i) {
        words *= static_cast<double>(kinds);
    }
    if (words > static_cast<double>(kMaxEnumeratedWords)) {
        throw LimitError("enumerating " + std::to_string(kinds) + "^" +
                         std::to_string(r) + " Kraus words exceeds " +
                         std::to_string(kMaxEnumeratedWords));
    }
    const std::size_t count = static_cast<std::size_t>(words);
    const std::size_t d = step.dim();
    ComplexMatrix sum = ComplexMatrix::identity(d) * Complex(-1.0);
    std::vector<std::size_t> word(r, 0);
    for (std::size_t w = 0; w < count; ++w) {
        std::size_t rem = w;
        for (unsigned i = r; i-- > 0;) {
            word[i] = rem % kinds;
            rem /= kinds;
        }
        ComplexMatrix a = ComplexMatrix::identity(d);
        for (unsigned i = 0; i < r; ++i) {
            a = a * step.operators()[word[i]];
        }
        sum += a.adjoint() * a;
    }
    return spectral_norm(sum);
}

} // namespace lindsim
