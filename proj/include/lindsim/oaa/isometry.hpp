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
 * State-vector simulation of one segment on the full register space.
 *
 * Layout, most significant first: the dilution qubit (if any), then for each
 * position i = 0..r-1 the pair (indicator k_i, purifier j_i) flattened as
 * k_i * m_dim + j_i, then the system. Position r-1 acts on the system first,
 * so the success block holds A_{j_0} ... A_{j_{r-1}} |psi>.
 *
 * The r-fold circuit is applied in layers: multi-B on every position, the
 * Hamming-weight projector (when a cap h is set), the controlled unitaries,
 * then multi-B^dagger. Without a cap this equals W applied r times.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "lindsim/channels/channels.hpp"
#include "lindsim/lcu/gadget.hpp"
#include "lindsim/oaa/segment.hpp"

namespace lindsim {

struct IsometryState {
    std::vector<std::size_t> dims;
    StateVector amplitudes;
};

class SegmentCircuit {
  public:
    /// Throws DimensionError if plan and gadget disagree on register sizes
    /// and LimitError if the full space exceeds kMaxAmplitudes.
    SegmentCircuit(SegmentPlan plan, LcuGadget gadget);

    static constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 22;

    [[nodiscard]] const SegmentPlan &plan() const noexcept { return plan_; }
    [[nodiscard]] const LcuGadget &gadget() const noexcept { return gadget_; }
    [[nodiscard]] std::size_t full_dim() const noexcept { return full_dim_; }

    /// |0>|0^r>|mu^r>|psi>; requires ||psi|| = 1.
    [[nodiscard]] IsometryState initial_state(const StateVector &psi) const;

    [[nodiscard]] IsometryState apply_w_hat(const IsometryState &state) const;
    [[nodiscard]] IsometryState
    apply_w_hat_adjoint(const IsometryState &state) const;
    /// Keeps dilution qubit and every indicator at 0.
    [[nodiscard]] IsometryState project_p0(const IsometryState &state) const;
    /// Projects onto |0>|0^r>|mu^r> (x) system.
    [[nodiscard]] IsometryState project_p1(const IsometryState &state) const;

    /// (2 P_0 What + What - 4 What P_1 What^dagger P_0 What)|Psi>.
    [[nodiscard]] IsometryState apply_f(const StateVector &psi) const;
    /// Ideal amplified state |0>|0^r> sum_j |j> Ahat_j |psi>, built by direct
    /// Kraus-word enumeration.
    [[nodiscard]] IsometryState target_state(const StateVector &psi) const;
    /// ||P_1 |Psi_perp>|| with |Psi_perp> = What^dagger(sqrt(3)/2 |Phi> -
    /// 1/2 |Phi_perp>) and |Phi_perp> solving What|Psi> = |Phi>/2 +
    /// sqrt(3)/2 |Phi_perp>.
    [[nodiscard]] double perp_leakage(const StateVector &psi) const;

    /// (<Psi| (x) I) What^dagger P_0 What (|Psi> (x) I) on the system.
    [[nodiscard]] ComplexMatrix q_operator() const;
    /// Channel of F after tracing out every ancilla register.
    [[nodiscard]] Superoperator extract_channel() const;

  private:
    void check(const IsometryState &state) const;
    void apply_positions(StateVector &v, bool adjoint_b) const;
    void apply_truncation(StateVector &v) const;
    void apply_controlled(StateVector &v, bool adjoint) const;
    void apply_dilution(StateVector &v, bool adjoint) const;
    [[nodiscard]] IsometryState wrap(StateVector v) const;

    SegmentPlan plan_;
    LcuGadget gadget_;
    std::size_t reg_dim_ = 0;     ///< q_dim * m_dim
    std::size_t anc_dim_ = 0;     ///< reg_dim^r
    std::size_t full_dim_ = 0;
    std::vector<ComplexMatrix> slot_unitaries_; ///< by register value
    std::vector<unsigned> weight_;               ///< by ancilla index
    std::vector<Complex> mu_hat_;                ///< by ancilla index
};

} // namespace lindsim
