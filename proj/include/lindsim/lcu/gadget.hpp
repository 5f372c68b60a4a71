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
 * The channel-LCU circuit W = (multi-B^dagger (x) I) multi-U (multi-B (x) I)
 * on indicator (x) purifier (x) system. Basis index of |k>|j>|s> is
 * (k * m_dim + j) * sys_dim + s.
 */
#pragma once

#include <cstddef>

#include "lindsim/lcu/channel_lcu.hpp"

namespace lindsim {

/// Block-diagonal over j; block j maps |0>|j> to sum_k sqrt(alpha_jk/s_j)|k>|j>
/// and is the identity when s_j = 0. Acts on indicator (x) purifier.
ComplexMatrix build_multi_b(const ChannelLCU &lcu, std::size_t q_dim);

/// |k>|j>|psi> -> |k>|j> U_jk |psi>, identity on padding slots. Throws
/// DomainError if some U_jk is not unitary to 1e-10.
ComplexMatrix build_multi_u(const ChannelLCU &lcu, std::size_t q_dim);

struct LcuGadget {
    std::size_t q_dim = 0;   ///< indicator dimension (longest row)
    std::size_t m_dim = 0;   ///< purifier dimension (number of rows)
    std::size_t sys_dim = 0;
    ComplexMatrix multi_b;   ///< on indicator (x) purifier
    ComplexMatrix multi_u;   ///< on the full space
    ComplexMatrix w;         ///< on the full space
    StateVector mu;          ///< on the purifier
    ChannelLCU lcu;

    static LcuGadget build(ChannelLCU lcu);
    [[nodiscard]] std::size_t full_dim() const noexcept {
        return q_dim * m_dim * sys_dim;
    }
};

struct WOutcome {
    /// Indicator-0 block of W|0>|mu>|psi>, on purifier (x) system; equals
    /// sqrt(p) sum_j |j> A_j |psi>.
    StateVector success_part;
    double p = 0.0;
};

/// Throws DomainError unless ||psi|| = 1.
WOutcome apply_w(const LcuGadget &gadget, const StateVector &psi);

} // namespace lindsim
