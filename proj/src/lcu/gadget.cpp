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

#include "lindsim/lcu/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

ComplexMatrix build_multi_b(const ChannelLCU &lcu, std::size_t q_dim) {
    const std::size_t m_dim = lcu.rows.size();
    if (q_dim < lcu.max_row_length()) {
        throw DimensionError("indicator dimension " + std::to_string(q_dim) +
                             " is shorter than the longest LCU row");
    }
    ComplexMatrix b(q_dim * m_dim, q_dim * m_dim);
    for (std::size_t j = 0; j < m_dim; ++j) {
        ComplexMatrix block = ComplexMatrix::identity(q_dim);
        if (lcu.s[j] > 0.0) {
            StateVector first(q_dim);
            for (std::size_t k = 0; k < lcu.rows[j].size(); ++k) {
                first[k] = std::sqrt(lcu.rows[j][k].alpha / lcu.s[j]);
            }
            // s_j is the row sum, so `first` is a unit vector up to rounding.
            block = unitary_from_first_column(first.normalized());
        }
        for (std::size_t k = 0; k < q_dim; ++k) {
            for (std::size_t kp = 0; kp < q_dim; ++kp) {
                b(k * m_dim + j, kp * m_dim + j) = block(k, kp);
            }
        }
    }
    return b;
}

ComplexMatrix build_multi_u(const ChannelLCU &lcu, std::size_t q_dim) {
    const std::size_t m_dim = lcu.rows.size();
    const std::size_t d = lcu.dim;
    if (q_dim < lcu.max_row_length()) {
        throw DimensionError("indicator dimension " + std::to_string(q_dim) +
                             " is shorter than the longest LCU row");
    }
    ComplexMatrix u(q_dim * m_dim * d, q_dim * m_dim * d);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    for (std::size_t k = 0; k < q_dim; ++k) {
        for (std::size_t j = 0; j < m_dim; ++j) {
            const bool real_slot = k < lcu.rows[j].size();
            const ComplexMatrix &block =
                real_slot ? lcu.rows[j][k].unitary : id;
            if (real_slot && !is_unitary(block, 1e-10)) {
                throw DomainError("LCU term (" + std::to_string(j) + ", " +
                                  std::to_string(k) + ") is not unitary");
            }
            const std::size_t base = (k * m_dim + j) * d;
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = 0; b < d; ++b) {
                    u(base + a, base + b) = block(a, b);
                }
            }
        }
    }
    return u;
}

LcuGadget LcuGadget::build(ChannelLCU lcu) {
    LcuGadget g;
    g.q_dim = std::max<std::size_t>(1, lcu.max_row_length());
    g.m_dim = lcu.rows.size();
    g.sys_dim = lcu.dim;
    g.multi_b = build_multi_b(lcu, g.q_dim);
    g.multi_u = build_multi_u(lcu, g.q_dim);
    const ComplexMatrix b_full =
        kron(g.multi_b, ComplexMatrix::identity(g.sys_dim));
    g.w = b_full.adjoint() * g.multi_u * b_full;
    g.mu = mu_state(lcu.s);
    g.lcu = std::move(lcu);
    return g;
}

WOutcome apply_w(const LcuGadget &gadget, const StateVector &psi) {
    if (psi.dim() != gadget.sys_dim) {
        throw DimensionError("apply_w: state has dimension " +
                             std::to_string(psi.dim()) + ", system is " +
                             std::to_string(gadget.sys_dim));
    }
    psi.require_normalized();
    // |0>_indicator |mu> |psi>
    StateVector input(gadget.full_dim());
    for (std::size_t j = 0; j < gadget.m_dim; ++j) {
        for (std::size_t s = 0; s < gadget.sys_dim; ++s) {
            input[j * gadget.sys_dim + s] = gadget.mu[j] * psi[s];
        }
    }
    const StateVector out = gadget.w * input;
    WOutcome result;
    result.p = gadget.lcu.p;
    result.success_part = StateVector(gadget.m_dim * gadget.sys_dim);
    for (std::size_t i = 0; i < gadget.m_dim * gadget.sys_dim; ++i) {
        result.success_part[i] = out[i];
    }
    return result;
}

} // namespace lindsim
