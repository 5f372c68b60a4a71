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

#include <cstddef>
#include <span>
#include <vector>

#include "lindsim/channels/channels.hpp"
#include "lindsim/numerics/matrix.hpp"
#include "lindsim/pauli/spec.hpp"

namespace lindsim {

struct LcuTerm {
    double alpha = 0.0; ///< >= 0; scalar phases are folded into `unitary`
    ComplexMatrix unitary;
};

/// Kraus operators A_j = sum_k alpha_jk U_jk, one row per j = 0..m.
struct ChannelLCU {
    std::size_t dim = 0;                     ///< system dimension
    std::vector<std::vector<LcuTerm>> rows;  ///< rows[j][k]
    std::vector<double> s;                   ///< s_j = sum_k alpha_jk
    std::vector<double> c;                   ///< beta sums per row; empty if generic
    double p = 0.0;                          ///< 1 / sum_j s_j^2

    /// Computes s and p from the rows; c is left empty.
    static ChannelLCU from_rows(std::size_t dim,
                                std::vector<std::vector<LcuTerm>> rows);

    [[nodiscard]] std::size_t max_row_length() const;
    /// The operators sum_k alpha_jk U_jk.
    [[nodiscard]] std::vector<ComplexMatrix> kraus_operators() const;
};

/// A_0 = I - (delta/2) sum_j L_j^dagger L_j - i delta H and A_j = sqrt(delta) L_j.
/// Throws DomainError unless delta > 0.
KrausChannel m_delta_kraus(const LindbladSpec &spec, double delta);

/// The LCU of m_delta_kraus. Row 0 lists, in order: the identity with weight
/// 1; for every jump j and term pair (k, l) the word -V_jk^dagger V_jl with
/// weight (delta/2) beta_jk beta_jl; for every Hamiltonian term k the word
/// -i V_0k with weight delta beta_0k. Row j >= 1 lists V_jk with weight
/// sqrt(delta) beta_jk.
ChannelLCU m_delta_lcu(const LindbladSpec &spec, double delta);

/// Phased Pauli words of m_delta_lcu in the same slot order; the dense
/// unitaries there equal these words' matrices.
std::vector<std::vector<PauliString>> m_delta_lcu_words(const LindbladSpec &spec);

/// Unit vector proportional to sum_j s_j |j>, normalized over every j.
/// Throws DomainError if all s_j vanish or any is negative.
StateVector mu_state(std::span<const double> s);

/// p = 1 / (sum_k alpha_k)^2 for the plain LCU of a single operator.
double standard_lcu_success(std::span<const double> alphas);

} // namespace lindsim
