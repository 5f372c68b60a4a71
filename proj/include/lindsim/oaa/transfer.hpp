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
 * Exact segment quantities on the system alone, at cost polynomial in r.
 *
 * Write What|Psi> = sum_x |x> V_x |psi> over ancilla basis states x, and let
 * G be the success outcomes (dilution qubit and all indicators at 0). The
 * amplified output is F|Psi> = sum_x |x> F_x |psi> with
 *
 *     F_x = V_x (3I - 4Q) for x in G,    F_x = V_x (I - 4Q) otherwise,
 *
 * where Q = sum_{x in G} V_x^dagger V_x. Everything the amplification does is
 * therefore fixed by two channels on the system, X -> sum_x V_x X V_x^dagger
 * over all outcomes and over G only, and by a few Gram operators. Both
 * channels factor over positions, with a weight counter when a Hamming cap
 * is set.
 */
#pragma once

#include "lindsim/channels/channels.hpp"
#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/oaa/segment.hpp"

namespace lindsim {

struct SegmentOperators {
    std::size_t dim = 0;
    Superoperator all;       ///< X -> sum_x V_x X V_x^dagger, every outcome
    Superoperator success;   ///< same sum over success outcomes only
    ComplexMatrix q;         ///< sum_{x in G} V_x^dagger V_x
    ComplexMatrix all_gram;  ///< sum_x V_x^dagger V_x; I without a cap
    /// sum_{x in G} V_x^dagger Ahat_x with the uncapped Kraus words Ahat.
    ComplexMatrix mixed_gram;
    /// sum_j Ahat_j^dagger Ahat_j over uncapped Kraus words.
    ComplexMatrix word_gram;
    /// Probability mass removed by the Hamming cap; 0 without one.
    double discarded_mass = 0.0;
};

SegmentOperators segment_operators(const ChannelLCU &lcu,
                                   const SegmentPlan &plan);

/// The channel of F after tracing out the ancillas.
Superoperator segment_channel(const SegmentOperators &ops);

/// E with <psi|E|psi> = ||F|Psi> - |Phi>||^2 for every system state psi.
ComplexMatrix oaa_error_operator(const SegmentOperators &ops);
/// max over unit psi of ||F|Psi> - |Phi>||.
double oaa_error(const SegmentOperators &ops);
double oaa_error(const SegmentOperators &ops, const StateVector &psi);

/// Operator P on the system with ||P_1|Psi_perp>|| = ||P psi||, where
/// |Psi_perp> = What^dagger(sqrt(3)/2 |Phi> - 1/2 |Phi_perp>).
ComplexMatrix perp_leakage_operator(const SegmentOperators &ops);
double perp_leakage(const SegmentOperators &ops, const StateVector &psi);

/// P(Binomial(r, pi) > h) with pi = 1 - p s_0 alpha_00, the chance that a
/// position leaves the all-zero register value.
double hamming_tail(const ChannelLCU &lcu, unsigned r, unsigned h);

} // namespace lindsim
