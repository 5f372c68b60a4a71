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
 * Dissipation through a reset ancilla: the joint Hamiltonian whose short-time
 * evolution followed by tracing out the ancilla approximates one Lindblad
 * step, and the experiments that bound how much joint evolution time such
 * schemes need.
 *
 * Joint operators act on ancilla (x) system with the ancilla as the more
 * significant factor, so block (a, b) of a joint matrix is the system
 * operator <a| M |b>.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "lindsim/channels/channels.hpp"
#include "lindsim/channels/diamond.hpp"
#include "lindsim/pauli/spec.hpp"

namespace lindsim {

struct DilationSpec {
    std::size_t system_dim = 0;
    std::size_t ancilla_dim = 0;  ///< m + 1
    ComplexMatrix j;              ///< Hermitian, zero block (0, 0)
    ComplexMatrix h_sys;          ///< system Hamiltonian
};

/// First block row (0, L_1^dagger, ..., L_m^dagger), first block column
/// (0, L_1, ..., L_m), zeros elsewhere.
DilationSpec build_j(const LindbladSpec &spec);

/// Joint Hamiltonian J + I (x) H_sys.
ComplexMatrix joint_hamiltonian(const DilationSpec &d);

/// rho -> Tr_anc[e^{-i H delta} (|0><0| (x) rho) e^{i H delta}].
Superoperator reset_step(const ComplexMatrix &h_joint, std::size_t ancilla_dim,
                         double delta);

/// N repetitions of: reset the ancilla, evolve by e^{-i J sqrt(t/N)}, evolve
/// the system by e^{-i H_sys t/N}, trace out the ancilla. Throws DomainError
/// for N < 1 or t <= 0.
Superoperator fig1_evolve(const DilationSpec &d, double t, unsigned n);

struct DiscretizationResult {
    unsigned n = 0;
    double delta = 0.0;
    /// Entry k-1 bounds ||step^k - e^{k (T/N) L}||_diamond.
    std::vector<DiamondBounds> per_stage_errors;
    double total_time = 0.0;    ///< N delta
    bool pass = false;          ///< every upper bound <= eps
    bool certified_fail = false; ///< some lower bound > eps
};

/// Compares the first N powers of reset_step(h_joint, delta) against the
/// Lindblad evolution sampled every T/N. Throws DomainError unless
/// ||h_joint|| = 1 to 1e-9, delta >= 0 and N >= 1.
DiscretizationResult discretization_check(const ComplexMatrix &h_joint,
                                          std::size_t ancilla_dim,
                                          const LindbladSpec &spec, double t,
                                          unsigned n, double delta, double eps,
                                          const DiamondOptions &options = {});

struct DeltaScan {
    double delta_pass = 0.0;    ///< smallest certified-pass delta found
    double delta_fail = 0.0;    ///< largest certified-fail delta below it
    double total_time = 0.0;    ///< N delta_pass
    double total_time_fail = 0.0; ///< N delta_fail
};

/// Uses H = joint_hamiltonian / its norm. Scans delta on a geometric grid up
/// to pi, then bisects both brackets. Throws DomainError if no delta passes.
DeltaScan min_delta_scan(const LindbladSpec &spec, double t, unsigned n,
                         double eps, const DiamondOptions &options = {});

struct LocalApprox {
    double dist = 0.0;        ///< ascent lower bound on the induced trace norm
    double choi_lower = 0.0;  ///< ||J||_1 / d of the difference
    double diamond_upper = 0.0;
    ComplexMatrix g;          ///< block (0, 0) of the joint Hamiltonian
};

/// Distance between reset_step(h_joint, delta) and the system-only unitary
/// channel of G = block (0, 0). Throws DomainError unless ||h_joint|| = 1 to
/// 1e-9.
LocalApprox local_approx_compare(const ComplexMatrix &h_joint,
                                 std::size_t ancilla_dim, double delta,
                                 const DiamondOptions &options = {});

} // namespace lindsim
