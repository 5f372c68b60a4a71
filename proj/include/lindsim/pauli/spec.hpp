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
 * Lindbladian specifications: a Hamiltonian and jump operators, each a
 * non-negative combination of phased Pauli words.
 *
 * File format (JSON; bare keys accepted):
 *
 *     {n: 1,
 *      H: [{beta: 0.5, pauli: "Z"}],
 *      L: [[{beta: 0.5, pauli: "X"}, {beta: 0.5, pauli: "Y", phase: 1.5707963268}]]}
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lindsim/numerics/matrix.hpp"
#include "lindsim/pauli/pauli_string.hpp"

namespace lindsim {

struct PauliTerm {
    double beta = 0.0; ///< >= 0; the sign lives in the word's phase
    PauliString pauli;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// sum_k beta_k P_k over n qubits.
struct LinearCombinationOfPaulis {
    std::size_t n = 0;
    std::vector<PauliTerm> terms;

    /// sum_k beta_k.
    [[nodiscard]] double beta_sum() const;

    friend bool operator==(const LinearCombinationOfPaulis &,
                           const LinearCombinationOfPaulis &) = default;
};

ComplexMatrix lcp_to_matrix(const LinearCombinationOfPaulis &c);

class LindbladSpec {
  public:
    /// Validates and builds a spec. Throws SpecError on a negative beta, a
    /// qubit-count mismatch, an empty jump, or a non-Hermitian Hamiltonian.
    static LindbladSpec create(std::size_t n,
                               LinearCombinationOfPaulis hamiltonian,
                               std::vector<LinearCombinationOfPaulis> jumps);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << n_; }
    [[nodiscard]] std::size_t m() const noexcept { return jumps_.size(); }
    /// Largest term count over the Hamiltonian and every jump.
    [[nodiscard]] std::size_t q() const noexcept;

    [[nodiscard]] const LinearCombinationOfPaulis &hamiltonian() const noexcept {
        return hamiltonian_;
    }
    [[nodiscard]] const std::vector<LinearCombinationOfPaulis> &
    jumps() const noexcept {
        return jumps_;
    }
    /// Row j: 0 is the Hamiltonian, 1..m the jumps.
    [[nodiscard]] const LinearCombinationOfPaulis &row(std::size_t j) const;

    [[nodiscard]] ComplexMatrix hamiltonian_matrix() const;
    [[nodiscard]] std::vector<ComplexMatrix> jump_matrices() const;

    /// Drops beta = 0 terms, then jumps left without terms.
    [[nodiscard]] LindbladSpec canonicalize() const;

    friend bool operator==(const LindbladSpec &, const LindbladSpec &) = default;

  private:
    LindbladSpec() = default;

    std::size_t n_ = 0;
    LinearCombinationOfPaulis hamiltonian_;
    std::vector<LinearCombinationOfPaulis> jumps_;
};

/// Parses a specification document. Throws SpecError.
LindbladSpec parse_spec(std::string_view text);
/// Reads and parses a file. Throws SpecError (also for I/O failures).
LindbladSpec load_spec(const std::string &path);
/// Strict JSON that parse_spec maps back to an equal spec.
std::string serialize_spec(const LindbladSpec &spec);

/// sum_k beta_0k + sum_j (sum_k beta_jk)^2
double pauli_norm(const LindbladSpec &spec);
/// ||H|| + sum_j ||L_j||^2 with spectral norms of the dense operators.
double ops_norm(const LindbladSpec &spec);
/// sum_k ||beta_0k V_0k|| + sum_j ||L_j||^2, taking each Hamiltonian term as
/// one local summand.
double local_norm(const LindbladSpec &spec);

/// Amplitude damping on one qubit: H = 0, L = (X + iY)/2 = |0><1|.
LindbladSpec amplitude_damping_spec(double gamma = 1.0);

} // namespace lindsim
