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
#include <string>
#include <string_view>

#include "lindsim/numerics/matrix.hpp"

namespace lindsim {

/// A unit scalar e^{i theta}. Multiples of pi/2 are held exactly as quarter
/// turns so that products of Pauli phases stay exact; any other angle is held
/// in `residual` with zero quarter turns.
class Phase {
  public:
    constexpr Phase() = default;

    /// Angles within 1e-9 of a multiple of pi/2 snap to that multiple.
    static Phase from_angle(double theta);
    static constexpr Phase quarter_turns(int k) {
        Phase p;
        p.quarters_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
        return p;
    }

    [[nodiscard]] int quarters() const noexcept { return quarters_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }
    /// theta in [0, 2 pi).
    [[nodiscard]] double angle() const noexcept;
    [[nodiscard]] Complex value() const noexcept;
    [[nodiscard]] bool is_exact() const noexcept { return residual_ == 0.0; }

    [[nodiscard]] Phase conj() const noexcept;
    friend Phase operator*(Phase a, Phase b) noexcept;
    friend bool operator==(const Phase &, const Phase &) = default;

  private:
    std::uint8_t quarters_ = 0;
    double residual_ = 0.0; ///< in (0, 2 pi) or exactly zero
};

/// A phased n-qubit Pauli word e^{i theta} P_1 (x) ... (x) P_n. The first
/// letter acts on the most significant qubit.
class PauliString {
  public:
    PauliString() = default;
    /// Throws DomainError on letters outside "IXYZ" or an empty word.
    explicit PauliString(std::string_view letters, Phase phase = {});

    static PauliString identity(std::size_t n);

    [[nodiscard]] std::size_t n() const noexcept { return letters_.size(); }
    [[nodiscard]] const std::string &letters() const noexcept {
        return letters_;
    }
    [[nodiscard]] Phase phase() const noexcept { return phase_; }
    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] PauliString adjoint() const;
    [[nodiscard]] PauliString with_phase(Phase phase) const;

    /// 2^n x 2^n matrix; throws LimitError above 12 qubits.
    [[nodiscard]] ComplexMatrix dense() const;

    friend bool operator==(const PauliString &,
                           const PauliString &) = default;

  private:
    std::string letters_;
    Phase phase_;
};

/// Exact product a * b as a phased Pauli word. Throws DimensionError when
/// the qubit counts differ.
PauliString pauli_multiply(const PauliString &a, const PauliString &b);

} // namespace lindsim
