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

#include "lindsim/pauli/pauli_string.hpp"

#include <cmath>
#include <numbers>

#include "lindsim/error.hpp"

namespace lindsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQuarter = std::numbers::pi / 2.0;
constexpr double kSnapTolerance = 1e-9;
constexpr std::size_t kMaxDenseQubits = 12;

double wrap_angle(double theta) {
    double w = std::fmod(theta, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    if (w >= kTwoPi) {
        w = 0.0;
    }
    return w;
}

// Index of a letter in "IXYZ".
int letter_code(char c) {
    switch (c) {
    case 'I':
        return 0;
    case 'X':
        return 1;
    case 'Y':
        return 2;
    case 'Z':
        return 3;
    default:
        return -1;
    }
}

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

} // namespace

Phase Phase::from_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("phase angle must be finite");
    }
    const double w = wrap_angle(theta);
    const double k = std::round(w / kQuarter);
    Phase p;
    if (std::abs(w - k * kQuarter) <= kSnapTolerance) {
        p.quarters_ = static_cast<std::uint8_t>(static_cast<int>(k) % 4);
    } else {
        p.residual_ = w;
    }
    return p;
}

double Phase::angle() const noexcept {
    return wrap_angle(quarters_ * kQuarter + residual_);
}

Complex Phase::value() const noexcept {
    static constexpr Complex kQuarterValues[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    if (residual_ == 0.0) {
        return kQuarterValues[quarters_];
    }
    return kQuarterValues[quarters_] * std::polar(1.0, residual_);
}

Phase Phase::conj() const noexcept {
    if (residual_ != 0.0) {
        return Phase::from_angle(-angle());
    }
    return Phase::quarter_turns(4 - quarters_);
}

Phase operator*(Phase a, Phase b) noexcept {
    if (a.residual_ != 0.0 || b.residual_ != 0.0) {
        // Inexact phases keep quarters_ = 0 so that equal angles compare
        // equal; residuals that cancel snap back to an exact multiple.
        return Phase::from_angle(a.angle() + b.angle());
    }
    return Phase::quarter_turns(a.quarters_ + b.quarters_);
}

PauliString::PauliString(std::string_view letters, Phase phase)
    : letters_(letters), phase_(phase) {
    if (letters_.empty()) {
        throw DomainError("Pauli word must act on at least one qubit");
    }
    for (char c : letters_) {
        if (letter_code(c) < 0) {
            throw DomainError("Pauli word \"" + letters_ +
                              "\" has a letter outside IXYZ");
        }
    }
}

PauliString PauliString::identity(std::size_t n) {
    return PauliString(std::string(n, 'I'));
}

bool PauliString::is_identity() const noexcept {
    return letters_.find_first_not_of('I') == std::string::npos;
}

PauliString PauliString::adjoint() const {
    PauliString p = *this;
    p.phase_ = phase_.conj();
    return p;
}

PauliString PauliString::with_phase(Phase phase) const {
    PauliString p = *this;
    p.phase_ = phase;
    return p;
}

ComplexMatrix PauliString::dense() const {
    const std::size_t n = letters_.size();
    if (n > kMaxDenseQubits) {
        throw LimitError("dense Pauli matrix requested for " +
                         std::to_string(n) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    std::size_t flip = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const int code = letter_code(letters_[pos]);
        if (code == 1 || code == 2) {
            flip |= std::size_t{1} << (n - 1 - pos);
        }
    }
    ComplexMatrix m(dim, dim);
    const Complex global = phase_.value();
    for (std::size_t row = 0; row < dim; ++row) {
        // Y has entries -i (row bit 0) and +i (row bit 1); Z has +1 and -1.
        int quarters = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            const bool bit = (row >> (n - 1 - pos)) & 1U;
            switch (letter_code(letters_[pos])) {
            case 2:
                quarters += bit ? 1 : 3;
                break;
            case 3:
                quarters += bit ? 2 : 0;
                break;
            default:
                break;
            }
        }
        m(row, row ^ flip) = Phase::quarter_turns(quarters).value() * global;
    }
    return m;
}

PauliString pauli_multiply(const PauliString &a, const PauliString &b) {
    if (a.n() != b.n()) {
        throw DimensionError("pauli_multiply: " + std::to_string(a.n()) +
                             " and " + std::to_string(b.n()) + " qubits");
    }
    // Single-qubit products: XY = iZ, YZ = iX, ZX = iY and reversed order
    // picks up -i. With codes X=1, Y=2, Z=3 the cyclic order is 1->2->3.
    std::string letters(a.n(), 'I');
    int quarters = 0;
    for (std::size_t pos = 0; pos < a.n(); ++pos) {
        const int x = letter_code(a.letters()[pos]);
        const int y = letter_code(b.letters()[pos]);
        letters[pos] = kLetters[x ^ y];
        if (x != 0 && y != 0 && x != y) {
            quarters += ((y - x + 3) % 3 == 1) ? 1 : 3;
        }
    }
    return PauliString(letters,
                       a.phase() * b.phase() * Phase::quarter_turns(quarters));
}

} // namespace lindsim
