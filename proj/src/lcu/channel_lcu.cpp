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

#include "lindsim/lcu/channel_lcu.hpp"

#include <algorithm>
#include <cmath>

#include "lindsim/error.hpp"

namespace lindsim {

namespace {

void require_positive_delta(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw DomainError("delta must be positive and finite");
    }
}

// Weights of m_delta_lcu_words in the same slot order.
std::vector<std::vector<double>> m_delta_weights(const LindbladSpec &spec,
                                                 double delta) {
    std::vector<std::vector<double>> rows(spec.m() + 1);
    rows[0].push_back(1.0);
    for (const auto &jump : spec.jumps()) {
        for (const auto &tk : jump.terms) {
            for (const auto &tl : jump.terms) {
                rows[0].push_back(0.5 * delta * tk.beta * tl.beta);
            }
        }
    }
    for (const auto &t : spec.hamiltonian().terms) {
        rows[0].push_back(delta * t.beta);
    }
    const double root = std::sqrt(delta);
    for (std::size_t j = 1; j <= spec.m(); ++j) {
        for (const auto &t : spec.row(j).terms) {
            rows[j].push_back(root * t.beta);
        }
    }
    return rows;
}

} // namespace

ChannelLCU ChannelLCU::from_rows(std::size_t dim,
                                 std::vector<std::vector<LcuTerm>> rows) {
    if (rows.empty()) {
        throw DimensionError("channel LCU needs at least one row");
    }
    ChannelLCU lcu;
    lcu.dim = dim;
    double total = 0.0;
    for (const auto &row : rows) {
        double s = 0.0;
        for (const auto &term : row) {
            if (!(term.alpha >= 0.0)) {
                throw DomainError("LCU weights must be non-negative");
            }
            if (term.unitary.rows() != dim || term.unitary.cols() != dim) {
                throw DimensionError("LCU unitary has the wrong dimension");
            }
            s += term.alpha;
        }
        lcu.s.push_back(s);
        total += s * s;
    }
    if (total == 0.0) {
        throw DomainError("channel LCU has all weights zero");
    }
    lcu.rows = std::move(rows);
    lcu.p = 1.0 / total;
    return lcu;
}

std::size_t ChannelLCU::max_row_length() const {
    std::size_t best = 0;
    for (const auto &row : rows) {
        best = std::max(best, row.size());
    }
    return best;
}

std::vector<ComplexMatrix> ChannelLCU::kraus_operators() const {
    std::vector<ComplexMatrix> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        ComplexMatrix a(dim, dim);
        for (const auto &term : row) {
            a += term.unitary * Complex(term.alpha);
        }
        out.push_back(std::move(a));
    }
    return out;
}

KrausChannel m_delta_kraus(const LindbladSpec &spec, double delta) {
    require_positive_delta(delta);
    const std::size_t d = spec.dim();
    const auto jumps = spec.jump_matrices();
    ComplexMatrix a0 = ComplexMatrix::identity(d);
    a0 -= spec.hamiltonian_matrix() * Complex(0.0, delta);
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix());
    for (const auto &l : jumps) {
        a0 -= l.adjoint() * l * Complex(0.5 * delta);
        ops.push_back(l * Complex(std::sqrt(delta)));
    }
    ops[0] = std::move(a0);
    return KrausChannel(std::move(ops));
}

std::vector<std::vector<PauliString>> m_delta_lcu_words(const LindbladSpec &spec) {
    std::vector<std::vector<PauliString>> rows(spec.m() + 1);
    const Phase minus_one = Phase::quarter_turns(2);
    const Phase minus_i = Phase::quarter_turns(3);
    rows[0].push_back(PauliString::identity(spec.n()));
    for (const auto &jump : spec.jumps()) {
        for (const auto &tk : jump.terms) {
            for (const auto &tl : jump.terms) {
                const PauliString prod =
                    pauli_multiply(tk.pauli.adjoint(), tl.pauli);
                rows[0].push_back(prod.with_phase(prod.phase() * minus_one));
            }
        }
    }
    for (const auto &t : spec.hamiltonian().terms) {
        rows[0].push_back(t.pauli.with_phase(t.pauli.phase() * minus_i));
    }
    for (std::size_t j = 1; j <= spec.m(); ++j) {
        for (const auto &t : spec.row(j).terms) {
            rows[j].push_back(t.pauli);
        }
    }
    return rows;
}

ChannelLCU m_delta_lcu(const LindbladSpec &spec, double delta) {
    require_positive_delta(delta);
    const auto words = m_delta_lcu_words(spec);
    const auto weights = m_delta_weights(spec, delta);
    std::vector<std::vector<LcuTerm>> rows(words.size());
    for (std::size_t j = 0; j < words.size(); ++j) {
        for (std::size_t k = 0; k < words[j].size(); ++k) {
            rows[j].push_back({weights[j][k], words[j][k].dense()});
        }
    }
    ChannelLCU lcu = ChannelLCU::from_rows(spec.dim(), std::move(rows));

    // Closed forms; they agree with the row sums above by construction.
    lcu.c.resize(spec.m() + 1);
    for (std::size_t j = 0; j <= spec.m(); ++j) {
        lcu.c[j] = spec.row(j).beta_sum();
    }
    double jump_sq = 0.0;
    for (std::size_t j = 1; j <= spec.m(); ++j) {
        jump_sq += lcu.c[j] * lcu.c[j];
        lcu.s[j] = std::sqrt(delta) * lcu.c[j];
    }
    lcu.s[0] = 1.0 + 0.5 * delta * jump_sq + delta * lcu.c[0];
    double total = 0.0;
    for (double s : lcu.s) {
        total += s * s;
    }
    lcu.p = 1.0 / total;
    return lcu;
}

StateVector mu_state(std::span<const double> s) {
    double total = 0.0;
    for (double v : s) {
        if (!(v >= 0.0)) {
            throw DomainError("mu_state: weights must be non-negative");
        }
        total += v * v;
    }
    if (total == 0.0) {
        throw DomainError("mu_state: all weights are zero");
    }
    const double norm = std::sqrt(total);
    StateVector mu(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        mu[j] = s[j] / norm;
    }
    return mu;
}

double standard_lcu_success(std::span<const double> alphas) {
    double sum = 0.0;
    for (double a : alphas) {
        if (!(a >= 0.0)) {
            throw DomainError("standard_lcu_success: weights must be non-negative");
        }
        sum += a;
    }
    if (sum == 0.0) {
        throw DomainError("standard_lcu_success: all weights are zero");
    }
    return 1.0 / (sum * sum);
}

} // namespace lindsim
