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

#include "lindsim/oaa/isometry.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "lindsim/error.hpp"

namespace lindsim {

namespace {

// Multiplies every fiber of `v` along one axis by `m`. The axis has
// dimension m.rows() and stride `stride` in the flattened index.
void apply_along_axis(StateVector &v, const ComplexMatrix &m,
                      std::size_t stride) {
    const std::size_t n = m.rows();
    const std::size_t block = n * stride;
    std::vector<Complex> in(n);
    std::vector<Complex> out(n);
    for (std::size_t base = 0; base < v.dim(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t a = 0; a < n; ++a) {
                in[a] = v[base + a * stride + off];
            }
            for (std::size_t a = 0; a < n; ++a) {
                Complex acc = 0.0;
                for (std::size_t b = 0; b < n; ++b) {
                    acc += m(a, b) * in[b];
                }
                out[a] = acc;
            }
            for (std::size_t a = 0; a < n; ++a) {
                v[base + a * stride + off] = out[a];
            }
        }
    }
}

} // namespace

SegmentCircuit::SegmentCircuit(SegmentPlan plan, LcuGadget gadget)
    : plan_(std::move(plan)), gadget_(std::move(gadget)) {
    if (plan_.q_dim != gadget_.q_dim || plan_.m_dim != gadget_.m_dim ||
        plan_.sys_dim != gadget_.sys_dim) {
        throw DimensionError("segment plan and LCU gadget disagree on "
                             "register dimensions");
    }
    reg_dim_ = plan_.q_dim * plan_.m_dim;
    const std::size_t prefix = plan_.diluted ? 2 : 1;
    const double estimate = prefix * std::pow(static_cast<double>(reg_dim_),
                                              static_cast<double>(plan_.r)) *
                            static_cast<double>(plan_.sys_dim);
    if (estimate > static_cast<double>(kMaxAmplitudes)) {
        throw LimitError("segment state space of " + std::to_string(estimate) +
                         " amplitudes exceeds the limit of " +
                         std::to_string(kMaxAmplitudes));
    }
    anc_dim_ = 1;
    for (unsigned i = 0; i < plan_.r; ++i) {
        anc_dim_ *= reg_dim_;
    }
    full_dim_ = prefix * anc_dim_ * plan_.sys_dim;

    const ComplexMatrix id = ComplexMatrix::identity(plan_.sys_dim);
    slot_unitaries_.assign(reg_dim_, id);
    for (std::size_t k = 0; k < plan_.q_dim; ++k) {
        for (std::size_t j = 0; j < plan_.m_dim; ++j) {
            const auto &row = gadget_.lcu.rows[j];
            if (k < row.size()) {
                slot_unitaries_[k * plan_.m_dim + j] = row[k].unitary;
            }
        }
    }

    weight_.assign(anc_dim_, 0);
    mu_hat_.assign(anc_dim_, Complex(0.0));
    for (std::size_t anc = 0; anc < anc_dim_; ++anc) {
        std::size_t rem = anc;
        unsigned weight = 0;
        bool indicators_zero = true;
        Complex mu = 1.0;
        for (unsigned i = 0; i < plan_.r; ++i) {
            const std::size_t digit = rem % reg_dim_;
            rem /= reg_dim_;
            weight += digit != 0 ? 1U : 0U;
            if (digit >= plan_.m_dim) {
                indicators_zero = false;
            } else {
                mu *= gadget_.mu[digit];
            }
        }
        weight_[anc] = weight;
        mu_hat_[anc] = indicators_zero ? mu : Complex(0.0);
    }
}

void SegmentCircuit::check(const IsometryState &state) const {
    if (state.amplitudes.dim() != full_dim_) {
        throw DimensionError("isometry state has dimension " +
                             std::to_string(state.amplitudes.dim()) +
                             ", segment expects " + std::to_string(full_dim_));
    }
}

IsometryState SegmentCircuit::wrap(StateVector v) const {
    return IsometryState{plan_.dims(), std::move(v)};
}

void SegmentCircuit::apply_positions(StateVector &v, bool adjoint_b) const {
    const ComplexMatrix b =
        adjoint_b ? gadget_.multi_b.adjoint() : gadget_.multi_b;
    std::size_t stride = plan_.sys_dim;
    for (unsigned i = 0; i < plan_.r; ++i) {
        apply_along_axis(v, b, stride);
        stride *= reg_dim_;
    }
}

void SegmentCircuit::apply_truncation(StateVector &v) const {
    if (!plan_.h) {
        return;
    }
    const std::size_t d = plan_.sys_dim;
    for (std::size_t block = 0; block < full_dim_ / d; ++block) {
        if (weight_[block % anc_dim_] > *plan_.h) {
            for (std::size_t s = 0; s < d; ++s) {
                v[block * d + s] = 0.0;
            }
        }
    }
}

void SegmentCircuit::apply_controlled(StateVector &v, bool adjoint) const {
    const std::size_t d = plan_.sys_dim;
    std::vector<ComplexMatrix> ops = slot_unitaries_;
    if (adjoint) {
        for (auto &u : ops) {
            u = u.adjoint();
        }
    }
    std::vector<std::size_t> digits(plan_.r);
    StateVector x(d);
    for (std::size_t block = 0; block < full_dim_ / d; ++block) {
        std::size_t rem = block % anc_dim_;
        for (unsigned i = plan_.r; i-- > 0;) {
            digits[i] = rem % reg_dim_;
            rem /= reg_dim_;
        }
        for (std::size_t s = 0; s < d; ++s) {
            x[s] = v[block * d + s];
        }
        // Forward: position r-1 acts first. Adjoint reverses the order.
        for (unsigned step = 0; step < plan_.r; ++step) {
            const unsigned i = adjoint ? step : plan_.r - 1 - step;
            x = ops[digits[i]] * x;
        }
        for (std::size_t s = 0; s < d; ++s) {
            v[block * d + s] = x[s];
        }
    }
}

void SegmentCircuit::apply_dilution(StateVector &v, bool adjoint) const {
    if (!plan_.diluted) {
        return;
    }
    const double c = std::sqrt(plan_.dilution_cos2);
    const double s = std::sqrt(1.0 - plan_.dilution_cos2);
    const double sign = adjoint ? -1.0 : 1.0;
    const ComplexMatrix rot{{c, sign * -s}, {sign * s, c}};
    apply_along_axis(v, rot, anc_dim_ * plan_.sys_dim);
}

IsometryState SegmentCircuit::initial_state(const StateVector &psi) const {
    if (psi.dim() != plan_.sys_dim) {
        throw DimensionError("initial_state: system state has dimension " +
                             std::to_string(psi.dim()));
    }
    psi.require_normalized();
    StateVector v(full_dim_);
    for (std::size_t anc = 0; anc < anc_dim_; ++anc) {
        if (mu_hat_[anc] == Complex(0.0)) {
            continue;
        }
        for (std::size_t s = 0; s < plan_.sys_dim; ++s) {
            v[anc * plan_.sys_dim + s] = mu_hat_[anc] * psi[s];
        }
    }
    return wrap(std::move(v));
}

IsometryState SegmentCircuit::apply_w_hat(const IsometryState &state) const {
    check(state);
    StateVector v = state.amplitudes;
    apply_dilution(v, false);
    apply_positions(v, false);
    apply_truncation(v);
    apply_controlled(v, false);
    apply_positions(v, true);
    return wrap(std::move(v));
}

IsometryState
SegmentCircuit::apply_w_hat_adjoint(const IsometryState &state) const {
    check(state);
    StateVector v = state.amplitudes;
    apply_dilution(v, true);
    apply_positions(v, false);
    apply_truncation(v);
    apply_controlled(v, true);
    apply_positions(v, true);
    return wrap(std::move(v));
}

IsometryState SegmentCircuit::project_p0(const IsometryState &state) const {
    check(state);
    StateVector v(full_dim_);
    const std::size_t d = plan_.sys_dim;
    for (std::size_t anc = 0; anc < anc_dim_; ++anc) {
        std::size_t rem = anc;
        bool keep = true;
        for (unsigned i = 0; i < plan_.r && keep; ++i) {
            keep = rem % reg_dim_ < plan_.m_dim;
            rem /= reg_dim_;
        }
        if (!keep) {
            continue;
        }
        // The dilution qubit, if present, is the leading factor; its |0>
        // half occupies the first anc_dim * d entries.
        for (std::size_t s = 0; s < d; ++s) {
            v[anc * d + s] = state.amplitudes[anc * d + s];
        }
    }
    return wrap(std::move(v));
}

IsometryState SegmentCircuit::project_p1(const IsometryState &state) const {
    check(state);
    const std::size_t d = plan_.sys_dim;
    StateVector coeff(d);
    for (std::size_t anc = 0; anc < anc_dim_; ++anc) {
        const Complex mu = std::conj(mu_hat_[anc]);
        if (mu == Complex(0.0)) {
            continue;
        }
        for (std::size_t s = 0; s < d; ++s) {
            coeff[s] += mu * state.amplitudes[anc * d + s];
        }
    }
    StateVector v(full_dim_);
    for (std::size_t anc = 0; anc < anc_dim_; ++anc) {
        for (std::size_t s = 0; s < d; ++s) {
            v[anc * d + s] = mu_hat_[anc] * coeff[s];
        }
    }
    return wrap(std::move(v));
}

IsometryState SegmentCircuit::apply_f(const StateVector &psi) const {
    const IsometryState start = initial_state(psi);
    const IsometryState w = apply_w_hat(start);
    const IsometryState p0w = project_p0(w);
    const IsometryState back = project_p1(apply_w_hat_adjoint(p0w));
    const IsometryState again = apply_w_hat(back);
    StateVector out = Complex(2.0) * p0w.amplitudes;
    out += w.amplitudes;
    out -= Complex(4.0) * again.amplitudes;
    return wrap(std::move(out));
}

IsometryState SegmentCircuit::target_state(const StateVector &psi) const {
    if (psi.dim() != plan_.sys_dim) {
        throw DimensionError("target_state: system state has dimension " +
                             std::to_string(psi.dim()));
    }
    const auto kraus = gadget_.lcu.kraus_operators();
    const std::size_t d = plan_.sys_dim;
    StateVector v(full_dim_);
    std::vector<std::size_t> digits(plan_.r);
    for (std::size_t anc = 0; anc < anc_dim_; ++anc) {
        std::size_t rem = anc;
        bool indicators_zero = true;
        for (unsigned i = plan_.r; i-- > 0;) {
            digits[i] = rem % reg_dim_;
            rem /= reg_dim_;
            indicators_zero = indicators_zero && digits[i] < plan_.m_dim;
        }
        if (!indicators_zero) {
            continue;
        }
        StateVector x = psi;
        for (unsigned i = plan_.r; i-- > 0;) {
            x = kraus[digits[i]] * x;
        }
        for (std::size_t s = 0; s < d; ++s) {
            v[anc * d + s] = x[s];
        }
    }
    return wrap(std::move(v));
}

double SegmentCircuit::perp_leakage(const StateVector &psi) const {
    const double root3 = std::sqrt(3.0);
    const IsometryState w = apply_w_hat(initial_state(psi));
    const IsometryState phi = target_state(psi);
    StateVector phi_perp = w.amplitudes - Complex(0.5) * phi.amplitudes;
    phi_perp *= Complex(2.0 / root3);
    StateVector y = Complex(root3 / 2.0) * phi.amplitudes;
    y -= Complex(0.5) * phi_perp;
    const IsometryState psi_perp = apply_w_hat_adjoint(wrap(std::move(y)));
    return project_p1(psi_perp).amplitudes.norm();
}

ComplexMatrix SegmentCircuit::q_operator() const {
    const std::size_t d = plan_.sys_dim;
    std::vector<StateVector> columns;
    columns.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        columns.push_back(
            project_p0(apply_w_hat(initial_state(StateVector::basis(d, i))))
                .amplitudes);
    }
    ComplexMatrix q(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            q(i, j) = inner(columns[i], columns[j]);
        }
    }
    return q;
}

Superoperator SegmentCircuit::extract_channel() const {
    const std::size_t d = plan_.sys_dim;
    std::vector<StateVector> outputs;
    outputs.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        outputs.push_back(apply_f(StateVector::basis(d, i)).amplitudes);
    }
    const std::size_t blocks = full_dim_ / d;
    ComplexMatrix s(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            // Column i + j d holds vec(N(|i><j|)).
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = 0; b < d; ++b) {
                    Complex acc = 0.0;
                    for (std::size_t x = 0; x < blocks; ++x) {
                        acc += outputs[i][x * d + a] *
                               std::conj(outputs[j][x * d + b]);
                    }
                    s(a + b * d, i + j * d) = acc;
                }
            }
        }
    }
    return Superoperator(d, std::move(s));
}

} // namespace lindsim
