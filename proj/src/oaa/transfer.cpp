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

#include "lindsim/oaa/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

namespace {

// One position's contribution with its weight increments on the two sides.
template <class T> struct Piece {
    T value;
    unsigned left_weight = 0;
    unsigned right_weight = 0;
};

// Sums step(...) over all r-position sequences of pieces whose total left
// and right weights stay within the caps. Cell (a, b) holds the partial sum
// with weights a and b.
template <class T, class P, class Step>
T counted_sum(unsigned r, unsigned cap_left, unsigned cap_right, const T &init,
              const T &zero, const std::vector<Piece<P>> &pieces, Step step) {
    const std::size_t cols = cap_right + 1;
    std::vector<T> grid((cap_left + 1) * cols, zero);
    std::vector<bool> live(grid.size(), false);
    grid[0] = init;
    live[0] = true;
    for (unsigned pos = 0; pos < r; ++pos) {
        std::vector<T> next(grid.size(), zero);
        std::vector<bool> next_live(grid.size(), false);
        for (unsigned a = 0; a <= cap_left; ++a) {
            for (unsigned b = 0; b <= cap_right; ++b) {
                if (!live[a * cols + b]) {
                    continue;
                }
                for (const auto &piece : pieces) {
                    const unsigned na = a + piece.left_weight;
                    const unsigned nb = b + piece.right_weight;
                    if (na > cap_left || nb > cap_right) {
                        continue;
                    }
                    next[na * cols + nb] +=
                        step(grid[a * cols + b], piece.value);
                    next_live[na * cols + nb] = true;
                }
            }
        }
        grid = std::move(next);
        live = std::move(next_live);
    }
    T total = zero;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (live[i]) {
            total += grid[i];
        }
    }
    return total;
}

// Pair of operators acting on the ket and bra side of one position.
struct OperatorPair {
    ComplexMatrix left;
    ComplexMatrix right;
};

// X -> l X r^dagger on column-stacked vectors.
ComplexMatrix sandwich_superop(const ComplexMatrix &l, const ComplexMatrix &r) {
    return kron(r.conjugate(), l);
}

struct SuccessPieces {
    ComplexMatrix zero_slot;      // sqrt(p) alpha_00 U_00
    ComplexMatrix row0_rest;      // sqrt(p) sum_{k>=1} alpha_0k U_0k
    std::vector<ComplexMatrix> jumps; // sqrt(p) A_j for j >= 1
};

SuccessPieces success_pieces(const ChannelLCU &lcu) {
    const double root_p = std::sqrt(lcu.p);
    SuccessPieces out;
    out.zero_slot = ComplexMatrix(lcu.dim, lcu.dim);
    out.row0_rest = ComplexMatrix(lcu.dim, lcu.dim);
    const auto &row0 = lcu.rows[0];
    for (std::size_t k = 0; k < row0.size(); ++k) {
        ComplexMatrix &target = k == 0 ? out.zero_slot : out.row0_rest;
        target += row0[k].unitary * Complex(root_p * row0[k].alpha);
    }
    const auto kraus = lcu.kraus_operators();
    for (std::size_t j = 1; j < kraus.size(); ++j) {
        out.jumps.push_back(kraus[j] * Complex(root_p));
    }
    return out;
}

// Weighted pair pieces of the success sum, both sides capped.
std::vector<Piece<OperatorPair>> capped_pairs(const SuccessPieces &sp) {
    std::vector<Piece<OperatorPair>> pieces;
    pieces.push_back({{sp.zero_slot, sp.zero_slot}, 0, 0});
    pieces.push_back({{sp.zero_slot, sp.row0_rest}, 0, 1});
    pieces.push_back({{sp.row0_rest, sp.zero_slot}, 1, 0});
    pieces.push_back({{sp.row0_rest, sp.row0_rest}, 1, 1});
    for (const auto &a : sp.jumps) {
        pieces.push_back({{a, a}, 1, 1});
    }
    return pieces;
}

// X -> L X R^dagger for each pair.
std::vector<Piece<ComplexMatrix>>
as_superops(const std::vector<Piece<OperatorPair>> &pairs) {
    std::vector<Piece<ComplexMatrix>> out;
    for (const auto &p : pairs) {
        out.push_back({sandwich_superop(p.value.left, p.value.right),
                       p.left_weight, p.right_weight});
    }
    return out;
}

// sum over capped sequences of (L_0...L_{r-1})^dagger (R_0...R_{r-1}).
ComplexMatrix gram_sum(const std::vector<Piece<OperatorPair>> &pairs,
                       std::size_t d, unsigned r, unsigned cap_left,
                       unsigned cap_right) {
    return counted_sum(r, cap_left, cap_right, ComplexMatrix::identity(d),
                       ComplexMatrix(d, d), pairs,
                       [](const ComplexMatrix &y, const OperatorPair &pair) {
                           return pair.left.adjoint() * y * pair.right;
                       });
}

ComplexMatrix conj_by(const ComplexMatrix &c) { return sandwich_superop(c, c); }

} // namespace

double hamming_tail(const ChannelLCU &lcu, unsigned r, unsigned h) {
    if (h >= r) {
        return 0.0;
    }
    const double alpha00 = lcu.rows[0].empty() ? 0.0 : lcu.rows[0][0].alpha;
    const double pi = std::clamp(1.0 - lcu.p * lcu.s[0] * alpha00, 0.0, 1.0);
    // Sum the kept terms and subtract; kept mass dominates for small h.
    double kept = 0.0;
    for (unsigned k = 0; k <= h; ++k) {
        const double log_term = std::lgamma(r + 1.0) - std::lgamma(k + 1.0) -
                                std::lgamma(r - k + 1.0) +
                                (k == 0 ? 0.0 : k * std::log(pi)) +
                                (r == k ? 0.0 : (r - k) * std::log1p(-pi));
        kept += std::exp(log_term);
    }
    return std::clamp(1.0 - kept, 0.0, 1.0);
}

SegmentOperators segment_operators(const ChannelLCU &lcu,
                                   const SegmentPlan &plan) {
    if (plan.sys_dim != lcu.dim || plan.m_dim != lcu.rows.size()) {
        throw DimensionError("segment plan does not match the channel LCU");
    }
    const std::size_t d = lcu.dim;
    const unsigned r = plan.r;
    const double c2 = plan.dilution_cos2;
    const double pr = std::pow(lcu.p, r);

    // Mixed-unitary one-position channel, split by register weight.
    ComplexMatrix stay(d * d, d * d);
    ComplexMatrix move(d * d, d * d);
    for (std::size_t j = 0; j < lcu.rows.size(); ++j) {
        for (std::size_t k = 0; k < lcu.rows[j].size(); ++k) {
            const auto &term = lcu.rows[j][k];
            const double prob = lcu.p * lcu.s[j] * term.alpha;
            ComplexMatrix &target = (j == 0 && k == 0) ? stay : move;
            target += conj_by(term.unitary) * Complex(prob);
        }
    }

    KrausChannel steps(lcu.kraus_operators());
    SegmentOperators ops;
    ops.dim = d;
    ops.word_gram = segment_kraus_gram(steps, r);
    const ComplexMatrix id_super = ComplexMatrix::identity(d * d);

    if (!plan.h || *plan.h >= r) {
        ops.all = Superoperator(d, stay + move).power(r);
        ops.success = Complex(c2 * pr) * kraus_to_superop(steps).power(r);
        ops.q = ops.word_gram * Complex(c2 * pr);
        ops.mixed_gram = ops.word_gram * Complex(std::sqrt(c2 * pr));
    } else {
        const unsigned h = *plan.h;
        ops.all = Superoperator(
            d, counted_sum(r, h, 0, id_super, ComplexMatrix(d * d, d * d),
                           std::vector<Piece<ComplexMatrix>>{{stay, 0, 0},
                                                             {move, 1, 0}},
                           [](const ComplexMatrix &acc,
                              const ComplexMatrix &step) {
                               return step * acc;
                           }));

        const SuccessPieces sp = success_pieces(lcu);
        const auto pairs = capped_pairs(sp);
        ops.success =
            Complex(c2) *
            Superoperator(d, counted_sum(r, h, h, id_super,
                                         ComplexMatrix(d * d, d * d),
                                         as_superops(pairs),
                                         [](const ComplexMatrix &acc,
                                            const ComplexMatrix &step) {
                                             return step * acc;
                                         }));
        ops.q = gram_sum(pairs, d, r, h, h) * Complex(c2);

        // Uncapped right side: the two row-0 pieces recombine into A_0.
        const ComplexMatrix a0 = sp.zero_slot + sp.row0_rest;
        std::vector<Piece<OperatorPair>> half;
        half.push_back({{sp.zero_slot, a0}, 0, 0});
        half.push_back({{sp.row0_rest, a0}, 1, 0});
        for (const auto &a : sp.jumps) {
            half.push_back({{a, a}, 1, 0});
        }
        // Pieces carry sqrt(p) on both sides; the uncapped words do not.
        ops.mixed_gram = gram_sum(half, d, r, h, 0) *
                         Complex(std::sqrt(c2) / std::sqrt(pr));
        ops.discarded_mass = hamming_tail(lcu, r, h);
    }
    ops.all_gram = ops.all.adjoint().apply(ComplexMatrix::identity(d));
    return ops;
}

Superoperator segment_channel(const SegmentOperators &ops) {
    const std::size_t d = ops.dim;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix c = id - ops.q * Complex(4.0);
    const ComplexMatrix c_success = id * Complex(3.0) - ops.q * Complex(4.0);
    const Superoperator keep(d, conj_by(c));
    const Superoperator boost(d, conj_by(c_success));
    return ops.all.after(keep) - ops.success.after(keep) +
           ops.success.after(boost);
}

ComplexMatrix oaa_error_operator(const SegmentOperators &ops) {
    const std::size_t d = ops.dim;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix c = id - ops.q * Complex(4.0);
    const ComplexMatrix c_success = id * Complex(3.0) - ops.q * Complex(4.0);
    ComplexMatrix e = c * (ops.all_gram - ops.q) * c;
    e += c_success * ops.q * c_success;
    e -= c_success * ops.mixed_gram;
    e -= ops.mixed_gram.adjoint() * c_success;
    e += ops.word_gram;
    return e;
}

double oaa_error(const SegmentOperators &ops) {
    const auto eig = hermitian_eigen(oaa_error_operator(ops));
    return std::sqrt(std::max(0.0, eig.values.back()));
}

double oaa_error(const SegmentOperators &ops, const StateVector &psi) {
    const StateVector e_psi = oaa_error_operator(ops) * psi;
    return std::sqrt(std::max(0.0, inner(psi, e_psi).real()));
}

ComplexMatrix perp_leakage_operator(const SegmentOperators &ops) {
    return (ops.mixed_gram * Complex(2.0) - ops.all_gram) *
           Complex(1.0 / std::sqrt(3.0));
}

double perp_leakage(const SegmentOperators &ops, const StateVector &psi) {
    return (perp_leakage_operator(ops) * psi).norm();
}

} // namespace lindsim
