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

#include "lindsim/channels/diamond.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

namespace {

struct SignedSpectrum {
    ComplexMatrix sign; ///< V sign(lambda) V^dagger
    double trace_norm;
};

// Sign matrix and trace norm of X. For non-Hermitian X the sign comes from
// the Hermitian part and the norm from the singular values.
SignedSpectrum signed_spectrum(const ComplexMatrix &x) {
    const auto eig = hermitian_eigen(x);
    const std::size_t n = x.rows();
    ComplexMatrix sign(n, n);
    double norm = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.values[k];
        norm += std::abs(lambda);
        const double sk = lambda >= 0.0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = eig.vectors(i, k) * sk;
            for (std::size_t j = 0; j < n; ++j) {
                sign(i, j) += vik * std::conj(eig.vectors(j, k));
            }
        }
    }
    const double scale = 1.0 + x.max_abs();
    if (!is_hermitian(x, 1e-12 * scale)) {
        norm = trace_norm(x);
    }
    return {std::move(sign), norm};
}

StateVector top_eigenvector(const ComplexMatrix &y) {
    const auto eig = hermitian_eigen(y);
    const std::size_t n = y.rows();
    StateVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = eig.vectors(i, n - 1);
    }
    return v;
}

StateVector random_state(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    StateVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = Complex(g(rng), g(rng));
    }
    return v.normalized();
}

// Applies `map` to every reference block of an operator on system (x)
// reference, both of dimension d: block (r, r') holds entries
// [a d + r, b d + r'].
ComplexMatrix apply_on_system(const ComplexMatrix &map, std::size_t d,
                              const ComplexMatrix &x) {
    ComplexMatrix out(d * d, d * d);
    StateVector block(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t rp = 0; rp < d; ++rp) {
            for (std::size_t b = 0; b < d; ++b) {
                for (std::size_t a = 0; a < d; ++a) {
                    block[a + b * d] = x(a * d + r, b * d + rp);
                }
            }
            const StateVector mapped = map * block;
            for (std::size_t b = 0; b < d; ++b) {
                for (std::size_t a = 0; a < d; ++a) {
                    out(a * d + r, b * d + rp) = mapped[a + b * d];
                }
            }
        }
    }
    return out;
}

// One monotone ascent run: psi -> sign of the output -> top eigenvector of
// the adjoint image of that sign.
template <typename Output, typename Pullback>
double ascend(StateVector psi, int iterations, const Output &output,
              const Pullback &pullback) {
    double best = 0.0;
    double previous = -1.0;
    for (int it = 0; it < iterations; ++it) {
        const ComplexMatrix x = output(psi);
        const SignedSpectrum ss = signed_spectrum(x);
        best = std::max(best, ss.trace_norm);
        if (ss.trace_norm - previous <= 1e-13 * std::max(1.0, ss.trace_norm)) {
            break;
        }
        previous = ss.trace_norm;
        psi = top_eigenvector(pullback(ss.sign));
    }
    return best;
}

} // namespace

DiamondBounds diamond_bounds(const Superoperator &t,
                             const DiamondOptions &options) {
    const std::size_t d = t.dim();
    const ChoiMatrix choi = superop_to_choi(t);
    const double j1 = trace_norm(choi.matrix());
    DiamondBounds bounds;
    bounds.upper = j1;
    bounds.choi_lower = j1 / static_cast<double>(d);
    bounds.lower = bounds.choi_lower;
    if (!options.refine || j1 == 0.0) {
        return bounds;
    }

    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix adjoint = t.matrix().adjoint();
    // For psi with amplitudes Psi[s, r] = psi[s d + r], the output is
    // (I (x) R) J (I (x) R^dagger) with R = Psi^T.
    auto output = [&](const StateVector &psi) {
        ComplexMatrix r(d, d);
        for (std::size_t s = 0; s < d; ++s) {
            for (std::size_t ref = 0; ref < d; ++ref) {
                r(ref, s) = psi[s * d + ref];
            }
        }
        const ComplexMatrix ir = kron(id, r);
        return ir * choi.matrix() * ir.adjoint();
    };
    auto pullback = [&](const ComplexMatrix &sign) {
        return apply_on_system(adjoint, d, sign);
    };

    StateVector entangled(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        entangled[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    double best = ascend(entangled, options.iterations, output, pullback);
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.restarts; ++k) {
        best = std::max(best, ascend(random_state(rng, d * d),
                                     options.iterations, output, pullback));
    }
    // The ascent evaluates true outputs, so it can never exceed the upper
    // bound beyond rounding.
    bounds.lower = std::max(bounds.lower, std::min(best, bounds.upper));
    return bounds;
}

double induced_trace_norm_lower(const Superoperator &t,
                                const DiamondOptions &options) {
    const std::size_t d = t.dim();
    const Superoperator adjoint = t.adjoint();
    auto output = [&](const StateVector &psi) {
        return t.apply(outer(psi, psi));
    };
    auto pullback = [&](const ComplexMatrix &sign) {
        return adjoint.apply(sign);
    };
    double best = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        best = std::max(best, ascend(StateVector::basis(d, i),
                                     options.iterations, output, pullback));
    }
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.restarts; ++k) {
        best = std::max(best, ascend(random_state(rng, d), options.iterations,
                                     output, pullback));
    }
    return best;
}

} // namespace lindsim
