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

#include "lindsim/dilation/dilation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"

namespace lindsim {

namespace {

constexpr double kNormTolerance = 1e-9;
constexpr int kGridPoints = 48;
constexpr double kGridLow = 1e-4;
constexpr int kBisections = 30;

ComplexMatrix block(const ComplexMatrix &m, std::size_t d, std::size_t a,
                    std::size_t b) {
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            out(i, k) = m(a * d + i, b * d + k);
        }
    }
    return out;
}

// Channel rho -> sum_a (post K_a) rho (post K_a)^dagger with K_a the
// (a, 0) blocks of the joint unitary.
Superoperator reset_channel(const ComplexMatrix &u_joint,
                            std::size_t ancilla_dim, std::size_t d,
                            const ComplexMatrix &post) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(ancilla_dim);
    for (std::size_t a = 0; a < ancilla_dim; ++a) {
        kraus.push_back(post * block(u_joint, d, a, 0));
    }
    return kraus_to_superop(KrausChannel(std::move(kraus)));
}

void require_unit_norm(const ComplexMatrix &h) {
    const double norm = spectral_norm(h);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw DomainError("joint Hamiltonian must have norm 1, got " +
                          std::to_string(norm));
    }
}

std::size_t system_dim_of(const ComplexMatrix &h, std::size_t ancilla_dim) {
    if (ancilla_dim == 0 || !h.is_square() || h.rows() % ancilla_dim != 0) {
        throw DimensionError("joint Hamiltonian size " +
                             std::to_string(h.rows()) +
                             " is not a multiple of the ancilla dimension");
    }
    return h.rows() / ancilla_dim;
}

} // namespace

DilationSpec build_j(const LindbladSpec &spec) {
    DilationSpec out;
    out.system_dim = spec.dim();
    out.ancilla_dim = spec.m() + 1;
    out.h_sys = spec.hamiltonian_matrix();
    const std::size_t d = out.system_dim;
    out.j = ComplexMatrix(out.ancilla_dim * d, out.ancilla_dim * d);
    const auto jumps = spec.jump_matrices();
    for (std::size_t a = 1; a < out.ancilla_dim; ++a) {
        const ComplexMatrix &l = jumps[a - 1];
        const ComplexMatrix l_dag = l.adjoint();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                out.j(a * d + i, k) = l(i, k);
                out.j(i, a * d + k) = l_dag(i, k);
            }
        }
    }
    return out;
}

ComplexMatrix joint_hamiltonian(const DilationSpec &d) {
    return d.j + kron(ComplexMatrix::identity(d.ancilla_dim), d.h_sys);
}

Superoperator reset_step(const ComplexMatrix &h_joint, std::size_t ancilla_dim,
                         double delta) {
    const std::size_t d = system_dim_of(h_joint, ancilla_dim);
    const ComplexMatrix u = expm(h_joint * Complex(0.0, -delta));
    return reset_channel(u, ancilla_dim, d, ComplexMatrix::identity(d));
}

Superoperator fig1_evolve(const DilationSpec &d, double t, unsigned n) {
    if (n < 1) {
        throw DomainError("fig1_evolve needs N >= 1");
    }
    if (!(t > 0.0)) {
        throw DomainError("fig1_evolve needs t > 0");
    }
    const double dt = t / n;
    const ComplexMatrix u_j = expm(d.j * Complex(0.0, -std::sqrt(dt)));
    const ComplexMatrix u_h = expm(d.h_sys * Complex(0.0, -dt));
    return reset_channel(u_j, d.ancilla_dim, d.system_dim, u_h).power(n);
}

DiscretizationResult discretization_check(const ComplexMatrix &h_joint,
                                          std::size_t ancilla_dim,
                                          const LindbladSpec &spec, double t,
                                          unsigned n, double delta, double eps,
                                          const DiamondOptions &options) {
    if (n < 1) {
        throw DomainError("discretization_check needs N >= 1");
    }
    if (!(delta >= 0.0)) {
        throw DomainError("discretization_check needs delta >= 0");
    }
    require_unit_norm(h_joint);
    if (system_dim_of(h_joint, ancilla_dim) != spec.dim()) {
        throw DimensionError("joint Hamiltonian does not match the spec");
    }
    DiscretizationResult result;
    result.n = n;
    result.delta = delta;
    result.total_time = n * delta;
    const Superoperator step = reset_step(h_joint, ancilla_dim, delta);
    const Superoperator target_step = exact_evolution(spec, t / n);
    Superoperator ours = step;
    Superoperator target = target_step;
    result.pass = true;
    for (unsigned k = 1; k <= n; ++k) {
        const DiamondBounds b = diamond_bounds(ours - target, options);
        result.per_stage_errors.push_back(b);
        result.pass = result.pass && b.upper <= eps;
        result.certified_fail = result.certified_fail || b.lower > eps;
        ours = step.after(ours);
        target = target_step.after(target);
    }
    return result;
}

DeltaScan min_delta_scan(const LindbladSpec &spec, double t, unsigned n,
                         double eps, const DiamondOptions &options) {
    const DilationSpec dil = build_j(spec);
    ComplexMatrix h = joint_hamiltonian(dil);
    const double norm = spectral_norm(h);
    if (norm == 0.0) {
        throw DomainError("min_delta_scan needs a nonzero joint Hamiltonian");
    }
    h *= Complex(1.0 / norm);
    auto check = [&](double delta) {
        return discretization_check(h, dil.ancilla_dim, spec, t, n, delta, eps,
                                    options);
    };

    DeltaScan scan;
    if (check(0.0).pass) {
        return scan;
    }
    double below = 0.0;   // largest grid point that does not pass
    double fail = 0.0;    // largest certified-fail grid point below the pass
    double after_fail = -1.0;
    double pass = -1.0;
    const double ratio = std::pow(std::numbers::pi / kGridLow,
                                  1.0 / (kGridPoints - 1));
    double delta = kGridLow;
    for (int i = 0; i < kGridPoints; ++i, delta *= ratio) {
        const DiscretizationResult r = check(delta);
        if (r.pass) {
            pass = delta;
            break;
        }
        below = delta;
        if (r.certified_fail) {
            fail = delta;
            after_fail = -1.0;
        } else if (after_fail < 0.0) {
            after_fail = delta;
        }
    }
    if (pass < 0.0) {
        throw DomainError("no delta in (0, pi] passes at N = " +
                          std::to_string(n) + ", eps = " + std::to_string(eps));
    }
    if (after_fail < 0.0) {
        after_fail = pass;
    }

    double lo = below;
    double hi = pass;
    for (int i = 0; i < kBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        (check(mid).pass ? hi : lo) = mid;
    }
    scan.delta_pass = hi;

    lo = fail;
    hi = after_fail;
    for (int i = 0; i < kBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        (check(mid).certified_fail ? lo : hi) = mid;
    }
    scan.delta_fail = lo;
    scan.total_time = n * scan.delta_pass;
    scan.total_time_fail = n * scan.delta_fail;
    return scan;
}

LocalApprox local_approx_compare(const ComplexMatrix &h_joint,
                                 std::size_t ancilla_dim, double delta,
                                 const DiamondOptions &options) {
    require_unit_norm(h_joint);
    if (!(delta >= 0.0)) {
        throw DomainError("local_approx_compare needs delta >= 0");
    }
    const std::size_t d = system_dim_of(h_joint, ancilla_dim);
    LocalApprox out;
    out.g = block(h_joint, d, 0, 0);
    const Superoperator joint = reset_step(h_joint, ancilla_dim, delta);
    const Superoperator local =
        unitary_superop(expm(out.g * Complex(0.0, -delta)));
    const Superoperator diff = joint - local;
    const DiamondBounds b = diamond_bounds(diff, options);
    out.choi_lower = b.choi_lower;
    out.diamond_upper = b.upper;
    out.dist = induced_trace_norm_lower(diff, options);
    return out;
}

} // namespace lindsim
