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
 * Experiment drivers shared by the command line and the acceptance runner.
 * Each returns a Report whose "pass" column records every checked bound.
 *
 * Sweep reports use the columns
 *     case, kind, x, measured, upper, bound_low, bound_high, pass
 * where point rows carry a certified lower bound in `measured` and an upper
 * bound in `upper`, and slope rows carry a log-log slope in `measured` with
 * the accepted band in `bound_low` / `bound_high`.
 *
 * Quantity reports use the columns quantity, value, bound, pass.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "lindsim/cli/report.hpp"
#include "lindsim/lcu/channel_lcu.hpp"
#include "lindsim/pauli/spec.hpp"

namespace lindsim::cli {

inline const std::vector<std::string> kSweepColumns = {
    "case", "kind", "x", "measured", "upper", "bound_low", "bound_high", "pass"};
inline const std::vector<std::string> kQuantityColumns = {"quantity", "value",
                                                          "bound", "pass"};

/// Seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Records every tolerance and the diamond-bound options as report metadata.
void tolerance_meta(Report &report);

/// Independent stream seed for sweep point `index` (splitmix64 finalizer).
std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index);

/// fn(0), ..., fn(count - 1) on up to `jobs` threads, returned in index
/// order. The exception of the lowest failing index is rethrown.
template <class F>
auto parallel_map(unsigned jobs, std::size_t count, F fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads =
        std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

/// Random spec with n in {1, 2}, m <= 2, q <= 3, rescaled so that ops_norm
/// is uniform in [0.5, 1].
LindbladSpec random_bounded_spec(std::mt19937_64 &rng);

/// `count` unscaled random specs, n alternating 1 and 2, m <= 3, q <= 3,
/// spec i drawn from point_seed(seed, i).
std::vector<LindbladSpec> random_norm_specs(std::size_t count,
                                            std::uint64_t seed);

/// Same coefficients with H scaled by `factor` and each L_j by sqrt(factor),
/// so every norm scales by `factor`.
LindbladSpec scale_spec(const LindbladSpec &spec, double factor);

/// Amplitude-damping Kraus pair diag(1, sqrt(1 - delta)) and sqrt(delta)
/// |0><1| written over I, Z and X, iY.
ChannelLCU ad_stinespring_lcu(double delta);

/// The single unitary (X + Z)/sqrt(2) as a two-term LCU with p = 1/2.
ChannelLCU hadamard_lcu();

Report norms(const std::vector<LindbladSpec> &specs, unsigned jobs);
Report lemma1(std::size_t count, std::size_t states,
              const std::vector<double> &deltas, std::uint64_t seed,
              unsigned jobs);
Report std_vs_new(const std::vector<double> &deltas);
Report mdelta_sweep(std::size_t count, const std::vector<double> &deltas,
                    std::uint64_t seed, unsigned jobs);
Report firstorder_sweep(std::size_t count, const std::vector<double> &deltas,
                        std::uint64_t seed, unsigned jobs);
Report oaa_sweep(const LindbladSpec &spec, const std::vector<unsigned> &rs);
Report segment_defect(const LindbladSpec &spec,
                      const std::vector<unsigned> &rs);
Report simulate_run(const LindbladSpec &spec, double t, double eps);
Report truncation(const LindbladSpec &spec, unsigned r, double eps,
                  std::optional<unsigned> h);
Report cost(const LindbladSpec &spec, double t, double eps);
Report fig1_sweep(const LindbladSpec &spec, double t,
                  const std::vector<unsigned> &ns);
Report lower_bound_scan(const LindbladSpec &spec, double t, double eps,
                        const std::vector<unsigned> &ns, unsigned jobs);
Report local_approx(const std::vector<double> &deltas, std::uint64_t seed);

} // namespace lindsim::cli
