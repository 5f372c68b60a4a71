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

// Acceptance runner: one PASS/FAIL line per criterion, including its
// runtime budget. Exit status 0 only when every selected criterion passes.
//
//     acceptance [--criterion k] [--jobs n]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lindsim/channels/channels.hpp"
#include "lindsim/cli/experiments.hpp"
#include "lindsim/cli/report.hpp"
#include "lindsim/numerics/linalg.hpp"
#include "lindsim/oaa/simulate.hpp"
#include "lindsim/resource/resource_model.hpp"

using namespace lindsim;
using namespace lindsim::cli;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double budget_seconds;
    std::function<Verdict(unsigned jobs)> check;
};

std::string cell_text(const Cell &cell) {
    if (const auto *s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    if (const auto *d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    if (const auto *i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto *b = std::get_if<bool>(&cell)) {
        return *b ? "true" : "false";
    }
    return {};
}

/// Indices of rows whose `column` reads `value`.
std::vector<std::size_t> rows_where(const Report &report,
                                    std::string_view column,
                                    std::string_view value) {
    const std::size_t c = report.column(column);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < report.rows().size(); ++i) {
        if (cell_text(report.rows()[i][c]) == value) {
            out.push_back(i);
        }
    }
    return out;
}

bool row_passes(const Report &report, std::size_t row) {
    const Cell &cell = report.rows()[row][report.column("pass")];
    const auto *b = std::get_if<bool>(&cell);
    return b != nullptr && *b;
}

/// Every row of `kind` passes; the detail lists each measured value.
Verdict kind_rows_pass(const Report &report, std::string_view kind) {
    const auto rows = rows_where(report, "kind", kind);
    Verdict v{!rows.empty(), {}};
    std::ostringstream detail;
    detail << kind << "=";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        v.pass = v.pass && row_passes(report, rows[i]);
        detail << (i ? "," : "")
               << format_double(report.number(rows[i], "measured"));
    }
    v.detail = detail.str();
    return v;
}

Verdict all_rows_pass(const Report &report) {
    return {report.failures() == 0,
            std::to_string(report.failures()) + " of " +
                std::to_string(report.rows().size()) + " rows failed"};
}

Verdict both(Verdict a, const Verdict &b) {
    a.pass = a.pass && b.pass;
    a.detail += "; " + b.detail;
    return a;
}

std::vector<unsigned> powers_of_two(unsigned from, unsigned to) {
    std::vector<unsigned> out;
    for (unsigned v = from; v <= to; v *= 2) {
        out.push_back(v);
    }
    return out;
}

std::vector<double> geometric(double from, double to, std::size_t points) {
    std::vector<double> out;
    for (std::size_t i = 0; i < points; ++i) {
        out.push_back(from * std::pow(to / from, static_cast<double>(i) /
                                                     (points - 1)));
    }
    return out;
}

const std::vector<double> kSweepDeltas = {0.2, 0.1, 0.05, 0.025};

std::vector<Criterion> criteria() {
    const double ln2 = std::numbers::ln2;
    const LindbladSpec ad = amplitude_damping_spec();
    return {
        {1, "success probabilities, standard vs new LCU", 1.0,
         [](unsigned) {
             const Report r = std_vs_new({0.04, 0.25, 0.64});
             return both(all_rows_pass(r), kind_rows_pass(r, "advantage"));
         }},
        {2, "projected block equals sqrt(p) sum_j |j> A_j |psi>", 30.0,
         [](unsigned jobs) {
             return all_rows_pass(
                 lemma1(50, 10, {0.1, 0.05}, kDefaultSeed, jobs));
         }},
        {3, "M_delta vs e^{L delta}: bound 2 (delta ops)^2, slope 2", 120.0,
         [](unsigned jobs) {
             const Report r =
                 mdelta_sweep(10, kSweepDeltas, kDefaultSeed, jobs);
             return both(all_rows_pass(r), kind_rows_pass(r, "slope"));
         }},
        {4, "e^{delta L} vs 1 + delta L: bound (delta ops)^2, slope 2", 60.0,
         [](unsigned jobs) {
             const Report r =
                 firstorder_sweep(10, kSweepDeltas, kDefaultSeed, jobs);
             return both(all_rows_pass(r), kind_rows_pass(r, "slope"));
         }},
        {5, "segment TP defect <= r (delta P)^2, r defect in [0.3, 0.7]", 60.0,
         [ad](unsigned) {
             const Report r = segment_defect(ad, {2, 4, 8, 16});
             return both(both(all_rows_pass(r), kind_rows_pass(r, "defect")),
                         kind_rows_pass(r, "scaled_defect"));
         }},
        {6, "OAA error slope -1 over r in {2,4,8}, exact toy", 120.0,
         [ad](unsigned) {
             const Report r = oaa_sweep(ad, {2, 4, 8});
             return both(
                 both(kind_rows_pass(r, "slope"),
                      kind_rows_pass(r, "exact_amplification")),
                 all_rows_pass(r));
         }},
        {7, "end to end: diamond lower <= 0.05, |1><1| -> I/2 within 0.05",
         300.0,
         [ad, ln2](unsigned) {
             const SimulationReport run = simulate(ad, ln2, 0.05);
             const ComplexMatrix excited{{0.0, 0.0}, {0.0, 1.0}};
             const ComplexMatrix half{{0.5, 0.0}, {0.0, 0.5}};
             const double distance =
                 0.5 * trace_norm(run.channel.apply(excited) - half);
             return Verdict{run.total.lower <= 0.05 && distance <= 0.05,
                            "diamond_lower=" + format_double(run.total.lower) +
                                " trace_distance=" + format_double(distance)};
         }},
        {8, "poisson_h(1e-3) = 6, truncated vs full <= 5e-2 at r = 8", 180.0,
         [ad](unsigned) {
             const unsigned h6 = poisson_h(1e-3);
             const Report r = truncation(ad, 8, 1e-2, std::nullopt);
             const auto row = rows_where(r, "quantity", "diamond_upper");
             const double discrepancy =
                 row.empty() ? NAN : r.number(row.front(), "value");
             return Verdict{h6 == 6 && discrepancy <= 5e-2,
                            "poisson_h(1e-3)=" + std::to_string(h6) +
                                " discrepancy_upper=" +
                                format_double(discrepancy)};
         }},
        {9, "fig1 error slope -0.5 over N in 16..1024", 120.0,
         [ad, ln2](unsigned) {
             return kind_rows_pass(fig1_sweep(ad, ln2, powers_of_two(16, 1024)),
                                   "slope");
         }},
        {10, "min-delta total time slope +0.5, local approximation slope 2",
         600.0,
         [ad, ln2](unsigned jobs) {
             const Report scan =
                 lower_bound_scan(ad, ln2, 0.25, powers_of_two(4, 256), jobs);
             const Report local =
                 local_approx(geometric(1e-2, 1e-1, 10), kDefaultSeed);
             return both(kind_rows_pass(scan, "slope_total_time"),
                         kind_rows_pass(local, "slope"));
         }},
        {11, "diamond lower <= ops <= pauli on 100 random specs", 60.0,
         [](unsigned jobs) {
             return all_rows_pass(
                 norms(random_norm_specs(100, kDefaultSeed), jobs));
         }},
    };
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"lindsim acceptance criteria"};
    int only = 0;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--criterion", only, "Run only criterion k (1..11)")
        ->check(CLI::Range(1, 11));
    app.add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const Criterion &c : criteria()) {
        if (only != 0 && c.id != only) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Verdict verdict;
        try {
            verdict = c.check(jobs);
        } catch (const std::exception &e) {
            verdict = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        const bool in_budget = seconds < c.budget_seconds;
        const bool pass = verdict.pass && in_budget;
        all_pass = all_pass && pass;
        char id[8];
        std::snprintf(id, sizeof id, "c%02d", c.id);
        std::cout << id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << c.title
                  << " | " << verdict.detail << " | runtime "
                  << format_double(std::round(seconds * 1000.0) / 1000.0)
                  << " s (budget " << format_double(c.budget_seconds) << " s"
                  << (in_budget ? "" : ", exceeded") << ")\n";
    }
    return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
