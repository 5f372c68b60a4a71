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

#include "lindsim/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lindsim/cli/experiments.hpp"
#include "lindsim/error.hpp"
#include "lindsim/pauli/random_spec.hpp"

#ifndef LINDSIM_VERSION
#define LINDSIM_VERSION "unknown"
#endif

namespace lindsim::cli {

namespace {


struct RunConfig {
    std::string subcommand;
    std::optional<std::string> spec_path;
    std::optional<double> t;
    std::optional<double> eps;
    std::optional<unsigned> r;
    std::optional<unsigned> h;
    std::optional<std::size_t> count;
    std::vector<unsigned> n_grid;
    std::vector<double> delta_grid;
    std::vector<unsigned> r_grid;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::string format = "csv";
    std::optional<std::string> out_path;
    bool schema = false;
};

struct Subcommand {
    std::string name;
    std::string help;
    const std::vector<std::string> *columns;
};

const std::vector<Subcommand> &table() {
    static const std::vector<Subcommand> kTable = {
        {"norms", "diamond lower <= ops_norm <= pauli_norm", &kSweepColumns},
        {"lemma1", "W gadget success block against sqrt(p) sum |j> A_j psi",
         &kSweepColumns},
        {"std-vs-new", "standard versus new LCU success probability",
         &kSweepColumns},
        {"mdelta-sweep", "M_delta versus exact step: bound and slope",
         &kSweepColumns},
        {"firstorder-sweep", "exact step versus 1 + delta L: bound and slope",
         &kSweepColumns},
        {"oaa-sweep", "amplification error versus r", &kSweepColumns},
        {"segment-defect", "trace-preservation defect of a segment",
         &kSweepColumns},
        {"simulate", "end-to-end channel simulation", &kQuantityColumns},
        {"truncation", "Hamming-weight truncation of one segment",
         &kQuantityColumns},
        {"cost", "gate and register counting model", &kQuantityColumns},
        {"fig1-sweep", "reset-ancilla discretization error versus N",
         &kSweepColumns},
        {"lower-bound-scan", "minimal joint evolution time versus N",
         &kSweepColumns},
        {"local-approx", "local Hamiltonian approximation slope",
         &kSweepColumns},
    };
    return kTable;
}

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? "," : "") + items[i];
    }
    return out;
}

template <class T> std::string join_numbers(const std::vector<T> &items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if constexpr (std::is_floating_point_v<T>) {
            out += (i ? "," : "") + format_double(items[i]);
        } else {
            out += (i ? "," : "") + std::to_string(items[i]);
        }
    }
    return out;
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

// Unscaled random specs on one or two qubits for the norm chain.
void require_positive(const char *name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be positive and finite");
    }
}

void require_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("--eps must lie in (0, 1)");
    }
}

Report dispatch(const RunConfig &c) {
    const LindbladSpec spec =
        c.spec_path ? load_spec(*c.spec_path) : amplitude_damping_spec();
    const double ln2 = std::log(2.0);
    auto deltas_or = [&](std::vector<double> fallback) {
        const auto &grid = c.delta_grid.empty() ? fallback : c.delta_grid;
        for (double d : grid) {
            require_positive("delta", d);
        }
        return grid;
    };
    auto ns_or = [&](std::vector<unsigned> fallback) {
        const auto &grid = c.n_grid.empty() ? fallback : c.n_grid;
        for (unsigned n : grid) {
            if (n == 0) {
                throw DomainError("N must be at least 1");
            }
        }
        return grid;
    };
    auto rs_or = [&](std::vector<unsigned> fallback) {
        const auto &grid = c.r_grid.empty() ? fallback : c.r_grid;
        for (unsigned r : grid) {
            if (r == 0) {
                throw DomainError("r must be at least 1");
            }
        }
        return grid;
    };
    const std::string &name = c.subcommand;
    if (name == "norms") {
        if (c.spec_path) {
            return norms({spec}, c.jobs);
        }
        return norms(random_norm_specs(c.count.value_or(100), c.seed), c.jobs);
    }
    if (name == "lemma1") {
        return lemma1(c.count.value_or(50), 10, deltas_or({0.1, 0.05}), c.seed,
                      c.jobs);
    }
    if (name == "std-vs-new") {
        return std_vs_new(deltas_or({0.04, 0.25, 0.64}));
    }
    if (name == "mdelta-sweep") {
        return mdelta_sweep(c.count.value_or(10),
                            deltas_or({0.2, 0.1, 0.05, 0.025}), c.seed, c.jobs);
    }
    if (name == "firstorder-sweep") {
        return firstorder_sweep(c.count.value_or(10),
                                deltas_or({0.2, 0.1, 0.05, 0.025}), c.seed,
                                c.jobs);
    }
    if (name == "oaa-sweep") {
        return oaa_sweep(spec, rs_or({2, 4, 8}));
    }
    if (name == "segment-defect") {
        return segment_defect(spec, rs_or({2, 4, 8, 16}));
    }
    const double t = c.t.value_or(ln2);
    if (name == "simulate") {
        const double eps = c.eps.value_or(0.05);
        require_eps(eps);
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw DomainError("--t must be non-negative and finite");
        }
        return simulate_run(spec, t, eps);
    }
    if (name == "truncation") {
        const double eps = c.eps.value_or(1e-2);
        require_eps(eps);
        const unsigned r = c.r.value_or(8);
        if (r == 0) {
            throw DomainError("--r must be at least 1");
        }
        return truncation(spec, r, eps, c.h);
    }
    if (name == "cost") {
        const double eps = c.eps.value_or(0.05);
        require_eps(eps);
        return cost(spec, t, eps);
    }
    if (name == "fig1-sweep") {
        require_positive("--t", t);
        return fig1_sweep(spec, t, ns_or(powers_of_two(16, 1024)));
    }
    if (name == "lower-bound-scan") {
        require_positive("--t", t);
        const double eps = c.eps.value_or(0.25);
        require_positive("--eps", eps);
        return lower_bound_scan(spec, t, eps, ns_or(powers_of_two(4, 256)),
                                c.jobs);
    }
    if (name == "local-approx") {
        return local_approx(deltas_or(geometric(1e-2, 1e-1, 10)), c.seed);
    }
    throw DomainError("unknown subcommand '" + name + "'");
}

void add_config_meta(Report &report, const RunConfig &c) {
    report.meta("subcommand", c.subcommand);
    report.meta("version", std::string(LINDSIM_VERSION));
    report.meta("spec", c.spec_path ? *c.spec_path
                                    : std::string("amplitude_damping"));
    report.meta("seed", std::to_string(c.seed));
    if (c.t) {
        report.meta("t", *c.t);
    }
    if (c.eps) {
        report.meta("eps", *c.eps);
    }
    if (c.r) {
        report.meta("r", static_cast<std::int64_t>(*c.r));
    }
    if (c.h) {
        report.meta("h", static_cast<std::int64_t>(*c.h));
    }
    if (c.count) {
        report.meta("count", static_cast<std::int64_t>(*c.count));
    }
    if (!c.n_grid.empty()) {
        report.meta("n_grid", join_numbers(c.n_grid));
    }
    if (!c.delta_grid.empty()) {
        report.meta("delta_grid", join_numbers(c.delta_grid));
    }
    if (!c.r_grid.empty()) {
        report.meta("r_grid", join_numbers(c.r_grid));
    }
    tolerance_meta(report);
}

int fail(std::ostream &err, const char *kind, const std::string &message,
         int code) {
    err << "lindsim:error:" << kind << ':' << message << '\n';
    return code;
}

} // namespace

const std::vector<std::string> &subcommands() {
    static const std::vector<std::string> kNames = [] {
        std::vector<std::string> out;
        for (const auto &s : table()) {
            out.push_back(s.name);
        }
        return out;
    }();
    return kNames;
}

std::string schema_text(const std::string &name) {
    std::string out;
    for (const auto &s : table()) {
        if (name.empty() || name == s.name) {
            out += s.name + ": " + join(*s.columns) + '\n';
        }
    }
    if (out.empty()) {
        throw DomainError("unknown subcommand '" + name + "'");
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    RunConfig config;
    CLI::App app{"Lindblad evolution by amplified linear combinations of "
                 "unitaries",
                 "lindsim"};
    // "--h" is the Hamming cap, so help is long-form only.
    app.set_help_flag("--help", "Print this help and exit");
    app.set_version_flag("--version", std::string(LINDSIM_VERSION));
    app.add_option("--spec", config.spec_path, "Spec JSON file");
    app.add_option("--t", config.t, "Evolution time");
    app.add_option("--eps", config.eps, "Target precision");
    app.add_option("--r", config.r, "Steps per segment");
    app.add_option("--h", config.h, "Hamming-weight cap");
    app.add_option("--count", config.count, "Number of random specs");
    app.add_option("--n-grid", config.n_grid, "List of N")->delimiter(',');
    app.add_option("--delta-grid,--delta", config.delta_grid, "List of delta")
        ->delimiter(',');
    app.add_option("--r-grid", config.r_grid, "List of r")->delimiter(',');
    app.add_option("--seed", config.seed, "64-bit seed");
    app.add_option("--jobs", config.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", config.out_path, "Report path (default stdout)");
    app.add_flag("--schema", config.schema, "Print report columns and exit");
    for (const auto &s : table()) {
        app.add_subcommand(s.name, s.help)
            ->fallthrough()
            ->set_help_flag("--help", "Print this help and exit");
    }
    app.require_subcommand(0, 1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << LINDSIM_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        return fail(err, "config", e.what(), kExitConfig);
    }
    for (const CLI::App *sub : app.get_subcommands()) {
        config.subcommand = sub->get_name();
    }

    try {
        if (config.schema) {
            out << schema_text(config.subcommand);
            return kExitOk;
        }
        if (config.subcommand.empty()) {
            return fail(err, "config", "a subcommand is required", kExitConfig);
        }
        Report report = dispatch(config);
        add_config_meta(report, config);
        const Format format = parse_format(config.format);
        if (config.out_path) {
            std::ofstream file(*config.out_path, std::ios::binary);
            if (!file) {
                return fail(err, "io", "cannot open " + *config.out_path,
                            kExitConfig);
            }
            report.write(file, format);
            if (!file.flush()) {
                return fail(err, "io", "cannot write " + *config.out_path,
                            kExitConfig);
            }
        } else {
            report.write(out, format);
        }
        const std::size_t failed = report.failures();
        if (failed > 0) {
            return fail(err, "check",
                        std::to_string(failed) + " row(s) failed in " +
                            report.name(),
                        kExitFailed);
        }
        return kExitOk;
    } catch (const LimitError &e) {
        return fail(err, e.kind(), e.what(), kExitFailed);
    } catch (const Error &e) {
        return fail(err, e.kind(), e.what(), kExitConfig);
    } catch (const std::exception &e) {
        return fail(err, "internal", e.what(), kExitFailed);
    }
}

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

} // namespace lindsim::cli
