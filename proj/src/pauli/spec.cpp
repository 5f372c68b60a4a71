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

#include "lindsim/pauli/spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lindsim/error.hpp"
#include "lindsim/numerics/linalg.hpp"
#include "lindsim/pauli/json_reader.hpp"

namespace lindsim {

namespace {

constexpr std::size_t kMaxQubits = 10;
constexpr double kHermitianTolerance = 1e-10;

using nlohmann::json;

std::string row_name(std::size_t j) {
    return j == 0 ? std::string("H") : "L[" + std::to_string(j - 1) + "]";
}

void validate_row(const LinearCombinationOfPaulis &row, std::size_t n,
                  std::size_t j) {
    if (row.n != n) {
        throw SpecError("inconsistent n: " + row_name(j) + " is declared on " +
                        std::to_string(row.n) + " qubits, spec has " +
                        std::to_string(n));
    }
    for (std::size_t k = 0; k < row.terms.size(); ++k) {
        const PauliTerm &t = row.terms[k];
        if (!(t.beta >= 0.0) || !std::isfinite(t.beta)) {
            throw SpecError("negative beta in " + row_name(j) + " term " +
                            std::to_string(k));
        }
        if (t.pauli.n() != n) {
            throw SpecError("inconsistent n: " + row_name(j) + " term " +
                            std::to_string(k) + " has Pauli word \"" +
                            t.pauli.letters() + "\" of length " +
                            std::to_string(t.pauli.n()) + ", expected " +
                            std::to_string(n));
        }
    }
}

void check_keys(const json &obj, std::initializer_list<const char *> allowed,
                const std::string &where) {
    for (const auto &item : obj.items()) {
        const bool known = std::any_of(
            allowed.begin(), allowed.end(),
            [&](const char *k) { return item.key() == k; });
        if (!known) {
            throw SpecError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

PauliTerm parse_term(const json &obj, const std::string &where) {
    if (!obj.is_object()) {
        throw SpecError(where + " must be an object");
    }
    check_keys(obj, {"beta", "pauli", "phase"}, where);
    if (!obj.contains("beta") || !obj["beta"].is_number()) {
        throw SpecError(where + " needs a numeric 'beta'");
    }
    if (!obj.contains("pauli") || !obj["pauli"].is_string()) {
        throw SpecError(where + " needs a string 'pauli'");
    }
    double theta = 0.0;
    if (obj.contains("phase")) {
        if (!obj["phase"].is_number()) {
            throw SpecError(where + " has a non-numeric 'phase'");
        }
        theta = obj["phase"].get<double>();
    }
    const double beta = obj["beta"].get<double>();
    if (beta < 0.0) {
        throw SpecError("negative beta in " + where);
    }
    try {
        return PauliTerm{beta, PauliString(obj["pauli"].get<std::string>(),
                                           Phase::from_angle(theta))};
    } catch (const DomainError &e) {
        throw SpecError(where + ": " + e.what());
    }
}

LinearCombinationOfPaulis parse_row(const json &arr, std::size_t n,
                                    const std::string &where) {
    if (!arr.is_array()) {
        throw SpecError(where + " must be an array of terms");
    }
    LinearCombinationOfPaulis row{n, {}};
    for (std::size_t k = 0; k < arr.size(); ++k) {
        row.terms.push_back(
            parse_term(arr[k], where + " term " + std::to_string(k)));
    }
    return row;
}

json term_to_json(const PauliTerm &t) {
    json obj = {{"beta", t.beta}, {"pauli", t.pauli.letters()}};
    if (t.pauli.phase() != Phase{}) {
        obj["phase"] = t.pauli.phase().angle();
    }
    return obj;
}

json row_to_json(const LinearCombinationOfPaulis &row) {
    json arr = json::array();
    for (const auto &t : row.terms) {
        arr.push_back(term_to_json(t));
    }
    return arr;
}

} // namespace

double LinearCombinationOfPaulis::beta_sum() const {
    double acc = 0.0;
    for (const auto &t : terms) {
        acc += t.beta;
    }
    return acc;
}

ComplexMatrix lcp_to_matrix(const LinearCombinationOfPaulis &c) {
    const std::size_t dim = std::size_t{1} << c.n;
    ComplexMatrix out(dim, dim);
    for (const auto &t : c.terms) {
        if (t.beta != 0.0) {
            out += t.pauli.dense() * Complex(t.beta);
        }
    }
    return out;
}

LindbladSpec LindbladSpec::create(std::size_t n,
                                  LinearCombinationOfPaulis hamiltonian,
                                  std::vector<LinearCombinationOfPaulis> jumps) {
    if (n == 0 || n > kMaxQubits) {
        throw SpecError("n must be between 1 and " +
                        std::to_string(kMaxQubits) + ", got " +
                        std::to_string(n));
    }
    validate_row(hamiltonian, n, 0);
    for (std::size_t j = 0; j < jumps.size(); ++j) {
        validate_row(jumps[j], n, j + 1);
        if (jumps[j].terms.empty()) {
            throw SpecError("jump operator " + row_name(j + 1) +
                            " has no terms");
        }
    }
    LindbladSpec spec;
    spec.n_ = n;
    spec.hamiltonian_ = std::move(hamiltonian);
    spec.jumps_ = std::move(jumps);
    const ComplexMatrix h = spec.hamiltonian_matrix();
    if (!is_hermitian(h, kHermitianTolerance)) {
        throw SpecError("non-Hermitian H: the Hamiltonian terms do not sum to "
                        "a Hermitian matrix");
    }
    return spec;
}

std::size_t LindbladSpec::q() const noexcept {
    std::size_t best = hamiltonian_.terms.size();
    for (const auto &j : jumps_) {
        best = std::max(best, j.terms.size());
    }
    return best;
}

const LinearCombinationOfPaulis &LindbladSpec::row(std::size_t j) const {
    if (j > jumps_.size()) {
        throw DomainError("row " + std::to_string(j) + " out of range 0.." +
                          std::to_string(jumps_.size()));
    }
    return j == 0 ? hamiltonian_ : jumps_[j - 1];
}

ComplexMatrix LindbladSpec::hamiltonian_matrix() const {
    return lcp_to_matrix(hamiltonian_);
}

std::vector<ComplexMatrix> LindbladSpec::jump_matrices() const {
    std::vector<ComplexMatrix> out;
    out.reserve(jumps_.size());
    for (const auto &j : jumps_) {
        out.push_back(lcp_to_matrix(j));
    }
    return out;
}

LindbladSpec LindbladSpec::canonicalize() const {
    auto strip = [](const LinearCombinationOfPaulis &row) {
        LinearCombinationOfPaulis out{row.n, {}};
        for (const auto &t : row.terms) {
            if (t.beta != 0.0) {
                out.terms.push_back(t);
            }
        }
        return out;
    };
    LindbladSpec spec;
    spec.n_ = n_;
    spec.hamiltonian_ = strip(hamiltonian_);
    for (const auto &j : jumps_) {
        auto row = strip(j);
        if (!row.terms.empty()) {
            spec.jumps_.push_back(std::move(row));
        }
    }
    return spec;
}

LindbladSpec parse_spec(std::string_view text) {
    const json doc = read_relaxed_json(text);
    if (!doc.is_object()) {
        throw SpecError("top level must be an object");
    }
    check_keys(doc, {"n", "H", "L"}, "top-level object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() ||
        doc["n"].get<std::int64_t>() < 1) {
        throw SpecError("'n' must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<std::int64_t>());
    if (n > kMaxQubits) {
        throw SpecError("n must be between 1 and " +
                        std::to_string(kMaxQubits) + ", got " +
                        std::to_string(n));
    }
    LinearCombinationOfPaulis h{n, {}};
    if (doc.contains("H")) {
        h = parse_row(doc["H"], n, "H");
    }
    std::vector<LinearCombinationOfPaulis> jumps;
    if (doc.contains("L")) {
        const json &l = doc["L"];
        if (!l.is_array()) {
            throw SpecError("'L' must be an array of term arrays");
        }
        for (std::size_t j = 0; j < l.size(); ++j) {
            jumps.push_back(parse_row(l[j], n, row_name(j + 1)));
        }
    }
    return LindbladSpec::create(n, std::move(h), std::move(jumps));
}

LindbladSpec load_spec(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecError("cannot open spec file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string serialize_spec(const LindbladSpec &spec) {
    json l = json::array();
    for (const auto &j : spec.jumps()) {
        l.push_back(row_to_json(j));
    }
    const json doc = {{"n", spec.n()},
                      {"H", row_to_json(spec.hamiltonian())},
                      {"L", l}};
    return doc.dump(2);
}

double pauli_norm(const LindbladSpec &spec) {
    double acc = spec.hamiltonian().beta_sum();
    for (const auto &j : spec.jumps()) {
        const double c = j.beta_sum();
        acc += c * c;
    }
    return acc;
}

double ops_norm(const LindbladSpec &spec) {
    double acc = spectral_norm(spec.hamiltonian_matrix());
    for (const auto &l : spec.jump_matrices()) {
        const double s = spectral_norm(l);
        acc += s * s;
    }
    return acc;
}

double local_norm(const LindbladSpec &spec) {
    // ||beta V|| = beta for a unitary Pauli word.
    double acc = spec.hamiltonian().beta_sum();
    for (const auto &l : spec.jump_matrices()) {
        const double s = spectral_norm(l);
        acc += s * s;
    }
    return acc;
}

LindbladSpec amplitude_damping_spec(double gamma) {
    if (!(gamma >= 0.0)) {
        throw DomainError("damping rate must be non-negative");
    }
    const double b = 0.5 * std::sqrt(gamma);
    LinearCombinationOfPaulis jump{
        1, {{b, PauliString("X")}, {b, PauliString("Y", Phase::quarter_turns(1))}}};
    return LindbladSpec::create(1, {1, {}}, {std::move(jump)});
}

} // namespace lindsim
