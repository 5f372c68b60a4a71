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

#include "lindsim/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "lindsim/error.hpp"

namespace lindsim::cli {

namespace {

std::string cell_text(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(const std::string &s) const { return s; }
        std::string operator()(std::int64_t v) const {
            return std::to_string(v);
        }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell &cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const {
            return nullptr;
        }
        nlohmann::ordered_json operator()(const std::string &s) const {
            return s;
        }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) {
                return format_double(v);
            }
            return v;
        }
        nlohmann::ordered_json operator()(bool v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

// RFC-4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

Format parse_format(std::string_view text) {
    if (text == "csv") {
        return Format::kCsv;
    }
    if (text == "json") {
        return Format::kJson;
    }
    throw DomainError("unknown report format '" + std::string(text) +
                      "', expected csv or json");
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, result.ptr);
}

Report::Report(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {}

void Report::meta(std::string key, Cell value) {
    for (auto &entry : meta_) {
        if (entry.first == key) {
            entry.second = std::move(value);
            return;
        }
    }
    meta_.emplace_back(std::move(key), std::move(value));
}

void Report::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns_.size()) {
        throw DimensionError("report '" + name_ + "' row has " +
                             std::to_string(cells.size()) + " cells for " +
                             std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(cells));
}

std::size_t Report::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] == name) {
            return i;
        }
    }
    throw DomainError("report '" + name_ + "' has no column '" +
                      std::string(name) + "'");
}

std::size_t Report::failures() const {
    std::size_t pass_col = columns_.size();
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] == "pass") {
            pass_col = i;
        }
    }
    if (pass_col == columns_.size()) {
        return 0;
    }
    std::size_t count = 0;
    for (const auto &row : rows_) {
        const bool *ok = std::get_if<bool>(&row[pass_col]);
        if (ok != nullptr && !*ok) {
            ++count;
        }
    }
    return count;
}

double Report::number(std::size_t row, std::string_view name) const {
    const Cell &cell = rows_.at(row)[column(name)];
    if (const double *d = std::get_if<double>(&cell)) {
        return *d;
    }
    if (const std::int64_t *i = std::get_if<std::int64_t>(&cell)) {
        return static_cast<double>(*i);
    }
    throw DomainError("report '" + name_ + "' cell '" + std::string(name) +
                      "' in row " + std::to_string(row) + " is not numeric");
}

void Report::write(std::ostream &out, Format format) const {
    if (format == Format::kCsv) {
        for (const auto &[key, value] : meta_) {
            out << "# " << csv_field(key) << ',' << csv_field(cell_text(value))
                << '\n';
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            out << (i ? "," : "") << csv_field(columns_[i]);
        }
        out << '\n';
        for (const auto &row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << csv_field(cell_text(row[i]));
            }
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[key, value] : meta_) {
        meta[key] = cell_json(value);
    }
    doc.push_back({{"meta", meta}});
    for (const auto &row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[columns_[i]] = cell_json(row[i]);
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

} // namespace lindsim::cli
