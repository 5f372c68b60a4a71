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
 * Tabular experiment reports. CSV output starts with `# key,value` metadata
 * lines followed by an RFC-4180 table; JSON output is an array whose first
 * element is {"meta": {...}} and whose remaining elements are row objects.
 * Doubles are written in shortest round-trip form, so equal inputs give
 * byte-identical files.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lindsim::cli {

/// Empty, text, integer, real or boolean.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

enum class Format { kCsv, kJson };

/// Throws DomainError for anything but "csv" or "json".
Format parse_format(std::string_view text);

/// Shortest round-trip decimal; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double v);

class Report {
  public:
    Report(std::string name, std::vector<std::string> columns);

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<std::string> &columns() const noexcept {
        return columns_;
    }
    [[nodiscard]] const std::vector<std::vector<Cell>> &rows() const noexcept {
        return rows_;
    }

    /// Metadata keeps insertion order; a repeated key overwrites.
    void meta(std::string key, Cell value);
    /// Throws DimensionError unless there is one cell per column.
    void add_row(std::vector<Cell> cells);

    /// Rows whose "pass" cell is false.
    [[nodiscard]] std::size_t failures() const;
    /// Column index; throws DomainError if absent.
    [[nodiscard]] std::size_t column(std::string_view name) const;
    /// Numeric cell as a double; throws DomainError if not numeric.
    [[nodiscard]] double number(std::size_t row, std::string_view name) const;

    void write(std::ostream &out, Format format) const;

  private:
    std::string name_;
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, Cell>> meta_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace lindsim::cli
