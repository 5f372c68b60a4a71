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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lindsim {

/// Base class for every error raised by the library. `kind()` is a short
/// stable token used by the CLI for machine-parsable diagnostics.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char *kind() const noexcept { return "error"; }
};

/// Operand shapes do not agree.
class DimensionError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char *kind() const noexcept override {
        return "dimension";
    }
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char *kind() const noexcept override {
        return "domain";
    }
};

/// A desk-scale guard (qubit count, enumeration size, iteration cap) was hit.
class LimitError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char *kind() const noexcept override {
        return "limit";
    }
};

/// A Lindbladian specification document is malformed or invalid.
/// Syntax errors carry a 1-based line and column; semantic errors use 0.
class SpecError : public Error {
  public:
    SpecError(const std::string &message, std::size_t line = 0,
              std::size_t column = 0)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    [[nodiscard]] const char *kind() const noexcept override { return "spec"; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace lindsim
