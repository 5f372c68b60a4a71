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

#include <string_view>

#include <json.hpp>

namespace lindsim {

/// Reads a JSON document into a json value. Object keys may also be bare
/// identifiers ([A-Za-z_][A-Za-z0-9_]*), which hand-written specification
/// files use. Duplicate keys are rejected. Errors are SpecError with a
/// 1-based line and column.
nlohmann::json read_relaxed_json(std::string_view text);

} // namespace lindsim
