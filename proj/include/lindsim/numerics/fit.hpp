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

#include <span>

namespace lindsim {

struct LineFit {
    double slope;
    double intercept;
};

/// Ordinary least squares y = slope * x + intercept. Needs two distinct x.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

/// Least-squares line through (log x, log y). Needs three or more points,
/// all positive.
LineFit slope_fit(std::span<const double> x, std::span<const double> y);

} // namespace lindsim
