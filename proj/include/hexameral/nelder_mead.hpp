/*
 * Copyright 2026 The Hexameral Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hexameral {

struct NelderMeadOptions {
  int max_evals = 2000;
  std::vector<double> initial_step;  // per coordinate; empty means 0.05
  double f_tolerance = 1e-15;        // spread of simplex values
  double x_tolerance = 1e-12;        // simplex diameter
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evals = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Downhill simplex with dimension-adaptive coefficients (reflection 1,
// expansion 1 + 2/n, contraction 0.75 - 1/(2n), shrink 1 - 1/n). Points are
// clamped into [lower, upper]. Deterministic for a given start.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> lower,
                             std::span<const double> upper, const NelderMeadOptions& options);

}  // namespace hexameral
