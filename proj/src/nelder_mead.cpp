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

#include "hexameral/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hexameral/error.hpp"

namespace hexameral {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> lower,
                             std::span<const double> upper, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (lower.size() != n || upper.size() != n) throw Error(ErrorKind::InvalidArgument, "bounds do not match the start");
  const double dim = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dim;
  const double contract = 0.75 - 0.5 / dim;
  const double shrink = 1.0 - 1.0 / dim;

  NelderMeadResult result;
  auto clamp = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
  };
  auto eval = [&](const std::vector<double>& x) {
    ++result.evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::max();
  };

  clamp(start);
  result.x = start;
  if (options.max_evals <= 0) return result;
  result.value = eval(start);

  std::vector<std::vector<double>> simplex{start};
  std::vector<double> values{result.value};
  for (std::size_t i = 0; i < n && result.evals < options.max_evals; ++i) {
    std::vector<double> x = start;
    const double step = options.initial_step.empty() ? 0.05 : options.initial_step[i];
    x[i] += step;
    if (x[i] > upper[i]) x[i] = start[i] - step;
    clamp(x);
    simplex.push_back(x);
    values.push_back(eval(x));
  }
  if (simplex.size() < n + 1) return result;

  std::vector<std::size_t> order(n + 1);
  while (result.evals < options.max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) diameter = std::max(diameter, std::abs(simplex[order[k]][i] - simplex[best][i]));
    }
    if (values[worst] - values[best] <= options.f_tolerance && diameter <= options.x_tolerance) break;
    if (diameter <= options.x_tolerance * 1e-3) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[order[k]][i] / dim;
    }
    auto along = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + coeff * (centroid[i] - simplex[worst][i]);
      clamp(x);
      return x;
    };

    std::vector<double> xr = along(reflect);
    const double fr = eval(xr);
    if (fr < values[best]) {
      std::vector<double> xe = along(expand);
      const double fe = result.evals < options.max_evals ? eval(xe) : fr;
      if (fe < fr) {
        simplex[worst] = std::move(xe);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(xr);
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = std::move(xr);
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    std::vector<double> xc = along(outside ? contract * reflect : -contract);
    const double fc = result.evals < options.max_evals ? eval(xc) : values[worst];
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = std::move(xc);
      values[worst] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n && result.evals < options.max_evals; ++k) {
      auto& x = simplex[order[k]];
      for (std::size_t i = 0; i < n; ++i) x[i] = simplex[best][i] + shrink * (x[i] - simplex[best][i]);
      clamp(x);
      values[order[k]] = eval(x);
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  result.value = *it;
  result.x = simplex[static_cast<std::size_t>(it - values.begin())];
  return result;
}

}  // namespace hexameral
