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

#include <array>
#include <optional>
#include <vector>

#include "hexameral/sl2.hpp"

namespace hexameral {

// Sixth root of unity exp(pi i m / 3) with exact antipodes (u_{m+3} = -u_m).
PlaneVector unit_root(int m);

// Six boundary points indexed by Z/6Z satisfying
//   u_j + u_{j+2} + u_{j+4} = 0,  u_{j+3} = -u_j,  u_j ^ u_{j+2} = sqrt(3)/2.
class MultiPoint {
 public:
  // Validates the relations within tol::kMultiPoint; throws WedgeMismatch.
  static MultiPoint from_points(const std::array<PlaneVector, 6>& points);

  const PlaneVector& operator[](int j) const { return points_[index(j)]; }
  const std::array<PlaneVector, 6>& points() const { return points_; }

  MultiPoint transformed(const FrameMatrix& g) const;

  // Largest violation of the three defining relations.
  double residual() const;

  static int index(int j) { return ((j % 6) + 6) % 6; }

 private:
  explicit MultiPoint(const std::array<PlaneVector, 6>& points) : points_(points) {}
  std::array<PlaneVector, 6> points_;
};

double multipoint_residual(const std::array<PlaneVector, 6>& points);

MultiPoint standard_multipoint();

// Completes (u0, u2) to a multi-point: u4 = -u0 - u2, odd entries by negation.
MultiPoint multipoint_from_pair(const PlaneVector& u0, const PlaneVector& u2);

struct CurveSample {
  double t = 0.0;
  PlaneVector position;
  PlaneVector velocity;
  std::optional<PlaneVector> acceleration;
};

using SampledCurve = std::vector<CurveSample>;
using SampledMultiCurve = std::array<SampledCurve, 6>;

// velocity ^ acceleration; nonnegative along a convex counterclockwise curve.
double convexity_value(const CurveSample& s);

class RankLabel {
 public:
  // Only 1, 2 and 3 are representable; throws RankZero / RankUndefined.
  explicit RankLabel(int value);
  int value() const { return value_; }
  friend bool operator==(const RankLabel&, const RankLabel&) = default;

 private:
  int value_;
};

inline constexpr std::size_t kMinInteriorRankSamples = 8;

// Counts the even-index curves that are strictly curved. A curve is a line
// when |convexity| <= tol::kLinearCurve * |velocity|^2 at every sample, and
// strictly curved when convexity exceeds that threshold at every interior
// sample. Anything else is RankUndefined.
RankLabel rank_classify(const SampledMultiCurve& curves);

}  // namespace hexameral
