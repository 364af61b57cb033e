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

#include "hexameral/multicurve.hpp"

#include <algorithm>
#include <sstream>

#include "hexameral/error.hpp"

namespace hexameral {

PlaneVector unit_root(int m) {
  static constexpr std::array<PlaneVector, 3> kFirst = {
      PlaneVector{1.0, 0.0}, PlaneVector{0.5, kHalfSqrt3}, PlaneVector{-0.5, kHalfSqrt3}};
  const int i = MultiPoint::index(m);
  return i < 3 ? kFirst[i] : -kFirst[i - 3];
}

double multipoint_residual(const std::array<PlaneVector, 6>& p) {
  double worst = 0.0;
  for (int j = 0; j < 6; ++j) {
    const auto& u = p[j];
    const auto& v = p[(j + 2) % 6];
    const auto& w = p[(j + 4) % 6];
    worst = std::max(worst, (u + v + w).norm());
    worst = std::max(worst, (p[(j + 3) % 6] + u).norm());
    worst = std::max(worst, std::abs(wedge(u, v) - kHalfSqrt3));
  }
  return worst;
}

MultiPoint MultiPoint::from_points(const std::array<PlaneVector, 6>& points) {
  const double r = multipoint_residual(points);
  if (!(r < tol::kMultiPoint)) {
    std::ostringstream os;
    os << "multi-point relations violated by " << r;
    throw Error(ErrorKind::WedgeMismatch, os.str());
  }
  return MultiPoint(points);
}

MultiPoint MultiPoint::transformed(const FrameMatrix& g) const {
  std::array<PlaneVector, 6> out;
  for (int j = 0; j < 6; ++j) out[j] = g * points_[j];
  return from_points(out);
}

double MultiPoint::residual() const { return multipoint_residual(points_); }

MultiPoint standard_multipoint() {
  std::array<PlaneVector, 6> p;
  for (int m = 0; m < 6; ++m) p[m] = unit_root(m);
  return MultiPoint::from_points(p);
}

MultiPoint multipoint_from_pair(const PlaneVector& u0, const PlaneVector& u2) {
  const double w = wedge(u0, u2);
  if (!(std::abs(w - kHalfSqrt3) < tol::kMultiPoint)) {
    std::ostringstream os;
    os.precision(17);
    os << "u0 ^ u2 = " << w << ", expected sqrt(3)/2";
    throw Error(ErrorKind::WedgeMismatch, os.str());
  }
  const PlaneVector u4 = -u0 - u2;
  return MultiPoint::from_points({u0, -u4, u2, -u0, u4, -u2});
}

double convexity_value(const CurveSample& s) {
  if (!s.acceleration) throw Error(ErrorKind::MissingAcceleration, "curve sample has no acceleration");
  return wedge(s.velocity, *s.acceleration);
}

RankLabel::RankLabel(int value) : value_(value) {
  if (value == 0) throw Error(ErrorKind::RankZero, "no multi-curve has rank 0");
  if (value < 0 || value > 3) throw Error(ErrorKind::RankUndefined, "rank must lie in {1, 2, 3}");
}

namespace {

enum class CurveKind { Line, Curved };

CurveKind classify_curve(const SampledCurve& curve, int index) {
  if (curve.size() < kMinInteriorRankSamples + 2) {
    throw Error(ErrorKind::RankUndefined,
                "curve " + std::to_string(index) + " needs at least " +
                    std::to_string(kMinInteriorRankSamples) + " interior samples");
  }
  bool line = true;
  bool curved = true;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double kappa = convexity_value(curve[i]);
    const double threshold = tol::kLinearCurve * curve[i].velocity.squared_norm();
    if (std::abs(kappa) > threshold) line = false;
    const bool interior = i > 0 && i + 1 < curve.size();
    if (interior && !(kappa > threshold)) curved = false;
  }
  if (line) return CurveKind::Line;
  if (curved) return CurveKind::Curved;
  throw Error(ErrorKind::RankUndefined, "curve " + std::to_string(index) + " is neither a segment nor strictly convex");
}

}  // namespace

RankLabel rank_classify(const SampledMultiCurve& curves) {
  int count = 0;
  for (int j = 0; j < 6; j += 2) {
    if (classify_curve(curves[j], j) == CurveKind::Curved) ++count;
  }
  return RankLabel(count);
}

}  // namespace hexameral
