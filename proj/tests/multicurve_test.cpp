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

#include <cmath>
#include <random>

#include "doctest.h"
#include "hexameral/domain.hpp"
#include "hexameral/error.hpp"
#include "hexameral/hyperlink.hpp"
#include "hexameral/multicurve.hpp"

using namespace hexameral;

namespace {

SampledCurve line_curve(PlaneVector p, PlaneVector v, int n) {
  SampledCurve c;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    c.push_back({t, p + t * v, v, PlaneVector{}});
  }
  return c;
}

SampledCurve arc(double t0, double t1, int n) {
  SampledCurve c;
  for (int i = 0; i < n; ++i) {
    const double t = t0 + (t1 - t0) * i / (n - 1);
    c.push_back({t, {std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}, PlaneVector{-std::cos(t), -std::sin(t)}});
  }
  return c;
}

}  // namespace

TEST_CASE("standard multi-point") {
  const MultiPoint u = standard_multipoint();
  CHECK(u[0] == PlaneVector{1.0, 0.0});
  CHECK(u[3] == PlaneVector{-1.0, 0.0});
  CHECK(u[-1] == u[5]);
  CHECK(u.residual() < 1e-15);
  CHECK_NOTHROW(MultiPoint::from_points(u.points()));
}

TEST_CASE("multi-point from a pair") {
  const MultiPoint u = multipoint_from_pair(unit_root(0), unit_root(2));
  for (int j = 0; j < 6; ++j) CHECK((u[j] - unit_root(j)).norm() < 1e-15);

  try {
    multipoint_from_pair({1, 0}, {0, 1});
    FAIL("expected WedgeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WedgeMismatch);
  }

  // The octagon link's initial multi-point.
  const SquareRep rep = octagon_square_rep(0);
  const double s0 = (1.0 - rep.k()) / rep.t0;
  const MultiPoint m = multipoint_from_pair({rep.a * (-1.0 - s0), rep.a * (-1.0 - rep.t0)}, {rep.a, rep.a * rep.t0});
  const LinkSample sample = canonical_multipoint(rep, rep.t0);
  for (int j = 0; j < 6; ++j) CHECK((m[j] - sample.points[j]).norm() < 1e-12);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), len(0.2, 5.0), step(0.1, kPi - 0.1);
  for (int i = 0; i < 10000; ++i) {
    const double th = ang(rng), r = len(rng), phi = step(rng);
    const PlaneVector u0{r * std::cos(th), r * std::sin(th)};
    const double r2 = kHalfSqrt3 / (r * std::sin(phi));
    const PlaneVector u2{r2 * std::cos(th + phi), r2 * std::sin(th + phi)};
    REQUIRE(multipoint_from_pair(u0, u2).residual() < 1e-9);
  }
}

TEST_CASE("multi-points are SL2 equivariant") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (std::abs(1.0 + b * c) < 0.1) continue;
    const FrameMatrix g = FrameMatrix(1.0 + b * c, b, c, 1.0) * FrameMatrix(std::exp(a), 0.0, 0.0, std::exp(-a));
    CHECK(standard_multipoint().transformed(g).residual() < 1e-9 * std::max(1.0, g.matrix().max_abs() * g.matrix().max_abs()));
  }
}

TEST_CASE("convexity value") {
  CHECK(convexity_value(arc(0.0, 1.0, 2)[0]) == doctest::Approx(1.0));
  CHECK(convexity_value(line_curve({0, 0}, {1, 2}, 2)[0]) == 0.0);
  CHECK_THROWS_AS(convexity_value(CurveSample{0.0, {1, 0}, {0, 1}, std::nullopt}), Error);

  const SampledMultiCurve link = sample_link(octagon_square_rep(0), FrameMatrix::identity(), 64);
  bool found = false;
  for (const auto& s : link[0]) {
    if (std::abs(s.t - (-0.6)) < 0.01) {
      CHECK(convexity_value(s) > 0.0);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("rank labels") {
  CHECK(RankLabel(2).value() == 2);
  try {
    RankLabel(0);
    FAIL("expected RankZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankZero);
  }
  CHECK_THROWS_AS(RankLabel(4), Error);
}

TEST_CASE("rank classification") {
  CHECK(rank_classify(circle_multicurve(64)).value() == 3);
  CHECK(rank_classify(sample_link(octagon_square_rep(2), FrameMatrix::identity(), 64)).value() == 1);

  SampledMultiCurve still;
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 16; ++i) still[j].push_back({i / 15.0, unit_root(j), {}, PlaneVector{}});
  }
  try {
    rank_classify(still);
    FAIL("expected RankZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankZero);
  }

  // A curve that is straight on one half and curved on the other.
  SampledMultiCurve mixed = circle_multicurve(64);
  for (std::size_t i = 0; i < mixed[0].size() / 2; ++i) mixed[0][i].acceleration = PlaneVector{};
  try {
    rank_classify(mixed);
    FAIL("expected RankUndefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankUndefined);
  }

  // Too few samples cannot decide.
  CHECK_THROWS_AS(rank_classify(circle_multicurve(6)), Error);
}

TEST_CASE("rank is invariant under SL2 and reparametrization") {
  const SquareRep rep = octagon_square_rep(4);
  const FrameMatrix g(2.0, 1.0, 1.0, 1.0);
  CHECK(rank_classify(sample_link(rep, g, 40)).value() == 1);

  SampledMultiCurve curves = circle_multicurve(48);
  const double lambda = 2.5;
  for (auto& c : curves) {
    for (auto& s : c) {
      s.t = lambda * s.t;
      s.velocity = (1.0 / lambda) * s.velocity;
      s.acceleration = (1.0 / (lambda * lambda)) * *s.acceleration;
    }
  }
  CHECK(rank_classify(curves).value() == 3);
}
