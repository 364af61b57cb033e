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

using namespace hexameral;

namespace {

const double kRoot2 = std::sqrt(2.0);

SquareRep random_rep(std::mt19937_64& rng, int j = 0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double a = std::sqrt(kHalfSqrt3) * (1.05 + 1.5 * u(rng));
  const double k = kSqrt3 / (2.0 * a * a);
  const double t0 = -1.0 + k * (0.02 + 0.9 * u(rng));
  return make_square_rep(a, t0, 0.05 + 0.9 * u(rng), j);
}

// Sum of the sector areas swept by the even curves, by the shoelace rule.
double shoelace_link_area(const SquareRep& rep, int samples) {
  const double t1 = t_end(rep);
  double twice = 0.0;
  std::array<PlaneVector, 3> prev{};
  for (int i = 0; i <= samples; ++i) {
    const double t = rep.t0 + (t1 - rep.t0) * i / samples;
    const LinkSample s = canonical_multipoint(rep, std::min(t, t1));
    for (int m = 0; m < 3; ++m) {
      const PlaneVector p = s.points[rep.j + 2 * m];
      if (i > 0) twice += wedge(prev[m], p);
      prev[m] = p;
    }
  }
  return 0.5 * twice;
}

LinkState random_state(std::mt19937_64& rng) {
  const SquareRep rep = random_rep(rng);
  return frame_at(rep, rep.t0);
}

FrameMatrix random_frame(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = u(rng), b = u(rng), c = u(rng);
  return exp_tangent({a, b, c}, 1.0);
}

double frame_gap(const FrameMatrix& f, const FrameMatrix& g) { return (f.matrix() - g.matrix()).max_abs(); }

}  // namespace

TEST_CASE("k from a") {
  const SquareRep oct = octagon_square_rep(0);
  CHECK(k_of(oct.a) == doctest::Approx((4.0 - kRoot2) / 4.0).epsilon(1e-14));
  CHECK(k_of(10.0) < k_of(2.0));
  try {
    k_of(std::sqrt(kHalfSqrt3));
    FAIL("expected ScaleTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ScaleTooSmall);
  }
}

TEST_CASE("square rep validation") {
  CHECK_THROWS_AS(make_square_rep(1.5, 0.5, 0.2, 0), Error);   // t0 outside (-1, k-1)
  CHECK_THROWS_AS(make_square_rep(1.5, -0.5, 1.0, 0), Error);  // tau = 1
  CHECK_THROWS_AS(make_square_rep(1.5, -0.5, 0.2, 1), Error);  // odd index
  CHECK(is_hyperbolic_index(4));
  CHECK_FALSE(is_hyperbolic_index(3));
}

TEST_CASE("end parameter") {
  const SquareRep oct = octagon_square_rep(0);
  CHECK(oct.t0 == doctest::Approx(-1.0 / kRoot2));
  CHECK(t_end(oct) == doctest::Approx(-0.5).epsilon(1e-14));
  SquareRep zero = oct;
  zero.tau = 0.0;
  CHECK(t_end(zero) == oct.t0);
  SquareRep full = oct;
  full.tau = 1.0;
  CHECK(t_end(full) == doctest::Approx(oct.k() - 1.0));
}

TEST_CASE("canonical multi-point") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const SquareRep rep = random_rep(rng, 2 * (i % 3));
    const double t = rep.t0 + (t_end(rep) - rep.t0) * std::uniform_real_distribution<double>(0, 1)(rng);
    const LinkSample s = canonical_multipoint(rep, t);
    CHECK(wedge(s.points[rep.j + 2], s.points[rep.j + 4]) == doctest::Approx(kHalfSqrt3).epsilon(1e-12));
    const PlaneVector h = s.points[rep.j];
    CHECK(std::abs((h.x + rep.a) * (h.y + rep.a) - rep.a * rep.a * (1.0 - rep.k())) < 1e-10);
    CHECK(s.points.residual() < 1e-9);
  }
  const SquareRep oct = octagon_square_rep(0);
  const double s0 = (1.0 - oct.k()) / oct.t0;
  CHECK(s0 > -1.0);
  CHECK(s0 < 0.0);
  CHECK(oct.t0 > -1.0);
  CHECK(oct.t0 < 0.0);
  try {
    canonical_multipoint(oct, 0.0);
    FAIL("expected ParameterOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParameterOutOfRange);
  }
}

TEST_CASE("octagon link area") {
  const double expected = kSqrt3 * (8.0 - 8.0 * kRoot2 + kRoot2 * std::log(2.0)) / (4.0 * (-4.0 + kRoot2));
  CHECK(link_area(octagon_square_rep(0)) == doctest::Approx(expected).epsilon(1e-13));
  SquareRep zero = octagon_square_rep(0);
  zero.tau = 0.0;
  CHECK(link_area(zero) == 0.0);
}

TEST_CASE("link area matches quadrature") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const SquareRep rep = random_rep(rng, 2 * (i % 3));
    CHECK(std::abs(link_area(rep) - shoelace_link_area(rep, 10000)) < 1e-8);
  }
  // Second order: doubling the samples cuts the error by about four.
  const SquareRep oct = octagon_square_rep(0);
  const double e1 = std::abs(link_area(oct) - shoelace_link_area(oct, 200));
  const double e2 = std::abs(link_area(oct) - shoelace_link_area(oct, 400));
  CHECK(e1 / e2 > 3.8);
}

TEST_CASE("frames along a link") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const SquareRep rep = random_rep(rng, 2 * (i % 3));
    const double t = rep.t0 + (t_end(rep) - rep.t0) * std::uniform_real_distribution<double>(0, 1)(rng);
    const LinkState st = frame_at(rep, t);
    REQUIRE(std::abs(st.frame.det() - 1.0) < 1e-12);
    const LinkSample s = canonical_multipoint(rep, t);
    for (int m = 0; m < 6; ++m) REQUIRE((st.frame * unit_root(m) - s.points[m]).norm() < 1e-10);
    REQUIRE(star_check(st.circle_tangent()));
  }
  const SquareRep oct = octagon_square_rep(0);
  CHECK(star_check(frame_at(oct, oct.t0).circle_tangent()));
}

TEST_CASE("propagate") {
  const SquareRep oct = octagon_square_rep(0);
  const LinkState start = frame_at(oct, oct.t0);

  const Propagation same = propagate(start, 0.0, 0);
  CHECK(frame_gap(same.state.frame, start.frame) == 0.0);
  CHECK(same.rep.degenerate());

  const Propagation p = propagate(start, oct.tau, 0);
  const LinkState end = frame_at(oct, t_end(oct));
  CHECK(frame_gap(p.state.frame, end.frame) < 1e-10);
  CHECK(projective_distance(p.state.tangent, end.tangent) < 1e-10);
  CHECK(p.rep.a == doctest::Approx(oct.a).epsilon(1e-10));
  CHECK(p.rep.t0 == doctest::Approx(oct.t0).epsilon(1e-10));

  const LinkState bad{FrameMatrix::identity(), ProjectiveTangent(TangentElement{0, 1, 1})};
  try {
    propagate(bad, 0.3, 0);
    FAIL("expected NotRankOneCompatible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRankOneCompatible);
  }
}

TEST_CASE("propagate is SL2 equivariant") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    const LinkState s = random_state(rng);
    const FrameMatrix g = random_frame(rng);
    const double tau = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    const Propagation lhs = propagate(s.transformed(g), tau, 0);
    const LinkState rhs = propagate(s, tau, 0).state.transformed(g);
    CHECK(frame_gap(lhs.state.frame, rhs.frame) < 1e-9);
    CHECK(projective_distance(lhs.state.tangent, rhs.tangent) < 1e-9);
  }
}

TEST_CASE("propagate semigroup along one index") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.7);
  for (int i = 0; i < 200; ++i) {
    const LinkState s = random_state(rng);
    const double t1 = u(rng), t2 = u(rng);
    const LinkState twice = propagate(propagate(s, t1, 0).state, t2, 0).state;
    const Propagation once = propagate(s, merge_tau(t1, t2), 0);
    CHECK(frame_gap(twice.frame, once.state.frame) < 1e-9);
    CHECK(projective_distance(twice.tangent, once.state.tangent) < 1e-9);
  }
}

TEST_CASE("link area is SL2 invariant") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const LinkState s = random_state(rng);
    const FrameMatrix g = random_frame(rng);
    const double tau = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    CHECK(link_area(propagate(s.transformed(g), tau, 0).rep) ==
          doctest::Approx(link_area(propagate(s, tau, 0).rep)).epsilon(1e-9));
  }
}

TEST_CASE("propagated links have rank one") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const LinkState s = random_state(rng);
    const Propagation p = propagate(s, 0.5, 0);
    const SampledMultiCurve curves = sample_link(p.rep, p.placement, 32);
    for (int m = 0; m < 6; ++m) {
      for (const auto& sample : curves[m]) {
        const double kappa = convexity_value(sample);
        // The hyperbola and its antipode are curved, the other four are lines.
        if ((m - p.rep.j + 6) % 3 == 0) {
          CHECK(kappa > 0.0);
        } else {
          CHECK(std::abs(kappa) <= 1e-9 * sample.velocity.squared_norm());
        }
      }
    }
    CHECK(rank_classify(curves).value() == 1);
  }
}
