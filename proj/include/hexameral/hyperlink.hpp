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

#include "hexameral/multicurve.hpp"
#include "hexameral/sl2.hpp"

namespace hexameral {

// k = sqrt(3) / (2 a^2); throws ScaleTooSmall unless k < 1.
double k_of(double a);

// Canonical data of a rank-one link. In square coordinates the two linear
// curves are sigma_{j+2}(t) = a (1, t) and sigma_{j+4}(t) = a (s(t), 1) with
// s = (1 - k) / t, and sigma_j traces (x + a)(y + a) = a^2 (1 - k).
// The link runs over [t0, t_end] with t_end = t0 + tau (k - 1 - t0).
struct SquareRep {
  double a = 0.0;
  double t0 = 0.0;
  double tau = 0.0;
  int j = 0;  // hyperbolic index in {0, 2, 4}

  double k() const { return kSqrt3 / (2.0 * a * a); }
  bool degenerate() const { return tau == 0.0; }
  friend bool operator==(const SquareRep&, const SquareRep&) = default;
};

// Checks a^2 > sqrt(3)/2, -1 < t0 < k - 1, 0 <= tau <= 1, j in {0, 2, 4}.
SquareRep make_square_rep(double a, double t0, double tau, int j);

bool is_hyperbolic_index(int j);

double t_end(const SquareRep& rep);

struct LinkSample {
  double t = 0.0;
  MultiPoint points;
  std::array<PlaneVector, 6> velocity;
  std::array<PlaneVector, 6> acceleration;
};

// Positions, velocities and accelerations of all six curves in square
// coordinates; throws ParameterOutOfRange outside [t0, t_end].
LinkSample canonical_multipoint(const SquareRep& rep, double t);

// Area of the three sectors swept by sigma_j, sigma_{j+2}, sigma_{j+4}.
double link_area(const SquareRep& rep);

// A point of S = SL2(R) x P(sl2(R)): the frame sending the roots of unity to
// the multi-point and the oriented velocity class X = phi' phi^{-1}.
struct LinkState {
  FrameMatrix frame;
  ProjectiveTangent tangent;

  // Velocity pulled back to the circle representation of this state.
  TangentElement circle_tangent() const { return adjoint(frame.inverse(), tangent.rep()); }
  LinkState transformed(const FrameMatrix& g) const;
};

// State of the canonical link at parameter t (square coordinates).
LinkState frame_at(const SquareRep& rep, double t);

// Raw frame and velocity of the canonical curve, no range check.
FrameMatrix square_frame(const SquareRep& rep, double t);
TangentElement square_velocity(const SquareRep& rep, double t);

struct Propagation {
  LinkState state;
  SquareRep rep;
  // Maps square coordinates to the caller's coordinates: state_in is
  // placement * frame_at(rep, rep.t0).
  FrameMatrix placement;
};

// Runs one hyperbolic link of parameter tau in [0, 1) with hyperbolic index j
// from state_in. tau = 0 returns state_in unchanged.
// Throws DegenerateVelocity or NotRankOneCompatible.
Propagation propagate(const LinkState& state_in, double tau, int j);

// Combined parameter of two consecutive links on the same hyperbola.
inline double merge_tau(double first, double second) { return 1.0 - (1.0 - first) * (1.0 - second); }

// Samples the six curves of a placed link at count equally spaced parameters
// (endpoints included), with closed-form velocities and accelerations.
SampledMultiCurve sample_link(const SquareRep& rep, const FrameMatrix& placement, int count);

}  // namespace hexameral
