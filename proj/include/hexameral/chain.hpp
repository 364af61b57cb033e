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
#include <cstddef>
#include <vector>

#include "hexameral/hyperlink.hpp"

namespace hexameral {

struct LinkParam {
  double tau = 0.0;
  int j = 0;
  friend bool operator==(const LinkParam&, const LinkParam&) = default;
};

struct ChainParams {
  LinkState initial;
  std::vector<LinkParam> links;
};

struct PlacedLink {
  SquareRep rep;
  FrameMatrix placement;  // square coordinates -> chain coordinates
};

// states[i] is the state entering link i; states.back() is the terminal state.
struct ChainTrace {
  std::vector<LinkState> states;
  std::vector<PlacedLink> links;

  const LinkState& initial() const { return states.front(); }
  const LinkState& terminal() const { return states.back(); }
};

// Propagates link by link. Errors from propagate are rethrown with the index
// of the failing link.
ChainTrace assemble(const ChainParams& chain);

double chain_area(const ChainTrace& trace);
double chain_area(const ChainParams& chain);

// Rotation by pi/3 relating phi(t1) and phi(t0) on a closed boundary.
FrameMatrix sixth_turn();

struct ClosureReport {
  double frame_residual = 0.0;    // max |phi(t0)^{-1} phi(t1) - rho|
  double tangent_residual = 0.0;  // projective distance in the circle representation
  bool angle_ok = false;
  double angle_margin = 0.0;  // negative when the angle condition fails

  bool closed(double tolerance) const {
    return frame_residual < tolerance && tangent_residual < tolerance;
  }
};

inline constexpr int kDefaultAngleSamples = 64;

// Both residuals are measured after pulling back by the initial frame, so they
// do not change when the whole chain is moved by an element of SL2.
ClosureReport closure_report(const ChainTrace& trace, int angle_samples = kDefaultAngleSamples);
ClosureReport closure_report(const ChainParams& chain, int angle_samples = kDefaultAngleSamples);

// Angle condition alone: arg(phi(t0)^{-1} phi(t) u*_0) sampled per link must
// be nondecreasing and stay in [0, pi/3]. Returns the margin (>= 0 on pass,
// up to tol::kAngle).
double angle_margin(const ChainTrace& trace, int samples_per_link = kDefaultAngleSamples);

// Differences (frame entries, unit tangent components) between two states,
// both pulled back by reference.inverse().
std::array<double, 7> state_mismatch(const FrameMatrix& reference, const LinkState& lhs, const LinkState& rhs);

// state_mismatch of the terminal state against initial * rho.
std::array<double, 7> closure_mismatch(const ChainTrace& trace);

// Merges consecutive links on the same hyperbola and pads with tau = 0 links
// so that the hyperbolic index advances by 2 at every step. The leading index
// is kept.
ChainParams normalize_links(const ChainParams& chain);

// Number n+1 of links in the shortest padded representation of one period,
// starting at the beginning of a link. Throws NotClosed when the residuals
// exceed tolerance and LinkLengthViolation when the period does not shift the
// hyperbolic index by 2 or n is not divisible by 3.
int link_length(const ChainParams& chain, double tolerance = tol::kClosureClassify);

struct BoundaryFrame {
  std::size_t link = 0;
  double t = 0.0;
  FrameMatrix frame;
  TangentElement velocity;  // phi' phi^{-1} at this sample
};

// phi(t) along every nondegenerate link, samples_per_link points each
// (endpoints included).
std::vector<BoundaryFrame> sample_boundary_frames(const ChainTrace& trace, int samples_per_link);

}  // namespace hexameral
