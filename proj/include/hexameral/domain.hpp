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
#include <string>
#include <vector>

#include "hexameral/chain.hpp"
#include "hexameral/chain_io.hpp"

namespace hexameral {

// sqrt(12): area of the balanced hexagon after normalization.
inline constexpr double kHexagonArea = 3.46410161513775458705;

// A closed, normalized hyperbolic chain with its closed-form area. The area
// covers the whole domain: the chain sweeps three sectors per link and central
// symmetry supplies the other three.
struct HexameralDomain {
  ChainParams chain;
  double area = 0.0;
  double density = 0.0;
};

// Normalizes, checks closure (NotClosed), the angle condition and the density
// range (InfeasibleInput).
HexameralDomain make_domain(const ChainParams& chain, double tolerance = tol::kClosureClassify);

// Corner link of the smoothed octagon: a = 12^{1/4} / sqrt(4 - sqrt 2),
// t0 = -1/sqrt 2, t1 = -1/2 (tau = 2 - sqrt 2), hyperbolic index j.
SquareRep octagon_square_rep(int j = 0);

// ((tau, 0), (tau, 2), (tau, 4), (tau, 0)) from the identity frame.
ChainParams octagon_chain();
HexameralDomain smoothed_octagon();

// 2 * chain_area / sqrt(12); throws NotClosed.
double density(const HexameralDomain& domain, double tolerance = tol::kClosureClassify);

struct BoundaryPolyline {
  std::vector<PlaneVector> points;
  bool closed = true;

  double shoelace_area() const;
  // max over points p of the distance from -p to the nearest vertex
  double symmetry_error() const;
  // every turn between consecutive edges is counterclockwise or straight
  bool turns_consistently() const;
};

struct CircleReference {
  BoundaryPolyline polyline;
  double density = 0.0;  // pi / sqrt(12)
};

CircleReference circle_reference(int samples);

// The rank-3 multi-curve sigma_m(t) = R(t) u*_m over t in [0, pi/3].
SampledMultiCurve circle_multicurve(int samples);

// All six curves over the fundamental interval in boundary order
// (sigma_0, sigma_1, ..., sigma_5), per_link samples per nondegenerate link.
BoundaryPolyline boundary_polyline(const HexameralDomain& domain, int per_link);

// Vertices w_j of the balanced hexagon at a state: w_j is where the tangent
// lines at sigma_j and sigma_{j+1} meet.
std::array<PlaneVector, 6> balanced_hexagon(const LinkState& state);

// Chain document plus "area", "density" and "link_length".
Json domain_to_json(const HexameralDomain& domain);

// SVG 1.1 drawing on a 1000-unit viewBox with 5% margin: boundary, balanced
// hexagon at the initial state and the six initial multi-point markers.
std::string boundary_svg(const HexameralDomain& domain, int per_link = 64);

}  // namespace hexameral
