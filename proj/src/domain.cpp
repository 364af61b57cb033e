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

#include "hexameral/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hexameral/error.hpp"

namespace hexameral {

HexameralDomain make_domain(const ChainParams& chain, double tolerance) {
  HexameralDomain domain{normalize_links(chain), 0.0, 0.0};
  const ChainTrace trace = assemble(domain.chain);
  const ClosureReport report = closure_report(trace);
  if (!report.closed(tolerance)) throw Error(ErrorKind::NotClosed, "chain does not close up to rotation by pi/3");
  if (!report.angle_ok) throw Error(ErrorKind::InfeasibleInput, "boundary violates the angle condition");
  domain.area = 2.0 * chain_area(trace);
  domain.density = domain.area / kHexagonArea;
  if (!(domain.density > 0.0 && domain.density < 1.0)) {
    throw Error(ErrorKind::InfeasibleInput, "density outside (0, 1)");
  }
  return domain;
}

SquareRep octagon_square_rep(int j) {
  const double root2 = std::sqrt(2.0);
  const double a = std::pow(12.0, 0.25) / std::sqrt(4.0 - root2);
  return make_square_rep(a, -1.0 / root2, 2.0 - root2, j);
}

ChainParams octagon_chain() {
  const SquareRep rep = octagon_square_rep(0);
  const LinkState start = frame_at(rep, rep.t0);
  // Circle representation: identity frame, pulled-back velocity.
  const LinkState initial = start.transformed(start.frame.inverse());
  const LinkState normalized{FrameMatrix::identity(), initial.tangent};
  return ChainParams{normalized, {{rep.tau, 0}, {rep.tau, 2}, {rep.tau, 4}, {rep.tau, 0}}};
}

HexameralDomain smoothed_octagon() { return make_domain(octagon_chain(), tol::kClosureVerify); }

double density(const HexameralDomain& domain, double tolerance) {
  const ChainTrace trace = assemble(domain.chain);
  if (!closure_report(trace, 2).closed(tolerance)) {
    throw Error(ErrorKind::NotClosed, "chain does not close up to rotation by pi/3");
  }
  return 2.0 * chain_area(trace) / kHexagonArea;
}

double BoundaryPolyline::shoelace_area() const {
  double twice = 0.0;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) twice += wedge(points[i], points[(i + 1) % n]);
  return 0.5 * twice;
}

double BoundaryPolyline::symmetry_error() const {
  double worst = 0.0;
  for (const auto& p : points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : points) best = std::min(best, (p + q).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

bool BoundaryPolyline::turns_consistently() const {
  const std::size_t n = points.size();
  if (n < 3) return false;
  double radius = 0.0;
  for (const auto& p : points) radius = std::max(radius, p.norm());
  // Collinear samples on the straight arcs give wedges at roundoff level,
  // which is set by the coordinates rather than by the edge lengths.
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * radius;
  for (std::size_t i = 0; i < n; ++i) {
    const PlaneVector e1 = points[(i + 1) % n] - points[i];
    const PlaneVector e2 = points[(i + 2) % n] - points[(i + 1) % n];
    const double a = e1.norm(), b = e2.norm();
    if (wedge(e1, e2) < -(1e-12 * a * b + slack * (a + b))) return false;
  }
  return true;
}

CircleReference circle_reference(int samples) {
  if (samples < 6) throw Error(ErrorKind::InvalidArgument, "circle reference needs at least 6 samples");
  CircleReference ref;
  for (int i = 0; i < samples; ++i) {
    if (samples % 6 == 0 && (6 * i) % samples == 0) {
      ref.polyline.points.push_back(unit_root(6 * i / samples));
    } else {
      const double theta = 2.0 * kPi * i / samples;
      ref.polyline.points.push_back({std::cos(theta), std::sin(theta)});
    }
  }
  ref.density = kPi / kHexagonArea;
  return ref;
}

SampledMultiCurve circle_multicurve(int samples) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
  SampledMultiCurve curves;
  for (int i = 0; i < samples; ++i) {
    const double t = (kPi / 3.0) * i / (samples - 1);
    const FrameMatrix r = rotation(t);
    for (int m = 0; m < 6; ++m) {
      const PlaneVector p = r * unit_root(m);
      curves[m].push_back(CurveSample{t, p, {-p.y, p.x}, -p});
    }
  }
  return curves;
}

BoundaryPolyline boundary_polyline(const HexameralDomain& domain, int per_link) {
  if (per_link < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples per link");
  const ChainTrace trace = assemble(domain.chain);
  if (!closure_report(trace, 2).closed(tol::kClosureClassify)) {
    throw Error(ErrorKind::NotClosed, "chain does not close up to rotation by pi/3");
  }
  std::array<std::vector<PlaneVector>, 3> arcs;
  for (const auto& link : trace.links) {
    if (link.rep.degenerate()) continue;
    const double t1 = t_end(link.rep);
    for (int i = 0; i < per_link; ++i) {
      const double t = link.rep.t0 + (t1 - link.rep.t0) * static_cast<double>(i) / per_link;
      const FrameMatrix phi = link.placement * square_frame(link.rep, t);
      for (int m = 0; m < 3; ++m) arcs[m].push_back(phi * unit_root(m));
    }
  }
  BoundaryPolyline out;
  for (int m = 0; m < 6; ++m) {
    for (const auto& p : arcs[m % 3]) out.points.push_back(m < 3 ? p : -p);
  }
  return out;
}

std::array<PlaneVector, 6> balanced_hexagon(const LinkState& state) {
  std::array<PlaneVector, 6> p, d, w;
  for (int m = 0; m < 6; ++m) {
    p[m] = state.frame * unit_root(m);
    d[m] = state.tangent.rep() * p[m];
  }
  for (int j = 0; j < 6; ++j) {
    const int n = (j + 1) % 6;
    const double denom = wedge(d[j], d[n]);
    if (denom == 0.0) throw Error(ErrorKind::DegenerateVelocity, "parallel tangent lines");
    const double s = wedge(p[n] - p[j], d[n]) / denom;
    w[j] = p[j] + s * d[j];
  }
  return w;
}

Json domain_to_json(const HexameralDomain& domain) {
  Json doc = chain_to_json(domain.chain);
  doc["area"] = domain.area;
  doc["density"] = domain.density;
  doc["link_length"] = link_length(domain.chain);
  return doc;
}

}  // namespace hexameral
