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

#include "hexameral/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hexameral/error.hpp"

namespace hexameral {

ChainTrace assemble(const ChainParams& chain) {
  ChainTrace trace;
  trace.states.reserve(chain.links.size() + 1);
  trace.links.reserve(chain.links.size());
  trace.states.push_back(chain.initial);
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    try {
      Propagation p = propagate(trace.states.back(), chain.links[i].tau, chain.links[i].j);
      trace.links.push_back(PlacedLink{p.rep, p.placement});
      trace.states.push_back(p.state);
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), i);
    }
  }
  return trace;
}

double chain_area(const ChainTrace& trace) {
  double total = 0.0;
  for (const auto& link : trace.links) total += link_area(link.rep);
  return total;
}

double chain_area(const ChainParams& chain) { return chain_area(assemble(chain)); }

FrameMatrix sixth_turn() { return rotation(kPi / 3.0); }

std::array<double, 7> state_mismatch(const FrameMatrix& reference, const LinkState& lhs, const LinkState& rhs) {
  const FrameMatrix back = reference.inverse();
  const Mat2 df = (back * lhs.frame).matrix() - (back * rhs.frame).matrix();
  const TangentElement x = ProjectiveTangent(adjoint(back, lhs.tangent.rep())).rep();
  const TangentElement y = ProjectiveTangent(adjoint(back, rhs.tangent.rep())).rep();
  return {df.m00, df.m01, df.m10, df.m11, x.a - y.a, x.b - y.b, x.c - y.c};
}

std::array<double, 7> closure_mismatch(const ChainTrace& trace) {
  const LinkState& start = trace.initial();
  const LinkState target{start.frame * sixth_turn(), start.tangent};
  return state_mismatch(start.frame, trace.terminal(), target);
}

double angle_margin(const ChainTrace& trace, int samples_per_link) {
  if (samples_per_link < 2) throw Error(ErrorKind::InvalidArgument, "need at least two angle samples per link");
  const FrameMatrix back = trace.initial().frame.inverse();
  const double sixth = kPi / 3.0;
  double lowest = 0.0;  // the start sits at arg 0
  double highest = 0.0;
  double drop = 0.0;
  double previous = 0.0;
  for (const auto& link : trace.links) {
    if (link.rep.degenerate()) continue;
    const FrameMatrix to_start = back * link.placement;
    const double t1 = t_end(link.rep);
    for (int i = 0; i < samples_per_link; ++i) {
      const double t = link.rep.t0 + (t1 - link.rep.t0) * static_cast<double>(i) / (samples_per_link - 1);
      const PlaneVector v = to_start * (square_frame(link.rep, t) * unit_root(0));
      const double arg = std::atan2(v.y, v.x);
      lowest = std::min(lowest, arg);
      highest = std::max(highest, arg);
      drop = std::max(drop, previous - arg);
      previous = arg;
    }
  }
  return std::min({lowest, sixth - highest, -drop});
}

ClosureReport closure_report(const ChainTrace& trace, int angle_samples) {
  ClosureReport report;
  const LinkState& start = trace.initial();
  const FrameMatrix back = start.frame.inverse();
  report.frame_residual = ((back * trace.terminal().frame).matrix() - sixth_turn().matrix()).max_abs();
  const ProjectiveTangent end_tangent(adjoint(back, trace.terminal().tangent.rep()));
  const ProjectiveTangent start_tangent(adjoint(back, start.tangent.rep()));
  report.tangent_residual = projective_distance(end_tangent, start_tangent);
  report.angle_margin = angle_margin(trace, angle_samples);
  report.angle_ok = report.angle_margin >= -tol::kAngle;
  return report;
}

ClosureReport closure_report(const ChainParams& chain, int angle_samples) {
  return closure_report(assemble(chain), angle_samples);
}

namespace {

int wrap(int j) { return ((j % 6) + 6) % 6; }

// Steps of 2 needed to go from index `from` to index `to` (0, 1 or 2).
int index_steps(int from, int to) { return (wrap(to - from) / 2) % 3; }

}  // namespace

ChainParams normalize_links(const ChainParams& chain) {
  ChainParams out{chain.initial, {}};
  if (chain.links.empty()) return out;
  std::vector<LinkParam> merged;
  for (const auto& link : chain.links) {
    if (link.tau == 0.0) continue;
    if (!merged.empty() && merged.back().j == link.j) {
      merged.back().tau = merge_tau(merged.back().tau, link.tau);
    } else {
      merged.push_back(link);
    }
  }
  int next = chain.links.front().j;
  for (const auto& link : merged) {
    while (next != link.j) {
      out.links.push_back(LinkParam{0.0, next});
      next = wrap(next + 2);
    }
    out.links.push_back(link);
    next = wrap(link.j + 2);
  }
  return out;
}

int link_length(const ChainParams& chain, double tolerance) {
  const ChainParams normal = normalize_links(chain);
  const ChainTrace trace = assemble(normal);
  const ClosureReport report = closure_report(trace);
  if (!report.closed(tolerance)) throw Error(ErrorKind::NotClosed, "chain does not close up to rotation by pi/3");

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < normal.links.size(); ++i) {
    if (normal.links[i].tau > 0.0) active.push_back(i);
  }
  if (active.empty()) throw Error(ErrorKind::NotClosed, "chain has no nondegenerate link");

  // After one period sigma_m(t1 + s) = sigma_{m+1}(t0 + s), so the first link
  // must repeat with its hyperbolic index advanced by 2.
  const std::size_t first = active.front();
  const LinkParam& lead = normal.links[first];
  const int shifted = wrap(lead.j + 2);
  try {
    const Propagation again = propagate(trace.terminal(), lead.tau, shifted);
    const FrameMatrix back = trace.initial().frame.inverse();
    const Mat2 expected = (back * trace.states[first + 1].frame * sixth_turn()).matrix();
    const double gap = ((back * again.state.frame).matrix() - expected).max_abs();
    if (!(gap < tolerance)) {
      throw Error(ErrorKind::LinkLengthViolation, "period does not repeat the first link with index shifted by 2");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::LinkLengthViolation) throw;
    throw Error(ErrorKind::LinkLengthViolation, std::string("period continuation failed: ") + e.what());
  }

  std::vector<int> indices;
  for (std::size_t i : active) indices.push_back(normal.links[i].j);
  // A last link on the same hyperbola as the shifted first link is one link
  // straddling the period boundary.
  if (indices.size() > 1 && indices.back() == shifted) indices.pop_back();

  int entries = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const int to = i + 1 < indices.size() ? indices[i + 1] : shifted;
    entries += index_steps(indices[i], to);
  }
  if ((entries - 1) % 3 != 0) {
    throw Error(ErrorKind::LinkLengthViolation, "link length " + std::to_string(entries) + " is not 1 mod 3");
  }
  return entries;
}

std::vector<BoundaryFrame> sample_boundary_frames(const ChainTrace& trace, int samples_per_link) {
  if (samples_per_link < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples per link");
  std::vector<BoundaryFrame> out;
  for (std::size_t i = 0; i < trace.links.size(); ++i) {
    const auto& link = trace.links[i];
    if (link.rep.degenerate()) continue;
    const double t1 = t_end(link.rep);
    for (int s = 0; s < samples_per_link; ++s) {
      const double t = link.rep.t0 + (t1 - link.rep.t0) * static_cast<double>(s) / (samples_per_link - 1);
      out.push_back(BoundaryFrame{i, t, link.placement * square_frame(link.rep, t),
                                  adjoint(link.placement, square_velocity(link.rep, t))});
    }
  }
  return out;
}

}  // namespace hexameral
