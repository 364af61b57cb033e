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

#include "hexameral/hyperlink.hpp"

#include <sstream>

#include "hexameral/error.hpp"

namespace hexameral {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct SquarePoint {
  std::array<PlaneVector, 6> pos;
  std::array<PlaneVector, 6> vel;
  std::array<PlaneVector, 6> acc;
};

SquarePoint evaluate_square(const SquareRep& rep, double t) {
  const double a = rep.a;
  const double m = 1.0 - rep.k();
  const double s = m / t;
  const double ds = -m / (t * t);
  const double dds = 2.0 * m / (t * t * t);
  const int j = rep.j;
  SquarePoint out;
  auto set = [&](int idx, PlaneVector p, PlaneVector v, PlaneVector acc) {
    const int i = MultiPoint::index(idx);
    out.pos[i] = p;
    out.vel[i] = v;
    out.acc[i] = acc;
    const int o = MultiPoint::index(idx + 3);
    out.pos[o] = -p;
    out.vel[o] = -v;
    out.acc[o] = -acc;
  };
  const PlaneVector p2{a, a * t}, v2{0.0, a}, acc2{0.0, 0.0};
  const PlaneVector p4{a * s, a}, v4{a * ds, 0.0}, acc4{a * dds, 0.0};
  set(j + 2, p2, v2, acc2);
  set(j + 4, p4, v4, acc4);
  set(j, -p2 - p4, -v2 - v4, -acc2 - acc4);
  return out;
}

// Frame sending u*_0 -> p0, u*_2 -> p2 (columns of the images over the
// columns of the roots).
Mat2 frame_through(const PlaneVector& p0, const PlaneVector& p2) {
  static const Mat2 kRootsInv = Mat2::from_columns(unit_root(0), unit_root(2)).inverse();
  return Mat2::from_columns(p0, p2) * kRootsInv;
}

void check_parameter(const SquareRep& rep, double t) {
  const double lo = rep.t0;
  const double hi = t_end(rep);
  const double slack = 1e-12 * (1.0 + std::abs(hi));
  if (!(t >= lo - slack && t <= hi + slack)) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "t = " + fmt(t) + " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
  }
}

}  // namespace

bool is_hyperbolic_index(int j) { return j == 0 || j == 2 || j == 4; }

double k_of(double a) {
  const double k = kSqrt3 / (2.0 * a * a);
  if (!(k < 1.0)) throw Error(ErrorKind::ScaleTooSmall, "a = " + fmt(a) + " gives k = " + fmt(k) + " >= 1");
  return k;
}

SquareRep make_square_rep(double a, double t0, double tau, int j) {
  if (!is_hyperbolic_index(j)) throw Error(ErrorKind::ParameterOutOfRange, "hyperbolic index must be 0, 2 or 4");
  const double k = k_of(a);
  if (!(t0 > -1.0 && t0 < k - 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "t0 = " + fmt(t0) + " outside (-1, k - 1)");
  }
  if (!(tau >= 0.0 && tau <= 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "tau = " + fmt(tau) + " outside [0, 1]");
  return SquareRep{a, t0, tau, j};
}

double t_end(const SquareRep& rep) { return rep.t0 + rep.tau * (rep.k() - 1.0 - rep.t0); }

LinkSample canonical_multipoint(const SquareRep& rep, double t) {
  check_parameter(rep, t);
  const SquarePoint sp = evaluate_square(rep, t);
  return LinkSample{t, MultiPoint::from_points(sp.pos), sp.vel, sp.acc};
}

double link_area(const SquareRep& rep) {
  if (rep.degenerate()) return 0.0;
  const double m = 1.0 - rep.k();
  const double t0 = rep.t0;
  const double t1 = t_end(rep);
  return rep.a * rep.a * (m * (1.0 / t0 - 1.0 / t1) + (t1 - t0) - m * std::log(t0 / t1));
}

LinkState LinkState::transformed(const FrameMatrix& g) const {
  return LinkState{g * frame, ProjectiveTangent(adjoint(g, tangent.rep()))};
}

FrameMatrix square_frame(const SquareRep& rep, double t) {
  const SquarePoint sp = evaluate_square(rep, t);
  return FrameMatrix(frame_through(sp.pos[0], sp.pos[2]));
}

TangentElement square_velocity(const SquareRep& rep, double t) {
  const SquarePoint sp = evaluate_square(rep, t);
  const Mat2 phi = frame_through(sp.pos[0], sp.pos[2]);
  const Mat2 dphi = frame_through(sp.vel[0], sp.vel[2]);
  return TangentElement::from_matrix(dphi * phi.inverse());
}

LinkState frame_at(const SquareRep& rep, double t) {
  check_parameter(rep, t);
  return LinkState{square_frame(rep, t), ProjectiveTangent(square_velocity(rep, t))};
}

namespace {

struct Recovery {
  SquareRep rep;
  FrameMatrix placement;
};

// Finds h in SL2 with h d_{j+2} ~ (0, +1), h d_{j+4} ~ (-1, 0) and
// x(h p_{j+2}) = y(h p_{j+4}) = a; the square parameters are then read off
// h p_{j+2} = (a, a t0).
Recovery recover_square(const LinkState& state, int j, double tau) {
  const TangentElement& x = state.tangent.rep();
  if (std::abs(x.det()) < 1e-12) throw Error(ErrorKind::DegenerateVelocity, "velocity directions are dependent");
  const PlaneVector p2 = state.frame * unit_root(j + 2);
  const PlaneVector p4 = state.frame * unit_root(j + 4);
  const PlaneVector d2 = x * p2;
  const PlaneVector d4 = x * p4;
  if (!(wedge(d2, d4) > 0.0)) {
    throw Error(ErrorKind::NotRankOneCompatible, "linear curve velocities are negatively oriented");
  }
  const Mat2 target{0.0, -1.0, 1.0, 0.0};  // columns (0, 1) and (-1, 0)
  const Mat2 h0 = target * Mat2::from_columns(d2, d4).inverse();
  const PlaneVector p = h0 * p2;
  const PlaneVector q = h0 * p4;
  if (!(p.x > 0.0 && q.y > 0.0)) {
    throw Error(ErrorKind::NotRankOneCompatible, "linear curves do not sit on x = a, y = a");
  }
  const double a = std::sqrt(p.x * q.y / h0.det());
  const double k = kSqrt3 / (2.0 * a * a);
  if (!(k < 1.0)) throw Error(ErrorKind::NotRankOneCompatible, "recovered scale gives k = " + fmt(k) + " >= 1");
  const double t0 = p.y / q.y;
  if (!(t0 > -1.0 && t0 < k - 1.0)) {
    throw Error(ErrorKind::NotRankOneCompatible, "recovered t0 = " + fmt(t0) + " outside (-1, k - 1)");
  }
  const Mat2 h = Mat2{a / p.x, 0.0, 0.0, a / q.y} * h0;
  return Recovery{SquareRep{a, t0, tau, j}, FrameMatrix(h.inverse())};
}

}  // namespace

Propagation propagate(const LinkState& state_in, double tau, int j) {
  if (!is_hyperbolic_index(j)) throw Error(ErrorKind::ParameterOutOfRange, "hyperbolic index must be 0, 2 or 4");
  if (!(tau >= 0.0 && tau < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "tau = " + fmt(tau) + " outside [0, 1)");
  if (tau == 0.0) {
    try {
      const Recovery r = recover_square(state_in, j, 0.0);
      return Propagation{state_in, r.rep, r.placement};
    } catch (const Error&) {
      return Propagation{state_in, SquareRep{0.0, 0.0, 0.0, j}, FrameMatrix::identity()};
    }
  }
  if (!star_check(state_in.circle_tangent())) {
    throw Error(ErrorKind::NotRankOneCompatible, "tangent violates the star conditions");
  }
  const Recovery r = recover_square(state_in, j, tau);
  const double t1 = t_end(r.rep);
  LinkState out{r.placement * square_frame(r.rep, t1),
                ProjectiveTangent(adjoint(r.placement, square_velocity(r.rep, t1)))};
  return Propagation{out, r.rep, r.placement};
}

SampledMultiCurve sample_link(const SquareRep& rep, const FrameMatrix& placement, int count) {
  if (count < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples per link");
  SampledMultiCurve curves;
  const double t1 = t_end(rep);
  for (int i = 0; i < count; ++i) {
    const double t = rep.t0 + (t1 - rep.t0) * static_cast<double>(i) / (count - 1);
    const SquarePoint sp = evaluate_square(rep, t);
    for (int m = 0; m < 6; ++m) {
      curves[m].push_back(CurveSample{t, placement * sp.pos[m], placement * sp.vel[m], placement * sp.acc[m]});
    }
  }
  return curves;
}

}  // namespace hexameral
