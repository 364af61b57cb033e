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

#include "hexameral/sl2.hpp"

#include <algorithm>
#include <sstream>

#include "hexameral/error.hpp"

namespace hexameral {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::DegenerateVelocity: return "DegenerateVelocity";
    case ErrorKind::WedgeMismatch: return "WedgeMismatch";
    case ErrorKind::MissingAcceleration: return "MissingAcceleration";
    case ErrorKind::RankUndefined: return "RankUndefined";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotRankOneCompatible: return "NotRankOneCompatible";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::LinkLengthViolation: return "LinkLengthViolation";
    case ErrorKind::StarViolation: return "StarViolation";
    case ErrorKind::SignCondition: return "SignCondition";
    case ErrorKind::InfeasibleInput: return "InfeasibleInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& what, std::size_t link_index)
    : std::runtime_error("link " + std::to_string(link_index) + ": " + what),
      kind_(kind),
      link_(link_index) {}

double Mat2::max_abs() const {
  return std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
}

Mat2 Mat2::inverse() const {
  const double d = det();
  if (d == 0.0 || !std::isfinite(d)) throw Error(ErrorKind::InvalidFrame, "singular 2x2 matrix");
  return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

FrameMatrix::FrameMatrix(double alpha, double beta, double gamma, double delta)
    : FrameMatrix(Mat2{alpha, beta, gamma, delta}) {}

FrameMatrix::FrameMatrix(const Mat2& m) : m_(m) {
  const double d = m.det();
  if (!std::isfinite(d) || std::abs(d - 1.0) >= tol::kReproject) {
    std::ostringstream os;
    os.precision(17);
    os << "frame determinant " << d << " is not 1";
    throw Error(ErrorKind::InvalidFrame, os.str());
  }
  if (std::abs(d - 1.0) > tol::kDeterminant) m_ = (1.0 / std::sqrt(d)) * m;
}

FrameMatrix FrameMatrix::renormalized(const Mat2& m) {
  const double d = m.det();
  if (!std::isfinite(d) || !(d > 0.0)) throw Error(ErrorKind::InvalidFrame, "frame product left the group");
  FrameMatrix out;
  out.m_ = std::abs(d - 1.0) > tol::kDeterminant ? (1.0 / std::sqrt(d)) * m : m;
  return out;
}

FrameMatrix rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return FrameMatrix(c, -s, s, c);
}

TangentElement adjoint(const FrameMatrix& g, const TangentElement& x) {
  return TangentElement::from_matrix(g.matrix() * x.matrix() * g.inverse().matrix());
}

bool star_check(const TangentElement& x) { return kSqrt3 * std::abs(x.a) < x.c && 3.0 * x.b + x.c < 0.0; }

FrameMatrix exp_tangent(const TangentElement& x, double t) {
  const double q = x.a * x.a + x.b * x.c;  // X^2 = q I
  const double qt2 = q * t * t;
  double even;  // cosh / cos part
  double odd;   // sinh(t w)/w, sin(t w)/w
  if (std::abs(qt2) < 1e-8) {
    even = 1.0 + qt2 / 2.0 + qt2 * qt2 / 24.0;
    odd = t * (1.0 + qt2 / 6.0 + qt2 * qt2 / 120.0);
  } else if (q > 0.0) {
    const double w = std::sqrt(q);
    even = std::cosh(w * t);
    odd = std::sinh(w * t) / w;
  } else {
    const double w = std::sqrt(-q);
    even = std::cos(w * t);
    odd = std::sin(w * t) / w;
  }
  return FrameMatrix(Mat2{even + odd * x.a, odd * x.b, odd * x.c, even - odd * x.a});
}

ProjectiveTangent::ProjectiveTangent(const TangentElement& x) {
  const double n = x.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorKind::DegenerateVelocity, "zero tangent element");
  rep_ = (1.0 / n) * x;
}

ProjectiveTangent ProjectiveTangent::oriented(const TangentElement& x, const PlaneVector& p) {
  const double w = wedge(p, x * p);
  if (w == 0.0) throw Error(ErrorKind::DegenerateVelocity, "tangent has no orientation at the reference point");
  return ProjectiveTangent(w > 0.0 ? x : -1.0 * x);
}

double projective_distance(const ProjectiveTangent& lhs, const ProjectiveTangent& rhs) {
  const auto& p = lhs.rep();
  const auto& q = rhs.rep();
  return std::max(0.0, 1.0 - (p.a * q.a + p.b * q.b + p.c * q.c));
}

}  // namespace hexameral
