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

#include <cmath>

namespace hexameral {

// Default numerical tolerances. Operations that need a different threshold
// take it as an explicit argument instead of mutating these.
namespace tol {
inline constexpr double kDeterminant = 1e-12;  // accepted |det - 1| without rescale
inline constexpr double kReproject = 1e-9;     // largest |det - 1| repaired by rescaling
inline constexpr double kMultiPoint = 1e-9;
inline constexpr double kLinearCurve = 1e-9;
inline constexpr double kClosureClassify = 1e-6;
inline constexpr double kClosureVerify = 1e-9;
inline constexpr double kAngle = 1e-9;
}  // namespace tol

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt3 = 1.73205080756887729353;
// u_j ^ u_{j+2} for every multi-point, and half the balanced hexagon area
// after normalizing that area to sqrt(12).
inline constexpr double kHalfSqrt3 = 0.86602540378443864676;

struct PlaneVector {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }

  PlaneVector operator-() const { return {-x, -y}; }
  PlaneVector& operator+=(const PlaneVector& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  PlaneVector& operator-=(const PlaneVector& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend PlaneVector operator+(PlaneVector a, const PlaneVector& b) { return a += b; }
  friend PlaneVector operator-(PlaneVector a, const PlaneVector& b) { return a -= b; }
  friend PlaneVector operator*(double s, const PlaneVector& v) { return {s * v.x, s * v.y}; }
  friend PlaneVector operator*(const PlaneVector& v, double s) { return {s * v.x, s * v.y}; }
  friend bool operator==(const PlaneVector&, const PlaneVector&) = default;
};

// Determinant of the 2x2 matrix with columns u and v.
inline double wedge(const PlaneVector& u, const PlaneVector& v) { return u.x * v.y - u.y * v.x; }
inline double dot(const PlaneVector& u, const PlaneVector& v) { return u.x * v.x + u.y * v.y; }

// Unconstrained 2x2 matrix, row-major: [[m00, m01], [m10, m11]].
struct Mat2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

  static Mat2 identity() { return {}; }
  // Matrix whose columns are c0 and c1.
  static Mat2 from_columns(const PlaneVector& c0, const PlaneVector& c1) {
    return {c0.x, c1.x, c0.y, c1.y};
  }

  double det() const { return m00 * m11 - m01 * m10; }
  double trace() const { return m00 + m11; }
  double max_abs() const;
  Mat2 inverse() const;  // throws InvalidFrame when singular

  PlaneVector operator*(const PlaneVector& v) const {
    return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
  }
  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
  Mat2 operator-(const Mat2& o) const { return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11}; }
  Mat2 operator+(const Mat2& o) const { return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11}; }
  friend Mat2 operator*(double s, const Mat2& m) { return {s * m.m00, s * m.m01, s * m.m10, s * m.m11}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Element of SL2(R). Entries follow the matrix [[alpha, beta], [gamma, delta]].
// Construction accepts |det - 1| < tol::kReproject and rescales onto det = 1,
// which keeps long products from drifting off the group.
class FrameMatrix {
 public:
  FrameMatrix() = default;
  FrameMatrix(double alpha, double beta, double gamma, double delta);
  explicit FrameMatrix(const Mat2& m);

  static FrameMatrix identity() { return {}; }

  double alpha() const { return m_.m00; }
  double beta() const { return m_.m01; }
  double gamma() const { return m_.m10; }
  double delta() const { return m_.m11; }
  const Mat2& matrix() const { return m_; }
  double det() const { return m_.det(); }

  FrameMatrix inverse() const { return FrameMatrix(Mat2{m_.m11, -m_.m01, -m_.m10, m_.m00}); }
  PlaneVector operator*(const PlaneVector& v) const { return m_ * v; }
  // Products stay on the group exactly; only roundoff is removed here.
  FrameMatrix operator*(const FrameMatrix& o) const { return renormalized(m_ * o.m_); }

 private:
  static FrameMatrix renormalized(const Mat2& m);
  Mat2 m_{};
};

inline PlaneVector apply(const FrameMatrix& g, const PlaneVector& v) { return g * v; }

// Rotation by theta (counterclockwise).
FrameMatrix rotation(double theta);

// Traceless matrix [[a, b], [c, -a]] in sl2(R).
struct TangentElement {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  Mat2 matrix() const { return {a, b, c, -a}; }
  // Traceless part of m.
  static TangentElement from_matrix(const Mat2& m) { return {0.5 * (m.m00 - m.m11), m.m01, m.m10}; }

  double det() const { return -a * a - b * c; }
  double norm() const { return std::sqrt(a * a + b * b + c * c); }
  PlaneVector operator*(const PlaneVector& v) const { return matrix() * v; }
  friend TangentElement operator*(double s, const TangentElement& x) { return {s * x.a, s * x.b, s * x.c}; }
  friend bool operator==(const TangentElement&, const TangentElement&) = default;
};

// Ad g X = g X g^{-1}.
TangentElement adjoint(const FrameMatrix& g, const TangentElement& x);

// sqrt(3)|a| < c and 3b + c < 0: the tangent at the roots of unity points into
// each hexagram triangle.
bool star_check(const TangentElement& x);

// exp(tX) in closed form (X^2 = (a^2 + bc) I).
FrameMatrix exp_tangent(const TangentElement& x, double t);

// Velocity up to a positive scalar. Curves carry an orientation, so X and -X
// are distinct classes; the representative is stored at unit Euclidean norm.
class ProjectiveTangent {
 public:
  // Throws DegenerateVelocity for the zero element.
  explicit ProjectiveTangent(const TangentElement& x);
  // Chooses the sign making wedge(p, X p) > 0 (counterclockwise motion at p).
  static ProjectiveTangent oriented(const TangentElement& x, const PlaneVector& p);

  const TangentElement& rep() const { return rep_; }

 private:
  TangentElement rep_;
};

// 1 - <r1, r2> on the unit representatives; zero exactly on equal classes.
double projective_distance(const ProjectiveTangent& lhs, const ProjectiveTangent& rhs);

}  // namespace hexameral
