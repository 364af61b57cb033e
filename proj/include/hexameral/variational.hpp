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

#include <optional>
#include <span>
#include <vector>

#include "hexameral/chain.hpp"
#include "hexameral/hyperlink.hpp"
#include "hexameral/sl2.hpp"

namespace hexameral {

// Sampled curve in SL2 expressed relative to its first frame:
// phi(t) = phi(t_0) * [[alpha, beta], [gamma, delta]].
class FramePath {
 public:
  static constexpr std::size_t kMinPoints = 16;

  // Requires an increasing grid of at least kMinPoints points, det = 1 within
  // 1e-10 and the identity as first frame.
  FramePath(std::vector<double> grid, const std::vector<Mat2>& frames);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<FrameMatrix>& frames() const { return frames_; }
  std::size_t size() const { return grid_.size(); }

 private:
  std::vector<double> grid_;
  std::vector<FrameMatrix> frames_;
};

// Rotations R(t) on [t0, t1], relative to R(t0).
FramePath circle_path(double t0, double t1, std::size_t points);
// Frames of the canonical link over [t0, t_end], relative to the frame at t0.
FramePath link_path(const SquareRep& rep, std::size_t points);
// Frames along every nondegenerate link of a chain, relative to the initial
// frame; junction samples are shared.
FramePath chain_path(const ChainTrace& trace, std::size_t points_per_link);

// Trapezoid value of  integral (alpha dgamma - gamma dalpha) + (beta ddelta - delta dbeta).
double area_form_integral(const FramePath& path);

// Total area of the six sectors swept by phi(t) u*_m, i.e. 3/2 times the form
// integral (sum over the roots of unity of the quadratic forms gives 3).
double area_functional(const FramePath& path);

// max over the grid of |delta^2 + gamma^2 - 1|, |alpha^2 + beta^2 - 1|,
// |gamma alpha + delta beta|; zero exactly on rotation paths.
double euler_lagrange_residual(const FramePath& path);

// Trapezoid value of integral 4 u(t) w'(t) dt, the second variation of the
// area around the circle.
double second_variation_circle(std::span<const double> u, std::span<const double> w_prime,
                               std::span<const double> grid);

struct CurvatureLemmaCheck {
  double closed_form = 0.0;  // 3 sqrt3 (a^2 + bc)^2 / (3a + sqrt3 c)
  double direct = 0.0;       // X u*_4 ^ (X' + X^2) u*_4
  TangentElement x_prime;    // minimum-norm X' making the j = 0, 2 curvatures vanish
};

// Throws StarViolation unless star_check(x).
CurvatureLemmaCheck curvature_lemma_check(const TangentElement& x);

// Closed-form value; throws std::logic_error if it disagrees with the direct
// computation by more than 1e-9 relative.
double curvature_lemma_value(const TangentElement& x);

// Rank-two boundary data after the skew normalization: s(t), x(t) and their
// derivatives on a grid; z may be supplied, otherwise it is solved from
// x'(s^2 - 1) - s' z = 0.
struct Rank2Path {
  std::vector<double> grid;
  std::vector<double> s, ds;
  std::vector<double> x, dx;
  std::optional<std::vector<double>> z;
};

struct Rank2Variation {
  double integral = 0.0;             // I_1 + I_2 = integral (sqrt3 s' - (1 + s^2) x') / 4
  double constraint_residual = 0.0;  // max |x'(s^2 - 1) - s' z|
  double x_variation = 0.0;          // derivative of the integral along a bump in x
  bool variation_nonzero = false;
};

// Throws SignCondition unless s' > 0 on the whole grid.
Rank2Variation rank2_first_variation(const Rank2Path& path);

}  // namespace hexameral
