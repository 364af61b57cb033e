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

#include "hexameral/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hexameral/error.hpp"
#include "hexameral/multicurve.hpp"

namespace hexameral {

FramePath::FramePath(std::vector<double> grid, const std::vector<Mat2>& frames) : grid_(std::move(grid)) {
  if (grid_.size() < kMinPoints) throw Error(ErrorKind::InvalidArgument, "frame path needs at least 16 points");
  if (frames.size() != grid_.size()) throw Error(ErrorKind::InvalidArgument, "grid and frames differ in length");
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) throw Error(ErrorKind::InvalidArgument, "grid must be increasing");
  }
  if (!((frames.front() - Mat2::identity()).max_abs() < 1e-10)) {
    throw Error(ErrorKind::InvalidArgument, "frame path must start at the identity");
  }
  frames_.reserve(frames.size());
  for (const auto& m : frames) {
    if (!(std::abs(m.det() - 1.0) < 1e-10)) throw Error(ErrorKind::InvalidFrame, "frame path leaves SL2");
    frames_.emplace_back(m);
  }
}

FramePath circle_path(double t0, double t1, std::size_t points) {
  std::vector<double> grid;
  std::vector<Mat2> frames;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(t);
    frames.push_back(rotation(t - t0).matrix());
  }
  return FramePath(std::move(grid), frames);
}

FramePath link_path(const SquareRep& rep, std::size_t points) {
  const FrameMatrix back = square_frame(rep, rep.t0).inverse();
  const double t1 = t_end(rep);
  std::vector<double> grid;
  std::vector<Mat2> frames;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = rep.t0 + (t1 - rep.t0) * static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(t);
    frames.push_back(i == 0 ? Mat2::identity() : (back * square_frame(rep, t)).matrix());
  }
  return FramePath(std::move(grid), frames);
}

FramePath chain_path(const ChainTrace& trace, std::size_t points_per_link) {
  const FrameMatrix back = trace.initial().frame.inverse();
  std::vector<double> grid{0.0};
  std::vector<Mat2> frames{Mat2::identity()};
  double offset = 0.0;
  for (const auto& link : trace.links) {
    if (link.rep.degenerate()) continue;
    const double t1 = t_end(link.rep);
    for (std::size_t i = 1; i < points_per_link; ++i) {
      const double u = static_cast<double>(i) / static_cast<double>(points_per_link - 1);
      const double t = link.rep.t0 + (t1 - link.rep.t0) * u;
      grid.push_back(offset + u);
      frames.push_back((back * link.placement * square_frame(link.rep, t)).matrix());
    }
    offset += 1.0;
  }
  return FramePath(std::move(grid), frames);
}

double area_form_integral(const FramePath& path) {
  // Trapezoid on a Stieltjes form: the midpoint averages telescope into
  // alpha_i gamma_{i+1} - gamma_i alpha_{i+1}.
  double total = 0.0;
  const auto& f = path.frames();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const FrameMatrix& p = f[i];
    const FrameMatrix& q = f[i + 1];
    total += p.alpha() * q.gamma() - p.gamma() * q.alpha();
    total += p.beta() * q.delta() - p.delta() * q.beta();
  }
  return total;
}

double area_functional(const FramePath& path) { return 1.5 * area_form_integral(path); }

double euler_lagrange_residual(const FramePath& path) {
  double worst = 0.0;
  for (const auto& f : path.frames()) {
    const double al = f.alpha(), be = f.beta(), ga = f.gamma(), de = f.delta();
    worst = std::max({worst, std::abs(de * de + ga * ga - 1.0), std::abs(al * al + be * be - 1.0),
                      std::abs(ga * al + de * be)});
  }
  return worst;
}

double second_variation_circle(std::span<const double> u, std::span<const double> w_prime,
                               std::span<const double> grid) {
  if (grid.size() < FramePath::kMinPoints) throw Error(ErrorKind::InvalidArgument, "grid needs at least 16 points");
  if (u.size() != grid.size() || w_prime.size() != grid.size()) {
    throw Error(ErrorKind::InvalidArgument, "samples and grid differ in length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    total += 0.5 * (grid[i + 1] - grid[i]) * (4.0 * u[i] * w_prime[i] + 4.0 * u[i + 1] * w_prime[i + 1]);
  }
  return total;
}

CurvatureLemmaCheck curvature_lemma_check(const TangentElement& x) {
  if (!star_check(x)) throw Error(ErrorKind::StarViolation, "tangent violates the star conditions");
  const double q = x.a * x.a + x.b * x.c;  // X^2 = q I
  // The Gram system degenerates near the star boundary; solve it in
  // extended precision.
  using Wide = long double;
  const Wide wa = x.a, wb = x.b, wc = x.c, wq = wa * wa + wb * wc;
  auto apply = [&](Wide pa, Wide pb, Wide pc, const PlaneVector& u) {
    return std::array<Wide, 2>{pa * u.x + pb * u.y, pc * u.x - pa * u.y};
  };
  // Row j of A: coefficients of (a', b', c') in X u ^ X' u; right side
  // makes X u ^ (X' + X^2) u vanish.
  Wide rows[2][3];
  Wide rhs[2];
  const int indices[2] = {0, 2};
  for (int r = 0; r < 2; ++r) {
    const PlaneVector u = unit_root(indices[r]);
    const auto v = apply(wa, wb, wc, u);
    rows[r][0] = -v[0] * u.y - v[1] * u.x;
    rows[r][1] = -v[1] * u.y;
    rows[r][2] = v[0] * u.x;
    rhs[r] = -wq * (v[0] * u.y - v[1] * u.x);
  }
  // Minimum-norm solution A^T (A A^T)^{-1} rhs.
  Wide g[2][2];
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) g[r][c] = rows[r][0] * rows[c][0] + rows[r][1] * rows[c][1] + rows[r][2] * rows[c][2];
  }
  const Wide det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const Wide y0 = (g[1][1] * rhs[0] - g[0][1] * rhs[1]) / det;
  const Wide y1 = (g[0][0] * rhs[1] - g[1][0] * rhs[0]) / det;
  const Wide pa = rows[0][0] * y0 + rows[1][0] * y1;
  const Wide pb = rows[0][1] * y0 + rows[1][1] * y1;
  const Wide pc = rows[0][2] * y0 + rows[1][2] * y1;

  CurvatureLemmaCheck out;
  out.x_prime = TangentElement{static_cast<double>(pa), static_cast<double>(pb), static_cast<double>(pc)};
  const PlaneVector u4 = unit_root(4);
  const auto v4 = apply(wa, wb, wc, u4);
  const auto w4 = apply(pa, pb, pc, u4);
  out.direct = static_cast<double>(v4[0] * (w4[1] + wq * u4.y) - v4[1] * (w4[0] + wq * u4.x));
  out.closed_form = 3.0 * kSqrt3 * q * q / (3.0 * x.a + kSqrt3 * x.c);
  return out;
}

double curvature_lemma_value(const TangentElement& x) {
  const CurvatureLemmaCheck check = curvature_lemma_check(x);
  const double scale = std::max(std::abs(check.closed_form), 1e-300);
  if (std::abs(check.closed_form - check.direct) > 1e-9 * scale) {
    throw std::logic_error("curvature lemma closed form disagrees with the direct computation");
  }
  return check.closed_form;
}

Rank2Variation rank2_first_variation(const Rank2Path& path) {
  const std::size_t n = path.grid.size();
  if (n < FramePath::kMinPoints) throw Error(ErrorKind::InvalidArgument, "grid needs at least 16 points");
  if (path.s.size() != n || path.ds.size() != n || path.x.size() != n || path.dx.size() != n ||
      (path.z && path.z->size() != n)) {
    throw Error(ErrorKind::InvalidArgument, "rank-two samples and grid differ in length");
  }
  for (double d : path.ds) {
    if (!(d > 0.0)) throw Error(ErrorKind::SignCondition, "s' must be positive on the whole grid");
  }
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = path.z ? (*path.z)[i] : path.dx[i] * (path.s[i] * path.s[i] - 1.0) / path.ds[i];
  }

  Rank2Variation out;
  const double t0 = path.grid.front();
  const double span = path.grid.back() - t0;
  auto integrand = [&](std::size_t i) {
    return 0.25 * (kSqrt3 * path.ds[i] - (1.0 + path.s[i] * path.s[i]) * path.dx[i]);
  };
  // bump eta = sin^2(pi (t - t0) / span) added to x; only x' enters the integrand
  auto variation = [&](std::size_t i) {
    const double deta = (kPi / span) * std::sin(2.0 * kPi * (path.grid[i] - t0) / span);
    return -0.25 * (1.0 + path.s[i] * path.s[i]) * deta;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double s2 = path.s[i] * path.s[i];
    out.constraint_residual = std::max(out.constraint_residual, std::abs(path.dx[i] * (s2 - 1.0) - path.ds[i] * z[i]));
    if (i + 1 < n) {
      const double h = path.grid[i + 1] - path.grid[i];
      out.integral += 0.5 * h * (integrand(i) + integrand(i + 1));
      out.x_variation += 0.5 * h * (variation(i) + variation(i + 1));
    }
  }
  out.variation_nonzero = std::abs(out.x_variation) > 1e-12;
  return out;
}

}  // namespace hexameral
