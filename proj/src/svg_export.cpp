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

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hexameral/domain.hpp"

namespace hexameral {

namespace {

constexpr double kViewBox = 1000.0;
constexpr double kMargin = 0.05;

struct Viewport {
  double min_x, max_y, scale, offset_x, offset_y;

  PlaneVector map(const PlaneVector& p) const {
    return {offset_x + (p.x - min_x) * scale, offset_y + (max_y - p.y) * scale};
  }
};

Viewport fit(const std::vector<PlaneVector>& pts) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double inner = kViewBox * (1.0 - 2.0 * kMargin);
  const double scale = inner / span;
  // center the shorter side
  const double off_x = kViewBox * kMargin + 0.5 * (inner - (hi_x - lo_x) * scale);
  const double off_y = kViewBox * kMargin + 0.5 * (inner - (hi_y - lo_y) * scale);
  return {lo_x, hi_y, scale, off_x, off_y};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string precise(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string points_attr(const std::vector<PlaneVector>& pts, const Viewport& vp) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PlaneVector q = vp.map(pts[i]);
    if (i) out += ' ';
    out += num(q.x) + "," + num(q.y);
  }
  return out;
}

}  // namespace

std::string boundary_svg(const HexameralDomain& domain, int per_link) {
  const BoundaryPolyline boundary = boundary_polyline(domain, per_link);
  const LinkState& start = domain.chain.initial;
  const auto hexagon = balanced_hexagon(start);
  std::vector<PlaneVector> markers;
  for (int m = 0; m < 6; ++m) markers.push_back(start.frame * unit_root(m));

  std::vector<PlaneVector> all = boundary.points;
  all.insert(all.end(), hexagon.begin(), hexagon.end());
  const Viewport vp = fit(all);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
      << "viewBox=\"0 0 1000 1000\">\n"
      << "  <desc>hexameral domain, density " << precise(domain.density) << "</desc>\n"
      << "  <polygon id=\"hexagon\" fill=\"none\" stroke=\"#888888\" stroke-width=\"2\" stroke-dasharray=\"8,6\" points=\""
      << points_attr({hexagon.begin(), hexagon.end()}, vp) << "\"/>\n"
      << "  <polygon id=\"boundary\" fill=\"#dde8f4\" stroke=\"#1f4e79\" stroke-width=\"3\" points=\""
      << points_attr(boundary.points, vp) << "\"/>\n";
  for (std::size_t m = 0; m < markers.size(); ++m) {
    const PlaneVector q = vp.map(markers[m]);
    svg << "  <circle class=\"multipoint\" id=\"u" << m << "\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
        << "\" r=\"8\" fill=\"#c0392b\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hexameral
