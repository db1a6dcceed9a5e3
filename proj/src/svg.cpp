// Copyright 2026 The Apollon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apollon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace apollon {

namespace {

constexpr int kSize = 800;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

SvgCanvas::SvgCanvas(double xmin, double xmax, double ymin, double ymax)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {
  if (!(xmax > xmin) || !(ymax > ymin)) {
    throw std::invalid_argument("SvgCanvas: empty world window");
  }
  scale_ = kSize / std::max(xmax_ - xmin_, ymax_ - ymin_);
}

double SvgCanvas::to_px_x(double x) const { return (x - xmin_) * scale_; }
double SvgCanvas::to_px_y(double y) const { return (ymax_ - y) * scale_; }
double SvgCanvas::to_px_len(double r) const { return r * scale_; }

void SvgCanvas::add_circle(const Vec& center, double radius,
                           const std::string& stroke, const std::string& fill) {
  elements_.push_back("<circle cx=\"" + fmt(to_px_x(center[0])) + "\" cy=\"" +
                      fmt(to_px_y(center[1])) + "\" r=\"" +
                      fmt(std::max(to_px_len(radius), 0.3)) + "\" stroke=\"" +
                      stroke + "\" fill=\"" + fill + "\" stroke-width=\"1\"/>");
}

void SvgCanvas::add_point(const Vec& p, double px_radius,
                          const std::string& fill) {
  elements_.push_back("<circle cx=\"" + fmt(to_px_x(p[0])) + "\" cy=\"" +
                      fmt(to_px_y(p[1])) + "\" r=\"" + fmt(px_radius) +
                      "\" fill=\"" + fill + "\"/>");
}

void SvgCanvas::add_region(const Region& r, const std::string& stroke) {
  if (r.surface.is_sphere()) {
    add_circle(r.surface.center(), r.surface.radius(), stroke, "none");
    return;
  }
  // Clip the hyperplane to the window diagonal extent.
  const Vec& n = r.surface.normal();
  const double b = r.surface.offset();
  Vec t(2);
  t << -n[1], n[0];
  Vec base = b * n;
  const double ext = 2.0 * std::max(xmax_ - xmin_, ymax_ - ymin_);
  const Vec p1 = base + ext * t;
  const Vec p2 = base - ext * t;
  elements_.push_back("<line x1=\"" + fmt(to_px_x(p1[0])) + "\" y1=\"" +
                      fmt(to_px_y(p1[1])) + "\" x2=\"" + fmt(to_px_x(p2[0])) +
                      "\" y2=\"" + fmt(to_px_y(p2[1])) + "\" stroke=\"" +
                      stroke + "\" stroke-width=\"1\"/>");
}

void SvgCanvas::add_obstacles(const Domain& d) {
  if (d.dimension() != 2) {
    throw std::invalid_argument("SvgCanvas: 2-D domains only");
  }
  for (const auto& o : d.obstacles()) {
    std::visit(
        [this](const auto& obs) {
          using T = std::decay_t<decltype(obs)>;
          if constexpr (std::is_same_v<T, ClosedBall>) {
            add_circle(obs.center, obs.radius, "#555555", "#dddddd");
          } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
            // Shade the outside with an even-odd window/circle path.
            elements_.push_back(
                "<path fill-rule=\"evenodd\" fill=\"#dddddd\" stroke=\"#555555\" "
                "stroke-width=\"1\" d=\"M0 0H" + std::to_string(kSize) + "V" +
                std::to_string(kSize) + "H0Z M" + fmt(to_px_x(obs.center[0])) +
                " " + fmt(to_px_y(obs.center[1])) + " m" +
                fmt(to_px_len(obs.radius)) + " 0 a" +
                fmt(to_px_len(obs.radius)) + " " + fmt(to_px_len(obs.radius)) +
                " 0 1 0 " + fmt(-2.0 * to_px_len(obs.radius)) + " 0 a" +
                fmt(to_px_len(obs.radius)) + " " + fmt(to_px_len(obs.radius)) +
                " 0 1 0 " + fmt(2.0 * to_px_len(obs.radius)) + " 0 Z\"/>");
          } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
            Region r{GeneralizedSphere::hyperplane(obs.normal, obs.offset),
                     RegionSide::positive, true};
            add_region(r, "#555555");
          } else {
            if (obs.point.is_finite()) {
              add_point(obs.point.coords(), 2.0, "#555555");
            }
          }
        },
        o);
  }
}

std::string SvgCanvas::finish() const {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- viewport: world [" + fmt(xmin_) + "," + fmt(xmax_) + "] x [" +
         fmt(ymin_) + "," + fmt(ymax_) + "] mapped to " +
         std::to_string(kSize) + "x" + std::to_string(kSize) +
         " px, y axis flipped -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kSize) + "\" height=\"" + std::to_string(kSize) +
         "\" viewBox=\"0 0 " + std::to_string(kSize) + " " +
         std::to_string(kSize) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : elements_) {
    out += e;
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

}  // namespace apollon
