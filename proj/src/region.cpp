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

#include "apollon/region.hpp"

#include <cmath>
#include <stdexcept>

namespace apollon {

GeneralizedSphere::GeneralizedSphere(bool is_sphere, Vec v, double s)
    : is_sphere_(is_sphere), vec_(std::move(v)), scal_(s) {}

GeneralizedSphere GeneralizedSphere::sphere(Vec center, double radius) {
  if (!center.allFinite() || !std::isfinite(radius)) {
    throw std::invalid_argument("GeneralizedSphere: non-finite parameters");
  }
  if (radius <= 0.0) {
    throw std::invalid_argument("GeneralizedSphere: radius must be positive");
  }
  return GeneralizedSphere(true, std::move(center), radius);
}

GeneralizedSphere GeneralizedSphere::hyperplane(Vec normal, double offset) {
  if (!normal.allFinite() || !std::isfinite(offset)) {
    throw std::invalid_argument("GeneralizedSphere: non-finite parameters");
  }
  const double n = normal.norm();
  if (n == 0.0) {
    throw std::invalid_argument("GeneralizedSphere: zero normal");
  }
  return GeneralizedSphere(false, normal / n, offset / n);
}

const Vec& GeneralizedSphere::center() const {
  if (!is_sphere_) throw std::logic_error("GeneralizedSphere: not a sphere");
  return vec_;
}

double GeneralizedSphere::radius() const {
  if (!is_sphere_) throw std::logic_error("GeneralizedSphere: not a sphere");
  return scal_;
}

const Vec& GeneralizedSphere::normal() const {
  if (is_sphere_) throw std::logic_error("GeneralizedSphere: not a hyperplane");
  return vec_;
}

double GeneralizedSphere::offset() const {
  if (is_sphere_) throw std::logic_error("GeneralizedSphere: not a hyperplane");
  return scal_;
}

double GeneralizedSphere::signed_eval(const Vec& x) const {
  if (is_sphere_) return (x - vec_).norm() - scal_;
  return vec_.dot(x) - scal_;
}

bool Region::unbounded() const {
  return surface.is_hyperplane() || side == RegionSide::positive;
}

bool Region::contains(const ExtendedPoint& p) const {
  if (p.is_infinite()) return unbounded() && closed;
  const double v = surface.signed_eval(p.coords());
  if (closed) {
    return side == RegionSide::negative ? v <= 0.0 : v >= 0.0;
  }
  return side == RegionSide::negative ? v < 0.0 : v > 0.0;
}

Region Region::inside_ball(Vec center, double radius, bool closed) {
  return Region{GeneralizedSphere::sphere(std::move(center), radius),
                RegionSide::negative, closed};
}

Region Region::outside_ball(Vec center, double radius, bool closed) {
  return Region{GeneralizedSphere::sphere(std::move(center), radius),
                RegionSide::positive, closed};
}

Region Region::half_space_above(Vec normal, double offset, bool closed) {
  return Region{GeneralizedSphere::hyperplane(std::move(normal), offset),
                RegionSide::positive, closed};
}

Region apollonian_ball(const ExtendedPoint& a, const ExtendedPoint& b,
                       double alpha) {
  if (a.is_infinite() || b.is_infinite()) {
    throw std::invalid_argument("apollonian_ball: a and b must be finite");
  }
  detail::require_same_dimension(a, b, "apollonian_ball");
  if (a == b) {
    throw std::invalid_argument("apollonian_ball: a and b must be distinct");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("apollonian_ball: alpha must be positive");
  }
  const Vec& pa = a.coords();
  const Vec& pb = b.coords();
  if (alpha == 1.0) {
    // Perpendicular-bisector half-space nearer to a.
    Vec n = pb - pa;
    const double offset = n.dot(0.5 * (pa + pb));
    return Region{GeneralizedSphere::hyperplane(std::move(n), offset),
                  RegionSide::negative, false};
  }
  const double a2 = alpha * alpha;
  const Vec center = (pa - a2 * pb) / (1.0 - a2);
  const double radius = alpha * (pa - pb).norm() / std::abs(1.0 - a2);
  if (alpha < 1.0) {
    return Region::inside_ball(center, radius, false);
  }
  return Region::outside_ball(center, radius, false);
}

}  // namespace apollon
