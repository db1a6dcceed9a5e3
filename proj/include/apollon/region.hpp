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

#ifndef APOLLON_REGION_HPP
#define APOLLON_REGION_HPP

#include "apollon/extgeom.hpp"

namespace apollon {

/// A sphere |x-c| = r or a hyperplane <n,x> = b with unit normal.
/// Both are the possible images of spheres under the conformal group.
class GeneralizedSphere {
 public:
  static GeneralizedSphere sphere(Vec center, double radius);
  /// The normal is normalized on construction; it must be nonzero.
  static GeneralizedSphere hyperplane(Vec normal, double offset);

  bool is_sphere() const { return is_sphere_; }
  bool is_hyperplane() const { return !is_sphere_; }
  Eigen::Index dimension() const { return vec_.size(); }

  const Vec& center() const;   // sphere only
  double radius() const;       // sphere only
  const Vec& normal() const;   // hyperplane only
  double offset() const;       // hyperplane only

  /// Signed surface coordinate: |x-c| - r for spheres, <n,x> - b for
  /// hyperplanes.  Negative on the "negative" side.
  double signed_eval(const Vec& x) const;

 private:
  GeneralizedSphere(bool is_sphere, Vec v, double s);

  bool is_sphere_;
  Vec vec_;      // center or unit normal
  double scal_;  // radius or offset
};

/// Which side of the surface a region occupies.  For spheres the negative
/// side is the inside; for hyperplanes it is {<n,x> < b}.
enum class RegionSide { negative, positive };

/// One complementary region of a generalized sphere.
///
/// Membership of the point at infinity: infinity belongs to a region iff
/// the region is unbounded (sphere-outside or either half-space) and
/// closed.  Closed regions include their boundary surface.
struct Region {
  GeneralizedSphere surface;
  RegionSide side = RegionSide::negative;
  bool closed = false;

  bool contains(const ExtendedPoint& p) const;
  /// True for sphere-outside regions and all half-space regions.
  bool unbounded() const;
  Eigen::Index dimension() const { return surface.dimension(); }

  static Region inside_ball(Vec center, double radius, bool closed = false);
  static Region outside_ball(Vec center, double radius, bool closed = false);
  /// The side {<n,x> >= b} (closed) or {<n,x> > b} (open).
  static Region half_space_above(Vec normal, double offset, bool closed = false);
};

/// The sublevel region { u : |a-u| / |b-u| < alpha } for finite a != b.
///
/// A ball around a for alpha < 1, the half-space of points nearer to a for
/// alpha = 1, and the open complement of a closed ball around b for
/// alpha > 1.
Region apollonian_ball(const ExtendedPoint& a, const ExtendedPoint& b,
                       double alpha);

}  // namespace apollon

#endif  // APOLLON_REGION_HPP
