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

#ifndef APOLLON_CONFORMAL_HPP
#define APOLLON_CONFORMAL_HPP

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "apollon/region.hpp"

namespace apollon {

struct Translation {
  Vec offset;
};

/// Orthogonal linear map; Q^T Q = I is validated to 1e-10 on construction
/// of the enclosing ConformalMap.
struct OrthogonalMap {
  Eigen::MatrixXd matrix;
};

struct Homothety {
  double factor;  // > 0
};

/// Unit inversion at the origin, x -> x / <x,x>, swapping 0 and infinity.
struct Inversion {};

using ConformalPrimitive =
    std::variant<Translation, OrthogonalMap, Homothety, Inversion>;

/// An element of the general conformal group: a finite composition of
/// translations, orthogonal maps, homotheties and inversions, applied
/// rightmost-first.  The empty composition is the identity.
class ConformalMap {
 public:
  ConformalMap(Eigen::Index dim, std::vector<ConformalPrimitive> primitives);
  static ConformalMap identity(Eigen::Index dim);

  Eigen::Index dimension() const { return dim_; }
  const std::vector<ConformalPrimitive>& primitives() const {
    return primitives_;
  }
  bool is_identity() const { return primitives_.empty(); }

  ExtendedPoint operator()(const ExtendedPoint& x) const;

  /// (a.compose(b))(x) == a(b(x)).
  ConformalMap compose(const ConformalMap& other) const;
  ConformalMap inverse() const;

  /// Merges adjacent translations and adjacent homotheties and drops
  /// identity primitives.  Pointwise equal to the original map.
  ConformalMap simplified() const;

 private:
  Eigen::Index dim_;
  std::vector<ConformalPrimitive> primitives_;
};

ExtendedPoint apply(const ConformalMap& m, const ExtendedPoint& x);

/// Exact image of a generalized sphere.  A sphere through the center of an
/// inversion comes back as a hyperplane and vice versa; the representation
/// switch happens within a relative tolerance of the through-center case.
GeneralizedSphere image_sphere(const ConformalMap& m,
                               const GeneralizedSphere& s);

/// Image of a region: image_sphere on the surface plus side tracking via a
/// deterministically chosen interior witness point.
Region image_region(const ConformalMap& m, const Region& r);

/// A finite interior point of the region, at distance >= 1e-9 from the
/// surface, chosen deterministically from the region parameters.  `skip`
/// selects later candidates when earlier ones are exceptional for a map.
ExtendedPoint region_witness(const Region& r, int skip = 0);

}  // namespace apollon

#endif  // APOLLON_CONFORMAL_HPP
