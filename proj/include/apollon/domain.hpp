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

#ifndef APOLLON_DOMAIN_HPP
#define APOLLON_DOMAIN_HPP

#include <utility>
#include <variant>
#include <vector>

#include "apollon/conformal.hpp"

namespace apollon {

struct ClosedBall {
  Vec center;
  double radius;  // > 0
};

/// { x : <n,x> >= offset }, together with the point at infinity.
struct ClosedHalfSpace {
  Vec normal;  // unit
  double offset;
};

/// { x : |x-c| >= r }, together with the point at infinity.
struct ClosedBallExterior {
  Vec center;
  double radius;  // > 0
};

struct SinglePoint {
  ExtendedPoint point;
};

using Obstacle =
    std::variant<ClosedBall, ClosedHalfSpace, ClosedBallExterior, SinglePoint>;

bool obstacle_contains(const Obstacle& o, const ExtendedPoint& x);
Eigen::Index obstacle_dimension(const Obstacle& o);

/// An open proper subset U of the completed space, represented by its
/// complement as a finite union of closed obstacles.  Non-emptiness of U is
/// certified by a witness point validated at construction.
class Domain {
 public:
  Domain(Eigen::Index dim, std::vector<Obstacle> obstacles,
         ExtendedPoint witness);

  Eigen::Index dimension() const { return dim_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  const ExtendedPoint& witness() const { return witness_; }

  bool contains(const ExtendedPoint& x) const;

 private:
  Eigen::Index dim_;
  std::vector<Obstacle> obstacles_;
  ExtendedPoint witness_;
};

/// The image W(x) = { (u-x)/|u-x|^2 : u in U^c } of the complement under
/// inversion centered at x in U.  Every piece is a closed ball; radius 0
/// pieces are single points.  W(x) is bounded because x lies in the open
/// set U.
struct InvertedComplement {
  struct Piece {
    Vec center;
    double radius;  // >= 0
  };
  std::vector<Piece> pieces;
};

InvertedComplement inverted_complement(const Domain& d,
                                       const ExtendedPoint& x);

/// sup over u in U^c of log(|x2-u| / |x1-u|), with |inf - u| := 1.
///
/// For finite arguments the supremum reduces, via the identity
/// |x2-u|/|x1-u| = |x2-x1| * |w - I_{x1}(x2)| over w in W(x1), to one
/// farthest-point query per piece of the inverted complement.  The value
/// may be negative; it is +infinity only when the x1 = infinity query meets
/// an unbounded complement.
double sup_log_ratio(const Domain& d, const ExtendedPoint& x1,
                     const ExtendedPoint& x2);

/// inf and sup of <w,h> over W(x), h != 0.  The directional width
/// hi - lo is the Finsler pseudo-norm p_{U,x}(h).
std::pair<double, double> support_interval(const Domain& d,
                                           const ExtendedPoint& x,
                                           const Vec& h);

/// sup |w1-w2| over W(x); equals the conformal density
/// g_U(x) = sup |u1-u2| / (|x-u1||x-u2|).
double diameter_of_inverted_complement(const Domain& d,
                                       const ExtendedPoint& x);

/// Whether the closed ball of an inside-of-sphere region is strictly
/// disjoint from every obstacle.  Numerically touching configurations
/// count as not inside (tolerance 1e-12).
bool region_inside(const Domain& d, const Region& r);

/// inf over u in U^c of |x-u| for finite x in U.
double distance_to_complement(const Domain& d, const ExtendedPoint& x);

/// Obstacles are closed under the conformal group; the image obstacle may
/// change kind (balls through an inversion center become half-spaces, etc).
Obstacle transform_obstacle(const ConformalMap& m, const Obstacle& o);

/// The image domain m(U), with the witness mapped along.
Domain transform_domain(const ConformalMap& m, const Domain& d);

}  // namespace apollon

#endif  // APOLLON_DOMAIN_HPP
