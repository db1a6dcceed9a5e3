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

#ifndef APOLLON_EXTGEOM_HPP
#define APOLLON_EXTGEOM_HPP

#include <Eigen/Core>

namespace apollon {

using Vec = Eigen::VectorXd;

/// A point of the one-point completion of R^n: either a finite vector or
/// the point at infinity.  The dimension is a runtime value shared by all
/// points of a scene.
class ExtendedPoint {
 public:
  /// Finite point.  Coordinates must be finite (no NaN/Inf).
  explicit ExtendedPoint(Vec coords);

  static ExtendedPoint infinity(Eigen::Index dim);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  Eigen::Index dimension() const { return dim_; }

  /// Coordinates of a finite point; throws for the point at infinity.
  const Vec& coords() const;

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);
  friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) {
    return !(a == b);
  }

 private:
  ExtendedPoint(Eigen::Index dim, bool infinite);

  Vec coords_;
  Eigen::Index dim_;
  bool infinite_;
};

/// The diameter-one chordal metric on the completed space:
/// d(x,y) = |x-y| / (sqrt(1+<x,x>) sqrt(1+<y,y>)),  d(inf,y) = 1/sqrt(1+<y,y>).
double chordal_distance(const ExtendedPoint& x, const ExtendedPoint& y);

/// Four-point cross-ratio |x2-u1||x1-u2| / (|x1-u1||x2-u2|).
///
/// Every norm factor involving the point at infinity is replaced by 1;
/// infinity may appear in at most one of the pairs {x1,x2}, {u1,u2}.
/// The pairs must be disjoint.
double cross_ratio(const ExtendedPoint& x1, const ExtendedPoint& x2,
                   const ExtendedPoint& u1, const ExtendedPoint& u2);

namespace detail {

/// |a-b| with the convention that any factor involving infinity is 1.
double conv_norm(const ExtendedPoint& a, const ExtendedPoint& b);

void require_same_dimension(const ExtendedPoint& a, const ExtendedPoint& b,
                            const char* where);

}  // namespace detail

}  // namespace apollon

#endif  // APOLLON_EXTGEOM_HPP
