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

#ifndef APOLLON_APOLLONIAN_HPP
#define APOLLON_APOLLONIAN_HPP

#include <vector>

#include "apollon/domain.hpp"

namespace apollon {

/// A piecewise-linear path with finite vertices.  Membership of vertices
/// and quadrature nodes in a domain is validated when lengths are computed.
class PathPolyline {
 public:
  explicit PathPolyline(std::vector<Vec> vertices);  // >= 2 vertices

  const std::vector<Vec>& vertices() const { return vertices_; }
  Eigen::Index dimension() const { return vertices_.front().size(); }

 private:
  std::vector<Vec> vertices_;
};

/// Apollonian (pseudo-)distance d_U(x1,x2) = sup log cross-ratio over
/// complement pairs.  Computed as the sum of the two one-sided supremum
/// queries; symmetric, triangle inequality, may vanish for distinct points
/// when the complement is degenerate.
double apollonian_distance(const Domain& d, const ExtendedPoint& x1,
                           const ExtendedPoint& x2);

/// Finsler pseudo-norm p_{U,x}(h): the directional width of the inverted
/// complement, sup |<I(x-u1) - I(x-u2), h>|.
double finsler_norm(const Domain& d, const ExtendedPoint& x, const Vec& h);

/// Conformal Riemannian density g_U(x) = sup_{|h|=1} p_{U,x}(h), the
/// diameter of the inverted complement.
double conformal_density(const Domain& d, const ExtendedPoint& x);

/// Length of the path under the Finsler norm, integral of p_{U,x}(dx),
/// by fixed-order Gauss-Legendre quadrature per segment.
double inner_path_length(const Domain& d, const PathPolyline& p,
                         int quadrature_order = 32);

/// Length under the conformal Riemannian metric ds = g_U(x) |dx|.
double riemann_path_length(const Domain& d, const PathPolyline& p,
                           int quadrature_order = 32);

}  // namespace apollon

#endif  // APOLLON_APOLLONIAN_HPP
