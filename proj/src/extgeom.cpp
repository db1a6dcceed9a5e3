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

#include "apollon/extgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace apollon {

ExtendedPoint::ExtendedPoint(Vec coords)
    : coords_(std::move(coords)), dim_(coords_.size()), infinite_(false) {
  if (dim_ < 1) {
    throw std::invalid_argument("ExtendedPoint: dimension must be >= 1");
  }
  if (!coords_.allFinite()) {
    throw std::invalid_argument("ExtendedPoint: coordinates must be finite");
  }
}

ExtendedPoint::ExtendedPoint(Eigen::Index dim, bool infinite)
    : coords_(Vec::Zero(dim)), dim_(dim), infinite_(infinite) {}

ExtendedPoint ExtendedPoint::infinity(Eigen::Index dim) {
  if (dim < 1) {
    throw std::invalid_argument("ExtendedPoint: dimension must be >= 1");
  }
  return ExtendedPoint(dim, true);
}

const Vec& ExtendedPoint::coords() const {
  if (infinite_) {
    throw std::logic_error("ExtendedPoint: the point at infinity has no coordinates");
  }
  return coords_;
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.coords_ == b.coords_;
}

namespace detail {

void require_same_dimension(const ExtendedPoint& a, const ExtendedPoint& b,
                            const char* where) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  }
}

double conv_norm(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinite() || b.is_infinite()) return 1.0;
  return (a.coords() - b.coords()).norm();
}

}  // namespace detail

double chordal_distance(const ExtendedPoint& x, const ExtendedPoint& y) {
  detail::require_same_dimension(x, y, "chordal_distance");
  if (x.is_infinite() && y.is_infinite()) return 0.0;
  if (x.is_infinite()) return 1.0 / std::sqrt(1.0 + y.coords().squaredNorm());
  if (y.is_infinite()) return 1.0 / std::sqrt(1.0 + x.coords().squaredNorm());
  const double num = (x.coords() - y.coords()).norm();
  return num / (std::sqrt(1.0 + x.coords().squaredNorm()) *
                std::sqrt(1.0 + y.coords().squaredNorm()));
}

double cross_ratio(const ExtendedPoint& x1, const ExtendedPoint& x2,
                   const ExtendedPoint& u1, const ExtendedPoint& u2) {
  detail::require_same_dimension(x1, x2, "cross_ratio");
  detail::require_same_dimension(x1, u1, "cross_ratio");
  detail::require_same_dimension(x1, u2, "cross_ratio");
  if (x1 == u1 || x1 == u2 || x2 == u1 || x2 == u2) {
    throw std::invalid_argument(
        "cross_ratio: the pairs {x1,x2} and {u1,u2} must be disjoint");
  }
  const double num = detail::conv_norm(x2, u1) * detail::conv_norm(x1, u2);
  const double den = detail::conv_norm(x1, u1) * detail::conv_norm(x2, u2);
  return num / den;
}

}  // namespace apollon
