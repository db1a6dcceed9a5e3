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

#include "apollon/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace apollon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInsideTol = 1e-12;

void validate_obstacle(Obstacle& o, Eigen::Index dim) {
  std::visit(
      [dim](auto& obs) {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, ClosedBall> ||
                      std::is_same_v<T, ClosedBallExterior>) {
          if (obs.center.size() != dim || !obs.center.allFinite()) {
            throw std::invalid_argument("Domain: bad obstacle center");
          }
          if (!(obs.radius > 0.0) || !std::isfinite(obs.radius)) {
            throw std::invalid_argument("Domain: obstacle radius must be positive");
          }
        } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
          if (obs.normal.size() != dim || !obs.normal.allFinite() ||
              !std::isfinite(obs.offset)) {
            throw std::invalid_argument("Domain: bad half-space obstacle");
          }
          const double n = obs.normal.norm();
          if (n == 0.0) {
            throw std::invalid_argument("Domain: zero half-space normal");
          }
          obs.normal /= n;
          obs.offset /= n;
        } else {
          if (obs.point.dimension() != dim) {
            throw std::invalid_argument("Domain: obstacle point dimension mismatch");
          }
        }
      },
      o);
}

}  // namespace

Eigen::Index obstacle_dimension(const Obstacle& o) {
  return std::visit(
      [](const auto& obs) -> Eigen::Index {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
          return obs.normal.size();
        } else if constexpr (std::is_same_v<T, SinglePoint>) {
          return obs.point.dimension();
        } else {
          return obs.center.size();
        }
      },
      o);
}

bool obstacle_contains(const Obstacle& o, const ExtendedPoint& x) {
  return std::visit(
      [&x](const auto& obs) -> bool {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, ClosedBall>) {
          if (x.is_infinite()) return false;
          return (x.coords() - obs.center).norm() <= obs.radius;
        } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
          if (x.is_infinite()) return true;
          return obs.normal.dot(x.coords()) >= obs.offset;
        } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
          if (x.is_infinite()) return true;
          return (x.coords() - obs.center).norm() >= obs.radius;
        } else {
          return x == obs.point;
        }
      },
      o);
}

Domain::Domain(Eigen::Index dim, std::vector<Obstacle> obstacles,
               ExtendedPoint witness)
    : dim_(dim), obstacles_(std::move(obstacles)), witness_(std::move(witness)) {
  if (dim_ < 1) {
    throw std::invalid_argument("Domain: dimension must be >= 1");
  }
  if (obstacles_.empty()) {
    throw std::invalid_argument("Domain: the complement must be non-empty");
  }
  for (auto& o : obstacles_) {
    validate_obstacle(o, dim_);
  }
  if (witness_.dimension() != dim_) {
    throw std::invalid_argument("Domain: witness dimension mismatch");
  }
  if (!contains(witness_)) {
    throw std::invalid_argument("Domain: the witness lies in an obstacle");
  }
}

bool Domain::contains(const ExtendedPoint& x) const {
  if (x.dimension() != dim_) {
    throw std::invalid_argument("Domain::contains: dimension mismatch");
  }
  for (const auto& o : obstacles_) {
    if (obstacle_contains(o, x)) return false;
  }
  return true;
}

InvertedComplement inverted_complement(const Domain& d,
                                       const ExtendedPoint& x) {
  if (x.is_infinite()) {
    throw std::invalid_argument("inverted_complement: x must be finite");
  }
  if (!d.contains(x)) {
    throw std::invalid_argument("inverted_complement: x must lie in the domain");
  }
  const Vec& p = x.coords();
  InvertedComplement w;
  w.pieces.reserve(d.obstacles().size());
  for (const auto& o : d.obstacles()) {
    std::visit(
        [&](const auto& obs) {
          using T = std::decay_t<decltype(obs)>;
          if constexpr (std::is_same_v<T, ClosedBall>) {
            // x strictly outside: the shifted ball inverts to a ball.
            const Vec c = obs.center - p;
            const double den = c.squaredNorm() - obs.radius * obs.radius;
            w.pieces.push_back({c / den, obs.radius / den});
          } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
            // <n,u> >= b with x strictly below maps to a ball touching 0.
            const double b = obs.offset - obs.normal.dot(p);
            w.pieces.push_back(
                {obs.normal / (2.0 * b), 1.0 / (2.0 * b)});
          } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
            // x strictly inside the hole: exterior plus infinity maps onto
            // a ball containing 0.
            const Vec c = obs.center - p;
            const double den = obs.radius * obs.radius - c.squaredNorm();
            w.pieces.push_back({-c / den, obs.radius / den});
          } else {
            if (obs.point.is_infinite()) {
              w.pieces.push_back({Vec::Zero(p.size()), 0.0});
            } else {
              const Vec q = obs.point.coords() - p;
              w.pieces.push_back({q / q.squaredNorm(), 0.0});
            }
          }
        },
        o);
  }
  return w;
}

double distance_to_complement(const Domain& d, const ExtendedPoint& x) {
  if (x.is_infinite()) {
    throw std::invalid_argument("distance_to_complement: x must be finite");
  }
  if (!d.contains(x)) {
    throw std::invalid_argument("distance_to_complement: x must lie in the domain");
  }
  const Vec& p = x.coords();
  double best = kInf;
  for (const auto& o : d.obstacles()) {
    const double dist = std::visit(
        [&p](const auto& obs) -> double {
          using T = std::decay_t<decltype(obs)>;
          if constexpr (std::is_same_v<T, ClosedBall>) {
            return (p - obs.center).norm() - obs.radius;
          } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
            return obs.offset - obs.normal.dot(p);
          } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
            return obs.radius - (p - obs.center).norm();
          } else {
            return obs.point.is_infinite()
                       ? kInf
                       : (p - obs.point.coords()).norm();
          }
        },
        o);
    best = std::min(best, dist);
  }
  return best;
}

namespace {

// sup over u in U^c of the Euclidean distance |y-u|; +infinity for
// unbounded complements, with the single point at infinity contributing the
// conventional factor 1.
double farthest_complement_distance(const Domain& d, const Vec& y) {
  double best = 0.0;
  for (const auto& o : d.obstacles()) {
    const double dist = std::visit(
        [&y](const auto& obs) -> double {
          using T = std::decay_t<decltype(obs)>;
          if constexpr (std::is_same_v<T, ClosedBall>) {
            return (y - obs.center).norm() + obs.radius;
          } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
            return kInf;
          } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
            return kInf;
          } else {
            return obs.point.is_infinite()
                       ? 1.0
                       : (y - obs.point.coords()).norm();
          }
        },
        o);
    best = std::max(best, dist);
  }
  return best;
}

}  // namespace

double sup_log_ratio(const Domain& d, const ExtendedPoint& x1,
                     const ExtendedPoint& x2) {
  if (!d.contains(x1) || !d.contains(x2)) {
    throw std::invalid_argument("sup_log_ratio: arguments must lie in the domain");
  }
  if (x1 == x2) return 0.0;
  if (x2.is_infinite()) {
    // sup log(1 / |x1-u|) = -log inf |x1-u|.
    return -std::log(distance_to_complement(d, x1));
  }
  if (x1.is_infinite()) {
    const double far = farthest_complement_distance(d, x2.coords());
    return std::log(far);  // +inf when the complement is unbounded
  }
  // |x2-u| / |x1-u| = |x2-x1| * |w - I_{x1}(x2)| over w in W(x1); the
  // supremum is one farthest-point query per piece.
  const InvertedComplement w = inverted_complement(d, x1);
  const Vec diff = x2.coords() - x1.coords();
  const Vec pole = diff / diff.squaredNorm();
  double far = 0.0;
  for (const auto& piece : w.pieces) {
    far = std::max(far, (pole - piece.center).norm() + piece.radius);
  }
  return std::log(diff.norm() * far);
}

std::pair<double, double> support_interval(const Domain& d,
                                           const ExtendedPoint& x,
                                           const Vec& h) {
  if (h.size() != d.dimension() || h.isZero(0.0)) {
    throw std::invalid_argument("support_interval: direction must be nonzero");
  }
  const InvertedComplement w = inverted_complement(d, x);
  const double hn = h.norm();
  double lo = kInf;
  double hi = -kInf;
  for (const auto& piece : w.pieces) {
    const double mid = piece.center.dot(h);
    lo = std::min(lo, mid - piece.radius * hn);
    hi = std::max(hi, mid + piece.radius * hn);
  }
  return {lo, hi};
}

double diameter_of_inverted_complement(const Domain& d,
                                       const ExtendedPoint& x) {
  const InvertedComplement w = inverted_complement(d, x);
  double best = 0.0;
  for (std::size_t i = 0; i < w.pieces.size(); ++i) {
    for (std::size_t j = i; j < w.pieces.size(); ++j) {
      const double v = (w.pieces[i].center - w.pieces[j].center).norm() +
                       w.pieces[i].radius + w.pieces[j].radius;
      best = std::max(best, v);
    }
  }
  return best;
}

bool region_inside(const Domain& d, const Region& r) {
  if (!r.surface.is_sphere() || r.side != RegionSide::negative) {
    throw std::invalid_argument("region_inside: only ball-type regions are supported");
  }
  if (r.dimension() != d.dimension()) {
    throw std::invalid_argument("region_inside: dimension mismatch");
  }
  const Vec& c = r.surface.center();
  const double rad = r.surface.radius();
  for (const auto& o : d.obstacles()) {
    const bool ok = std::visit(
        [&](const auto& obs) -> bool {
          using T = std::decay_t<decltype(obs)>;
          if constexpr (std::is_same_v<T, ClosedBall>) {
            return (c - obs.center).norm() - (rad + obs.radius) > kInsideTol;
          } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
            return obs.offset - (obs.normal.dot(c) + rad) > kInsideTol;
          } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
            return obs.radius - ((c - obs.center).norm() + rad) > kInsideTol;
          } else {
            if (obs.point.is_infinite()) return true;
            return (c - obs.point.coords()).norm() - rad > kInsideTol;
          }
        },
        o);
    if (!ok) return false;
  }
  return true;
}

Obstacle transform_obstacle(const ConformalMap& m, const Obstacle& o) {
  if (const auto* sp = std::get_if<SinglePoint>(&o)) {
    return SinglePoint{m(sp->point)};
  }
  Region r = std::visit(
      [](const auto& obs) -> Region {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, ClosedBall>) {
          return Region::inside_ball(obs.center, obs.radius, true);
        } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
          return Region::half_space_above(obs.normal, obs.offset, true);
        } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
          return Region::outside_ball(obs.center, obs.radius, true);
        } else {
          throw std::logic_error("unreachable");
        }
      },
      o);
  const Region img = image_region(m, r);
  if (img.surface.is_sphere()) {
    if (img.side == RegionSide::negative) {
      return ClosedBall{img.surface.center(), img.surface.radius()};
    }
    return ClosedBallExterior{img.surface.center(), img.surface.radius()};
  }
  if (img.side == RegionSide::positive) {
    return ClosedHalfSpace{img.surface.normal(), img.surface.offset()};
  }
  return ClosedHalfSpace{-img.surface.normal(), -img.surface.offset()};
}

Domain transform_domain(const ConformalMap& m, const Domain& d) {
  if (m.dimension() != d.dimension()) {
    throw std::invalid_argument("transform_domain: dimension mismatch");
  }
  std::vector<Obstacle> obstacles;
  obstacles.reserve(d.obstacles().size());
  for (const auto& o : d.obstacles()) {
    obstacles.push_back(transform_obstacle(m, o));
  }
  return Domain(d.dimension(), std::move(obstacles), m(d.witness()));
}

}  // namespace apollon
