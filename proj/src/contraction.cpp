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

#include "apollon/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "apollon/random.hpp"

namespace apollon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSubsetTol = 1e-12;
// Distances at or below this are treated as the pseudo-metric zero.
constexpr double kZeroDistance = 1e-13;

// Whether obstacle a is contained in obstacle b (closed sets, tolerance in
// favor of containment at touching configurations).
bool obstacle_subset(const Obstacle& a, const Obstacle& b) {
  if (const auto* pa = std::get_if<SinglePoint>(&a)) {
    return obstacle_contains(b, pa->point);
  }
  if (const auto* ba = std::get_if<ClosedBall>(&a)) {
    if (const auto* bb = std::get_if<ClosedBall>(&b)) {
      return (ba->center - bb->center).norm() + ba->radius <=
             bb->radius + kSubsetTol;
    }
    if (const auto* hb = std::get_if<ClosedHalfSpace>(&b)) {
      return hb->normal.dot(ba->center) - ba->radius >= hb->offset - kSubsetTol;
    }
    if (const auto* eb = std::get_if<ClosedBallExterior>(&b)) {
      return (ba->center - eb->center).norm() - ba->radius >=
             eb->radius - kSubsetTol;
    }
    return false;
  }
  if (const auto* ha = std::get_if<ClosedHalfSpace>(&a)) {
    if (const auto* hb = std::get_if<ClosedHalfSpace>(&b)) {
      return (ha->normal - hb->normal).norm() <= 1e-9 &&
             ha->offset >= hb->offset - kSubsetTol;
    }
    if (const auto* eb = std::get_if<ClosedBallExterior>(&b)) {
      return ha->normal.dot(eb->center) + eb->radius <= ha->offset + kSubsetTol;
    }
    return false;
  }
  const auto& ea = std::get<ClosedBallExterior>(a);
  if (const auto* eb = std::get_if<ClosedBallExterior>(&b)) {
    return (ea.center - eb->center).norm() + eb->radius <=
           ea.radius + kSubsetTol;
  }
  return false;
}

Domain concentric_ball_domain(Eigen::Index dim, double radius) {
  std::vector<Obstacle> obs;
  obs.push_back(ClosedBallExterior{Vec::Zero(dim), radius});
  return Domain(dim, std::move(obs), ExtendedPoint(Vec::Zero(dim)));
}

// V's complementary region as an open Region (finite shadow; infinity
// membership is tracked separately by callers through Domain::contains).
Region domain_region_of_single_obstacle(const Domain& d, const char* who) {
  if (d.obstacles().size() != 1) {
    throw std::invalid_argument(std::string(who) +
                                ": unsupported V shape (need a single obstacle)");
  }
  const Obstacle& o = d.obstacles().front();
  if (const auto* e = std::get_if<ClosedBallExterior>(&o)) {
    return Region::inside_ball(e->center, e->radius, false);
  }
  if (const auto* b = std::get_if<ClosedBall>(&o)) {
    return Region::outside_ball(b->center, b->radius, false);
  }
  if (const auto* h = std::get_if<ClosedHalfSpace>(&o)) {
    return Region{GeneralizedSphere::hyperplane(h->normal, h->offset),
                  RegionSide::negative, false};
  }
  throw std::invalid_argument(std::string(who) +
                              ": unsupported V shape (point complement)");
}

// Whether the open region lies inside the domain, allowing tangency of the
// open region to obstacle boundaries.  The point at infinity is checked by
// the caller.
bool open_region_inside(const Region& r, const Domain& d) {
  const double tol = kSubsetTol;
  for (const auto& o : d.obstacles()) {
    bool ok = false;
    if (r.surface.is_sphere() && r.side == RegionSide::negative) {
      const Vec& c = r.surface.center();
      const double rad = r.surface.radius();
      ok = std::visit(
          [&](const auto& obs) -> bool {
            using T = std::decay_t<decltype(obs)>;
            if constexpr (std::is_same_v<T, ClosedBall>) {
              return (c - obs.center).norm() >= rad + obs.radius - tol;
            } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
              return obs.normal.dot(c) + rad <= obs.offset + tol;
            } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
              return (c - obs.center).norm() + rad <= obs.radius + tol;
            } else {
              if (obs.point.is_infinite()) return true;
              return (c - obs.point.coords()).norm() >= rad - tol;
            }
          },
          o);
    } else if (r.surface.is_sphere()) {
      // Open outside of a sphere: obstacles must fit in the closed hole.
      const Vec& c = r.surface.center();
      const double rad = r.surface.radius();
      ok = std::visit(
          [&](const auto& obs) -> bool {
            using T = std::decay_t<decltype(obs)>;
            if constexpr (std::is_same_v<T, ClosedBall>) {
              return (c - obs.center).norm() + obs.radius <= rad + tol;
            } else if constexpr (std::is_same_v<T, SinglePoint>) {
              if (obs.point.is_infinite()) return false;  // inf is interior here
              return (c - obs.point.coords()).norm() <= rad + tol;
            } else {
              return false;  // unbounded obstacles always meet the outside
            }
          },
          o);
    } else {
      // Open half-space; the side is encoded by the region's side flag.
      const double sgn = (r.side == RegionSide::positive) ? 1.0 : -1.0;
      const Vec n = sgn * r.surface.normal();
      const double b = sgn * r.surface.offset();
      // Region is {<n,x> > b}; obstacles must stay in {<n,x> <= b}.
      ok = std::visit(
          [&](const auto& obs) -> bool {
            using T = std::decay_t<decltype(obs)>;
            if constexpr (std::is_same_v<T, ClosedBall>) {
              return n.dot(obs.center) + obs.radius <= b + tol;
            } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
              return (obs.normal + n).norm() <= 1e-9 && -obs.offset <= b + tol;
            } else if constexpr (std::is_same_v<T, ClosedBallExterior>) {
              return false;
            } else {
              if (obs.point.is_infinite()) return true;
              return n.dot(obs.point.coords()) <= b + tol;
            }
          },
          o);
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

double birkhoff_coefficient(double delta) {
  if (std::isnan(delta) || delta < 0.0) {
    throw std::invalid_argument("birkhoff_coefficient: delta must be >= 0");
  }
  if (std::isinf(delta)) return 1.0;
  return std::tanh(delta / 4.0);
}

double j_metric(double s1, double s2) {
  if (!(s1 > 0.0) || !(s2 > 0.0) || std::isinf(s1) || std::isinf(s2)) {
    throw std::invalid_argument("j_metric: arguments must lie in (0,inf)");
  }
  return std::abs(std::log(s2 / s1));
}

double hilbert_1d(double a1, double a2, double s1, double s2) {
  if (!(a1 > 0.0) || !(a2 > a1)) {
    throw std::invalid_argument("hilbert_1d: need 0 < a1 < a2");
  }
  if (!(s1 > a1) || !(s2 > a1) || !(s1 < a2) || !(s2 < a2)) {
    throw std::invalid_argument("hilbert_1d: arguments outside K");
  }
  // |log [s1,s2;a1,a2]| with factors at infinity dropping to 1.
  const double f1 = std::abs(s2 - a1);
  const double f2 = std::isinf(a2) ? 1.0 : std::abs(s1 - a2);
  const double f3 = std::abs(s1 - a1);
  const double f4 = std::isinf(a2) ? 1.0 : std::abs(s2 - a2);
  return std::abs(std::log((f1 * f2) / (f3 * f4)));
}

NestedPair::NestedPair(Domain inner, Domain outer, double delta,
                       DeltaProvenance prov)
    : inner_(std::move(inner)),
      outer_(std::move(outer)),
      delta_(delta),
      provenance_(prov) {}

NestedPair NestedPair::concentric(Eigen::Index dim, double rho, double R) {
  if (!(rho > 0.0) || !(R > 0.0) || rho > R || std::isinf(R)) {
    throw std::invalid_argument("NestedPair: need 0 < rho <= R < inf");
  }
  const double delta = (rho == R) ? kInf : 2.0 * std::log((R + rho) / (R - rho));
  NestedPair np(concentric_ball_domain(dim, rho), concentric_ball_domain(dim, R),
                delta, DeltaProvenance::closed_form);
  np.base_map_ = ConformalMap::identity(dim);
  np.base_rho_ = rho;
  np.base_R_ = R;
  return np;
}

NestedPair NestedPair::transformed(const ConformalMap& m, double rho, double R) {
  NestedPair base = concentric(m.dimension(), rho, R);
  NestedPair np(transform_domain(m, base.inner()), transform_domain(m, base.outer()),
                base.delta(), DeltaProvenance::closed_form);
  np.base_map_ = m;
  np.base_rho_ = rho;
  np.base_R_ = R;
  return np;
}

NestedPair NestedPair::with_sampled_delta(
    Domain inner, Domain outer, const std::vector<ExtendedPoint>& samples) {
  for (const auto& vo : outer.obstacles()) {
    bool covered = false;
    for (const auto& ui : inner.obstacles()) {
      if (obstacle_subset(vo, ui)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw std::invalid_argument("NestedPair: nesting violated (V^c not inside U^c)");
    }
  }
  double delta = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!inner.contains(samples[i])) {
      throw std::invalid_argument("NestedPair: sample point outside U");
    }
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      delta = std::max(delta, apollonian_distance(outer, samples[i], samples[j]));
    }
  }
  return NestedPair(std::move(inner), std::move(outer), delta,
                    DeltaProvenance::sampled_lower_bound);
}

std::pair<double, DeltaProvenance> diameter(const NestedPair& np) {
  return {np.delta(), np.provenance()};
}

ContractionReport verify_ucp(const NestedPair& np,
                             const std::vector<PointPair>& pairs,
                             double tol) {
  if (np.provenance() != DeltaProvenance::closed_form) {
    throw std::invalid_argument(
        "verify_ucp: a sampled lower-bound delta cannot certify the bound");
  }
  ContractionReport rep;
  rep.bound = birkhoff_coefficient(np.delta());
  rep.max_ratio = -kInf;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x1, x2] = pairs[i];
    if (!np.inner().contains(x1) || !np.inner().contains(x2)) {
      throw std::invalid_argument("verify_ucp: pair outside U");
    }
    const double du = apollonian_distance(np.inner(), x1, x2);
    if (du <= kZeroDistance) {
      ++rep.pairs_skipped;
      continue;
    }
    const double dv = apollonian_distance(np.outer(), x1, x2);
    const double ratio = dv / du;
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax_index = i;
    }
    ++rep.pairs_evaluated;
  }
  if (rep.pairs_evaluated == 0) rep.max_ratio = 0.0;
  rep.margin = rep.bound - rep.max_ratio;
  rep.pass = rep.max_ratio <= rep.bound + tol;
  return rep;
}

BirkhoffGridResult birkhoff_grid_check(double a1, double a2, int m) {
  if (!(a1 > 0.0) || !(a2 > a1) || std::isinf(a2)) {
    throw std::invalid_argument("birkhoff_grid_check: need 0 < a1 < a2 < inf");
  }
  if (m < 3) {
    throw std::invalid_argument("birkhoff_grid_check: need m >= 3");
  }
  std::vector<double> grid(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    grid[static_cast<std::size_t>(i)] =
        a1 + (a2 - a1) * (static_cast<double>(i) + 1.0) /
                 (static_cast<double>(m) + 1.0);
  }
  BirkhoffGridResult res;
  res.bound = birkhoff_coefficient(std::log(a2 / a1));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double s1 = grid[static_cast<std::size_t>(i)];
      const double s2 = grid[static_cast<std::size_t>(j)];
      const double ratio = j_metric(s1, s2) / hilbert_1d(a1, a2, s1, s2);
      res.max_ratio = std::max(res.max_ratio, ratio);
    }
  }
  // Infinitesimal ratio along the diagonal by a one-sided finite difference.
  double best = -kInf;
  for (int i = 0; i < m; ++i) {
    const double s = grid[static_cast<std::size_t>(i)];
    const double h = std::min((a2 - a1) * 1e-7, (a2 - s) / 2.0);
    const double ratio = j_metric(s, s + h) / hilbert_1d(a1, a2, s, s + h);
    if (ratio > best) {
      best = ratio;
      res.argmax_s = s;
    }
  }
  return res;
}

bool in_gamma(const ConformalMap& m, const NestedPair& np) {
  const Region v_region =
      domain_region_of_single_obstacle(np.outer(), "in_gamma");
  const Region img = image_region(m, v_region);
  // gamma(V) contains infinity iff the pullback of infinity lies in V.
  const ExtendedPoint inf_pt = ExtendedPoint::infinity(m.dimension());
  if (np.outer().contains(m.inverse()(inf_pt)) &&
      !np.inner().contains(inf_pt)) {
    return false;
  }
  return open_region_inside(img, np.inner());
}

ContractionReport lipschitz_report(const ConformalMap& m,
                                   const NestedPair& np,
                                   const std::vector<PointPair>& pairs,
                                   double tol) {
  ContractionReport rep;
  rep.bound = birkhoff_coefficient(np.delta());
  rep.max_ratio = -kInf;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [v1, v2] = pairs[i];
    if (!np.outer().contains(v1) || !np.outer().contains(v2)) {
      throw std::invalid_argument("lipschitz_report: pair outside V");
    }
    const double dv = apollonian_distance(np.outer(), v1, v2);
    if (dv <= kZeroDistance) {
      ++rep.pairs_skipped;
      continue;
    }
    const double dmv = apollonian_distance(np.outer(), m(v1), m(v2));
    const double ratio = dmv / dv;
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax_index = i;
    }
    ++rep.pairs_evaluated;
  }
  if (rep.pairs_evaluated == 0) rep.max_ratio = 0.0;
  rep.margin = rep.bound - rep.max_ratio;
  rep.pass = rep.max_ratio <= rep.bound + tol;
  return rep;
}

std::vector<PointPair> sample_nesting_pairs(const NestedPair& np,
                                            std::size_t count,
                                            std::uint64_t seed,
                                            double near_center_fraction) {
  if (!np.base_rho().has_value()) {
    throw std::invalid_argument(
        "sample_nesting_pairs: only concentric or transformed nestings");
  }
  const double rho = *np.base_rho();
  const Eigen::Index dim = np.inner().dimension();
  const ConformalMap& map = *np.base_map();
  Rng rng(seed);
  std::vector<PointPair> pairs;
  pairs.reserve(count);
  const auto near_count =
      static_cast<std::size_t>(near_center_fraction * static_cast<double>(count));
  for (std::size_t i = 0; i < count; ++i) {
    const double cap = (i < near_count) ? 0.05 * rho : 0.995 * rho;
    Vec a = rng.in_ball(dim, cap);
    Vec b = rng.in_ball(dim, cap);
    while ((a - b).norm() < 1e-3 * cap) {
      b = rng.in_ball(dim, cap);
    }
    pairs.emplace_back(map(ExtendedPoint(a)), map(ExtendedPoint(b)));
  }
  return pairs;
}

}  // namespace apollon
