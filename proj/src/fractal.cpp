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

#include "apollon/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace apollon {

namespace {

// The normalizing point q in the interior of V's complement, chosen
// deterministically: infinity when V is already bounded, otherwise the
// center of the largest ball obstacle, otherwise a unit depth inside a
// half-space obstacle.
ConformalMap normalizing_map(const Domain& outer) {
  const Eigen::Index dim = outer.dimension();
  for (const auto& o : outer.obstacles()) {
    if (std::holds_alternative<ClosedBallExterior>(o)) {
      return ConformalMap::identity(dim);  // V is bounded, q = infinity
    }
  }
  const ClosedBall* largest = nullptr;
  for (const auto& o : outer.obstacles()) {
    if (const auto* b = std::get_if<ClosedBall>(&o)) {
      if (largest == nullptr || b->radius > largest->radius) largest = b;
    }
  }
  Vec q;
  if (largest != nullptr) {
    q = largest->center;
  } else {
    const ClosedHalfSpace* hs = nullptr;
    for (const auto& o : outer.obstacles()) {
      if (const auto* h = std::get_if<ClosedHalfSpace>(&o)) {
        hs = h;
        break;
      }
    }
    if (hs == nullptr) {
      throw std::invalid_argument(
          "limit_cover: no normalizing point available (V's complement lacks "
          "an interior ball)");
    }
    q = (hs->offset + 1.0) * hs->normal;
  }
  // Inversion in q: x -> (x-q)/|x-q|^2.
  std::vector<ConformalPrimitive> prims;
  prims.push_back(Inversion{});
  prims.push_back(Translation{-q});
  return ConformalMap(dim, std::move(prims));
}

}  // namespace

IfsSystem::IfsSystem(NestedPair nesting, std::vector<ConformalMap> generators)
    : nesting_(std::move(nesting)), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("IfsSystem: need at least one generator");
  }
  if (nesting_.provenance() != DeltaProvenance::closed_form ||
      std::isinf(nesting_.delta())) {
    throw std::invalid_argument(
        "IfsSystem: delta must be finite with closed-form provenance");
  }
  bool has_interior = false;
  for (const auto& o : nesting_.outer().obstacles()) {
    if (!std::holds_alternative<SinglePoint>(o)) has_interior = true;
  }
  if (!has_interior) {
    throw std::invalid_argument(
        "IfsSystem: V's complement must contain a ball (Cl V != completed space)");
  }
  for (const auto& g : generators_) {
    if (g.dimension() != nesting_.inner().dimension()) {
      throw std::invalid_argument("IfsSystem: generator dimension mismatch");
    }
    if (!in_gamma(g, nesting_)) {
      throw std::invalid_argument(
          "IfsSystem: a generator does not map V into U");
    }
  }
}

CylinderCover limit_cover(const IfsSystem& sys, int depth,
                          std::size_t cell_cap) {
  if (depth < 1) {
    throw std::invalid_argument("limit_cover: depth must be >= 1");
  }
  const std::size_t k = sys.generator_count();
  double cells_d = 1.0;
  for (int i = 0; i < depth; ++i) {
    cells_d *= static_cast<double>(k);
    if (cells_d > static_cast<double>(cell_cap)) {
      throw std::invalid_argument("limit_cover: cell cap exceeded");
    }
  }
  const Domain& outer = sys.nesting().outer();
  if (outer.obstacles().size() != 1) {
    throw std::invalid_argument(
        "limit_cover: unsupported V shape (need a single obstacle)");
  }
  // The boundary surface of V in scene coordinates; cylinder cells are its
  // images under N composed with the word maps.
  const GeneralizedSphere v_surface = std::visit(
      [](const auto& obs) -> GeneralizedSphere {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, ClosedBallExterior> ||
                      std::is_same_v<T, ClosedBall>) {
          return GeneralizedSphere::sphere(obs.center, obs.radius);
        } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
          return GeneralizedSphere::hyperplane(obs.normal, obs.offset);
        } else {
          throw std::invalid_argument(
              "limit_cover: unsupported V shape (point complement)");
        }
      },
      outer.obstacles().front());
  const ConformalMap norm = normalizing_map(outer);
  const Domain normalized_outer = transform_domain(norm, outer);
  if (normalized_outer.obstacles().size() != 1 ||
      !std::holds_alternative<ClosedBallExterior>(
          normalized_outer.obstacles().front())) {
    throw std::invalid_argument(
        "limit_cover: V is not a ball after normalization");
  }
  const auto& ext =
      std::get<ClosedBallExterior>(normalized_outer.obstacles().front());

  CylinderCover cover{depth,
                      {},
                      sys.delta() * std::pow(birkhoff_coefficient(sys.delta()),
                                             depth - 1),
                      norm,
                      normalized_outer,
                      ext.center,
                      ext.radius};
  cover.cells.reserve(static_cast<std::size_t>(cells_d));

  // Depth-first in lexicographic word order; the composed map of the prefix
  // is carried down the stack.
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(depth));
  auto expand = [&](auto&& self, const ConformalMap& prefix) -> void {
    if (static_cast<int>(word.size()) == depth) {
      const GeneralizedSphere img = image_sphere(prefix, v_surface);
      if (!img.is_sphere()) {
        throw std::runtime_error("limit_cover: cylinder image degenerated");
      }
      cover.cells.push_back(CoverCell{word, img.center(), img.radius()});
      return;
    }
    for (std::size_t i = 0; i < k; ++i) {
      word.push_back(static_cast<int>(i));
      self(self, prefix.compose(sys.generators()[i]));
      word.pop_back();
    }
  };
  expand(expand, norm);
  return cover;
}

double dimension_bound(std::size_t k, double delta) {
  if (k < 1) {
    throw std::invalid_argument("dimension_bound: k must be >= 1");
  }
  if (k == 1) return 0.0;
  if (std::isnan(delta) || delta < 0.0 || std::isinf(delta)) {
    throw std::invalid_argument("dimension_bound: delta must lie in [0,inf)");
  }
  if (delta == 0.0) return 0.0;
  return std::log(static_cast<double>(k)) /
         (-std::log(birkhoff_coefficient(delta)));
}

BoxCountResult box_count(const std::vector<Vec>& points,
                         const std::vector<double>& scales) {
  if (points.empty()) {
    throw std::invalid_argument("box_count: no points");
  }
  if (scales.size() < 2) {
    throw std::invalid_argument("box_count: need at least two scales");
  }
  double smin = scales.front();
  double smax = scales.front();
  for (double s : scales) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("box_count: scales must be positive");
    }
    smin = std::min(smin, s);
    smax = std::max(smax, s);
  }
  if (smax / smin < 10.0) {
    throw std::invalid_argument("box_count: scales must span at least a decade");
  }
  BoxCountResult res;
  res.scales = scales;
  res.counts.reserve(scales.size());
  const Eigen::Index dim = points.front().size();
  for (double r : scales) {
    std::set<std::vector<long long>> boxes;
    std::vector<long long> key(static_cast<std::size_t>(dim));
    for (const auto& p : points) {
      for (Eigen::Index i = 0; i < dim; ++i) {
        key[static_cast<std::size_t>(i)] =
            static_cast<long long>(std::floor(p[i] / r));
      }
      boxes.insert(key);
    }
    res.counts.push_back(boxes.size());
  }
  // Least squares of log N against log(1/r).
  const auto n = static_cast<double>(scales.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const double x = std::log(1.0 / scales[i]);
    const double y = std::log(static_cast<double>(res.counts[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double var = sxx - sx * sx / n;
  if (var <= 0.0) {
    throw std::invalid_argument("box_count: degenerate scales");
  }
  res.slope = (sxy - sx * sy / n) / var;
  const double intercept = (sy - res.slope * sx) / n;
  double rss = 0.0;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const double x = std::log(1.0 / scales[i]);
    const double y = std::log(static_cast<double>(res.counts[i]));
    const double e = y - (intercept + res.slope * x);
    rss += e * e;
  }
  res.residual = std::sqrt(rss / n);
  return res;
}

bool depth1_images_disjoint(const IfsSystem& sys) {
  const CylinderCover c1 = limit_cover(sys, 1);
  for (std::size_t i = 0; i < c1.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < c1.cells.size(); ++j) {
      const double gap = (c1.cells[i].center - c1.cells[j].center).norm() -
                         (c1.cells[i].radius + c1.cells[j].radius);
      if (gap < -1e-12) return false;
    }
  }
  return true;
}

std::string word_label(const std::vector<int>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) s.push_back('.');
    s += std::to_string(word[i]);
  }
  return s;
}

}  // namespace apollon
