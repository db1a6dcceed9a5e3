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

#include "apollon/apollonian.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace apollon {

PathPolyline::PathPolyline(std::vector<Vec> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw std::invalid_argument("PathPolyline: need at least two vertices");
  }
  const Eigen::Index dim = vertices_.front().size();
  for (const auto& v : vertices_) {
    if (v.size() != dim || !v.allFinite()) {
      throw std::invalid_argument("PathPolyline: vertices must be finite and share a dimension");
    }
  }
}

double apollonian_distance(const Domain& d, const ExtendedPoint& x1,
                           const ExtendedPoint& x2) {
  // The sup over complement pairs of the log cross-ratio splits into the
  // two one-sided queries.
  return sup_log_ratio(d, x1, x2) + sup_log_ratio(d, x2, x1);
}

double finsler_norm(const Domain& d, const ExtendedPoint& x, const Vec& h) {
  if (h.size() != d.dimension()) {
    throw std::invalid_argument("finsler_norm: direction dimension mismatch");
  }
  if (h.isZero(0.0)) {
    if (!d.contains(x)) {
      throw std::invalid_argument("finsler_norm: x must lie in the domain");
    }
    return 0.0;
  }
  const auto [lo, hi] = support_interval(d, x, h);
  return hi - lo;
}

double conformal_density(const Domain& d, const ExtendedPoint& x) {
  return diameter_of_inverted_complement(d, x);
}

namespace {

using TablePtr = std::unique_ptr<gsl_integration_glfixed_table,
                                 decltype(&gsl_integration_glfixed_table_free)>;

TablePtr make_table(int order) {
  if (order < 2) {
    throw std::invalid_argument("path length: quadrature order must be >= 2");
  }
  TablePtr t(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(order)),
             &gsl_integration_glfixed_table_free);
  if (!t) throw std::runtime_error("path length: quadrature table allocation failed");
  return t;
}

template <typename Integrand>
double polyline_integral(const Domain& d, const PathPolyline& p, int order,
                         Integrand&& integrand) {
  if (p.dimension() != d.dimension()) {
    throw std::invalid_argument("path length: dimension mismatch");
  }
  const auto table = make_table(order);
  const auto& vs = p.vertices();
  for (const auto& v : vs) {
    if (!d.contains(ExtendedPoint(v))) {
      throw std::invalid_argument("path length: a vertex leaves the domain");
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const Vec dir = vs[i + 1] - vs[i];
    if (dir.isZero(0.0)) continue;
    double seg = 0.0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(order); ++j) {
      double t = 0.0;
      double wgt = 0.0;
      gsl_integration_glfixed_point(0.0, 1.0, j, &t, &wgt, table.get());
      const ExtendedPoint node(Vec(vs[i] + t * dir));
      if (!d.contains(node)) {
        throw std::invalid_argument("path length: a quadrature node leaves the domain");
      }
      seg += wgt * integrand(d, node, dir);
    }
    total += seg;
  }
  return total;
}

}  // namespace

double inner_path_length(const Domain& d, const PathPolyline& p,
                         int quadrature_order) {
  return polyline_integral(
      d, p, quadrature_order,
      [](const Domain& dom, const ExtendedPoint& x, const Vec& dir) {
        return finsler_norm(dom, x, dir);
      });
}

double riemann_path_length(const Domain& d, const PathPolyline& p,
                           int quadrature_order) {
  return polyline_integral(
      d, p, quadrature_order,
      [](const Domain& dom, const ExtendedPoint& x, const Vec& dir) {
        return conformal_density(dom, x) * dir.norm();
      });
}

}  // namespace apollon
