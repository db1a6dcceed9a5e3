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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace apollon;

namespace {

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

ExtendedPoint pt(double x, double y) { return ExtendedPoint(v2(x, y)); }

Domain unit_ball_domain() {
  return Domain(2, {ClosedBallExterior{Vec::Zero(2), 1.0}},
                ExtendedPoint(Vec::Zero(2)));
}

}  // namespace

TEST_CASE("apollonian distance on the unit ball") {
  const Domain d = unit_ball_domain();
  // alpha1 = log(3/2), alpha2 = log 2; the hyperbolic value at t = 1/2.
  CHECK(apollonian_distance(d, pt(0, 0), pt(0.5, 0)) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(apollonian_distance(d, pt(0.2, -0.4), pt(0.2, -0.4)) == 0.0);
}

TEST_CASE("two-point complement distance") {
  // U^c = {origin, infinity}: the only cross-ratio is |x2|/|x1|.
  const Domain d(2,
                 {SinglePoint{pt(0, 0)},
                  SinglePoint{ExtendedPoint::infinity(2)}},
                 pt(1, 1));
  CHECK(apollonian_distance(d, pt(1, 0), pt(2, 0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(apollonian_distance(d, pt(0, 0), pt(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("apollonian distance matches the hyperbolic metric on balls") {
  Rng rng(41);
  const Domain d = unit_ball_domain();
  for (int i = 0; i < 500; ++i) {
    const Vec x = rng.in_ball(2, 0.995);
    const Vec y = rng.in_ball(2, 0.995);
    const double ap = apollonian_distance(d, ExtendedPoint(x), ExtendedPoint(y));
    const double hyp = test::hyperbolic_ball_distance(x, y, 1.0);
    CHECK(std::abs(ap - hyp) <= 1e-9 * std::max(1.0, hyp));
  }
}

TEST_CASE("symmetry and triangle inequality on random domains") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng.index(3));
    const Domain d = test::random_domain(dim, rng);
    const ExtendedPoint a = test::random_domain_point(d, rng);
    const ExtendedPoint b = test::random_domain_point(d, rng);
    const ExtendedPoint c = test::random_domain_point(d, rng);
    const double dab = apollonian_distance(d, a, b);
    const double dba = apollonian_distance(d, b, a);
    const double dac = apollonian_distance(d, a, c);
    const double dcb = apollonian_distance(d, c, b);
    CHECK(dab == doctest::Approx(dba).epsilon(1e-12));
    CHECK(dab >= -1e-12);
    CHECK(dab <= dac + dcb + 1e-10);
  }
}

TEST_CASE("conformal invariance of the apollonian distance") {
  Rng rng(47);
  int done = 0;
  while (done < 250) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng.index(5));
    const Domain d = test::random_domain(dim, rng);
    const ConformalMap m = test::random_conformal_map(dim, rng);
    const ExtendedPoint a = test::random_domain_point(d, rng);
    const ExtendedPoint b = test::random_domain_point(d, rng);
    if (test::separation(a, b) < 0.05) continue;
    std::optional<Domain> img;
    try {
      img = transform_domain(m, d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const ExtendedPoint ma = m(a);
    const ExtendedPoint mb = m(b);
    if ((ma.is_finite() && ma.coords().norm() > 1e3) ||
        (mb.is_finite() && mb.coords().norm() > 1e3)) {
      continue;
    }
    bool conditioned = true;
    for (const auto& o : img->obstacles()) {
      const double scale = std::visit(
          [](const auto& obs) -> double {
            using T = std::decay_t<decltype(obs)>;
            if constexpr (std::is_same_v<T, ClosedBall> ||
                          std::is_same_v<T, ClosedBallExterior>) {
              return obs.center.norm() + obs.radius;
            } else {
              return 1.0;
            }
          },
          o);
      if (scale > 1e4) conditioned = false;
    }
    if (!conditioned) continue;
    const double before = apollonian_distance(d, a, b);
    const double after = apollonian_distance(*img, ma, mb);
    CHECK(std::abs(after - before) <=
          1e-9 * std::max({1.0, before, after}));
    ++done;
  }
}

TEST_CASE("nesting monotonicity: larger domains have smaller metrics") {
  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index dim = 2;
    const Domain u = test::random_domain(dim, rng);
    // V grows U by dropping one obstacle (when there are several).
    if (u.obstacles().size() < 2) continue;
    std::vector<Obstacle> fewer(u.obstacles().begin(),
                                u.obstacles().end() - 1);
    const Domain v(dim, fewer, u.witness());
    const ExtendedPoint a = test::random_domain_point(u, rng);
    const ExtendedPoint b = test::random_domain_point(u, rng);
    CHECK(apollonian_distance(v, a, b) <=
          apollonian_distance(u, a, b) + 1e-12);
  }
}

TEST_CASE("finsler norm examples and homogeneity") {
  const double rho = 1.7;
  const Domain d(2, {ClosedBallExterior{Vec::Zero(2), rho}},
                 ExtendedPoint(Vec::Zero(2)));
  CHECK(finsler_norm(d, pt(0, 0), v2(1, 0)) ==
        doctest::Approx(2.0 / rho).epsilon(1e-13));
  CHECK(finsler_norm(d, pt(0, 0), Vec::Zero(2)) == 0.0);

  const Domain dp(2, {SinglePoint{pt(1, 0)}}, ExtendedPoint(Vec::Zero(2)));
  CHECK(finsler_norm(dp, pt(0.3, 0.4), v2(0.2, -0.7)) == 0.0);

  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    const Domain rd = test::random_domain(2, rng);
    const ExtendedPoint x = test::random_domain_point(rd, rng);
    const Vec h = rng.in_ball(2, 2.0);
    const double t = rng.uniform(-3.0, 3.0);
    const double ph = finsler_norm(rd, x, h);
    CHECK(finsler_norm(rd, x, Vec(t * h)) ==
          doctest::Approx(std::abs(t) * ph).epsilon(1e-10));
    // Subadditivity in h.
    const Vec g = rng.in_ball(2, 2.0);
    CHECK(finsler_norm(rd, x, Vec(h + g)) <=
          ph + finsler_norm(rd, x, g) + 1e-10);
  }
}

TEST_CASE("conformal density examples and norm bound") {
  const Domain d = unit_ball_domain();
  CHECK(conformal_density(d, pt(0, 0)) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(conformal_density(d, pt(0.5, 0)) ==
        doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  const Domain dp(2, {SinglePoint{pt(1, 0)}}, ExtendedPoint(Vec::Zero(2)));
  CHECK(conformal_density(dp, pt(0, 0)) == 0.0);

  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const Domain rd = test::random_domain(2, rng);
    const ExtendedPoint x = test::random_domain_point(rd, rng);
    const Vec h = rng.in_ball(2, 2.0);
    CHECK(finsler_norm(rd, x, h) <=
          conformal_density(rd, x) * h.norm() + 1e-10);
  }
}

TEST_CASE("density is the direction supremum of the finsler norm") {
  Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    const Domain rd = test::random_domain(2, rng);
    const ExtendedPoint x = test::random_domain_point(rd, rng);
    const double g = conformal_density(rd, x);
    double best = 0.0;
    for (int k = 0; k < 720; ++k) {
      const double a = 2.0 * M_PI * k / 720.0;
      best = std::max(best, finsler_norm(rd, x, v2(std::cos(a), std::sin(a))));
    }
    CHECK(best <= g + 1e-12);
    CHECK(g - best <= 1e-3 * (1.0 + g));
  }
}

TEST_CASE("path lengths: hyperbolic closed forms") {
  const Domain d = unit_ball_domain();
  // Integral of 2/(1-t^2) from -1/2 to 1/2 is 2 log 3.
  const PathPolyline diameter_path({v2(-0.5, 0), v2(0.5, 0)});
  CHECK(inner_path_length(d, diameter_path, 32) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));
  // Radial segment 0 -> (1/2, 0) under the conformal density: log 3.
  const PathPolyline radial({v2(0, 0), v2(0.5, 0)});
  CHECK(riemann_path_length(d, radial, 32) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));

  const PathPolyline degenerate({v2(0.1, 0.1), v2(0.1, 0.1)});
  CHECK(inner_path_length(d, degenerate, 32) == 0.0);
  CHECK(riemann_path_length(d, degenerate, 32) == 0.0);

  const Domain dp(2, {SinglePoint{pt(2, 0)}}, ExtendedPoint(Vec::Zero(2)));
  const PathPolyline any({v2(0, 0), v2(1, 1), v2(0, 1)});
  CHECK(inner_path_length(dp, any, 16) == 0.0);

  // A node outside the domain is an error.
  const PathPolyline escaping({v2(-0.9, 0), v2(0.9, 0.9)});
  CHECK_THROWS_AS(inner_path_length(d, escaping, 32), std::invalid_argument);
  CHECK_THROWS_AS(inner_path_length(d, diameter_path, 1),
                  std::invalid_argument);
}

TEST_CASE("inner length never exceeds riemann length") {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Domain rd = test::random_domain(2, rng);
    const ExtendedPoint anchor = test::random_domain_point(rd, rng);
    const double safe = 0.4 * distance_to_complement(rd, anchor);
    std::vector<Vec> verts{anchor.coords()};
    for (int k = 0; k < 3; ++k) {
      verts.push_back(anchor.coords() + rng.in_ball(2, safe));
    }
    const PathPolyline path(verts);
    CHECK(inner_path_length(rd, path) <=
          riemann_path_length(rd, path) + 1e-10);
  }
}

TEST_CASE("refining a polyline changes length only by quadrature error") {
  const Domain d = unit_ball_domain();
  const PathPolyline coarse({v2(-0.5, 0.1), v2(0.5, 0.2)});
  std::vector<Vec> fine_v;
  for (int i = 0; i <= 8; ++i) {
    const double t = i / 8.0;
    fine_v.push_back((1 - t) * v2(-0.5, 0.1) + t * v2(0.5, 0.2));
  }
  const PathPolyline fine(fine_v);
  CHECK(inner_path_length(d, fine, 32) ==
        doctest::Approx(inner_path_length(d, coarse, 32)).epsilon(1e-10));
  CHECK(riemann_path_length(d, fine, 32) ==
        doctest::Approx(riemann_path_length(d, coarse, 32)).epsilon(1e-10));
}

TEST_CASE("finite differences of the distance recover the finsler norm") {
  Rng rng(73);
  int done = 0;
  while (done < 40) {
    const Domain rd = test::random_domain(2, rng);
    const ExtendedPoint x = test::random_domain_point(rd, rng);
    if (distance_to_complement(rd, x) < 0.1) continue;
    const Vec h = rng.unit_vector(2);
    const double p = finsler_norm(rd, x, h);
    auto err = [&](double t) {
      const ExtendedPoint xt(Vec(x.coords() + t * h));
      return std::abs(apollonian_distance(rd, x, xt) / t - p);
    };
    const double e3 = err(1e-3);
    const double e4 = err(1e-4);
    // First-order convergence: the fitted constant from t = 1e-3 bounds the
    // t = 1e-4 error up to a modest factor and an absolute floor.
    const double fitted = e3 / 1e-3;
    CHECK(e4 <= fitted * 1e-4 * 2.0 + 1e-9);
    ++done;
  }
}

TEST_CASE("euclidean vs apollonian comparison bounds") {
  Rng rng(79);
  // First part: U inside B(x0, R) implies |u1-u2| <= (R/2) d_U(u1,u2).
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dim = 2;
    const double R = rng.uniform(0.5, 3.0);
    const Vec x0 = rng.in_ball(dim, 2.0);
    std::vector<Obstacle> obs{ClosedBallExterior{x0, R}};
    // Optionally shrink U further; the bound only tightens.
    if (rng.uniform() < 0.5) {
      const Vec c = x0 + (0.5 * R) * rng.unit_vector(dim);
      obs.push_back(ClosedBall{c, 0.2 * R});
    }
    std::optional<Domain> dom;
    try {
      dom = Domain(dim, obs, ExtendedPoint(x0));
    } catch (const std::invalid_argument&) {
      continue;  // witness swallowed by the extra obstacle
    }
    ExtendedPoint a = ExtendedPoint(Vec(x0 + rng.in_ball(dim, 0.99 * R)));
    ExtendedPoint b = ExtendedPoint(Vec(x0 + rng.in_ball(dim, 0.99 * R)));
    if (!dom->contains(a) || !dom->contains(b)) continue;
    const double lhs = (a.coords() - b.coords()).norm();
    const double rhs = 0.5 * R * apollonian_distance(*dom, a, b);
    CHECK(rhs - lhs >= -1e-9);
  }
  // Second part: points r-deep inside V satisfy d_V <= (2/r) |u1-u2|.
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dim = 2;
    const Domain v = test::random_domain(dim, rng);
    const double r = rng.uniform(0.05, 0.5);
    ExtendedPoint a = test::random_domain_point(v, rng, 1.5);
    ExtendedPoint b = test::random_domain_point(v, rng, 1.5);
    if (distance_to_complement(v, a) < r || distance_to_complement(v, b) < r) {
      continue;
    }
    const double lhs = apollonian_distance(v, a, b);
    const double rhs = (2.0 / r) * (a.coords() - b.coords()).norm();
    CHECK(rhs - lhs >= -1e-9);
  }
}
