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

// U = open unit ball
Domain unit_ball_domain() {
  return Domain(2, {ClosedBallExterior{Vec::Zero(2), 1.0}},
                ExtendedPoint(Vec::Zero(2)));
}

// U = complement of the closed unit ball
Domain ball_complement_domain() {
  Vec w(2);
  w << 2, 0;
  return Domain(2, {ClosedBall{Vec::Zero(2), 1.0}}, ExtendedPoint(w));
}

}  // namespace

TEST_CASE("containment and the point at infinity") {
  const Domain outside = ball_complement_domain();
  CHECK(outside.contains(pt(2, 0)));
  CHECK(!outside.contains(pt(0.5, 0)));
  CHECK(outside.contains(ExtendedPoint::infinity(2)));

  const Domain ball = unit_ball_domain();
  CHECK(ball.contains(pt(0.5, 0)));
  CHECK(!ball.contains(pt(1.0, 0)));  // the obstacle is closed
  CHECK(!ball.contains(ExtendedPoint::infinity(2)));

  const Domain halfplane =
      Domain(2, {ClosedHalfSpace{v2(1, 0), 1.0}}, ExtendedPoint(Vec::Zero(2)));
  CHECK(!halfplane.contains(ExtendedPoint::infinity(2)));
  CHECK(!halfplane.contains(pt(1.0, 5.0)));
  CHECK(halfplane.contains(pt(0.99, -5.0)));

  CHECK_THROWS_AS(Domain(2, {ClosedBall{Vec::Zero(2), 1.0}},
                         ExtendedPoint(Vec::Zero(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(Domain(2, {}, ExtendedPoint(Vec::Zero(2))),
                  std::invalid_argument);
}

TEST_CASE("inverted complement of the unit ball at the center") {
  const Domain d = unit_ball_domain();
  const InvertedComplement w = inverted_complement(d, pt(0, 0));
  REQUIRE(w.pieces.size() == 1);
  CHECK(w.pieces[0].center.norm() <= 1e-15);
  CHECK(w.pieces[0].radius == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("inverted complement examples") {
  // Ball obstacle at distance: sphere-image closed form.
  Vec w0(2);
  w0 << 0, 0;
  const Domain d(2, {ClosedBall{v2(3, 0), 1.0}}, ExtendedPoint(w0));
  const InvertedComplement w = inverted_complement(d, pt(0, 0));
  REQUIRE(w.pieces.size() == 1);
  CHECK(w.pieces[0].center[0] == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
  CHECK(w.pieces[0].radius == doctest::Approx(1.0 / 8.0).epsilon(1e-14));

  // A single point obstacle maps to a single point.
  const Domain dp(2, {SinglePoint{pt(1, 0)}}, ExtendedPoint(w0));
  const InvertedComplement wp = inverted_complement(dp, pt(0, 0));
  REQUIRE(wp.pieces.size() == 1);
  CHECK(wp.pieces[0].radius == 0.0);
  CHECK(wp.pieces[0].center[0] == doctest::Approx(1.0));

  // Obstacles containing infinity produce pieces holding the origin image.
  const Domain dh(2, {ClosedHalfSpace{v2(1, 0), 2.0}}, ExtendedPoint(w0));
  const InvertedComplement wh = inverted_complement(dh, pt(0, 0));
  REQUIRE(wh.pieces.size() == 1);
  // Ball center n/(2b) radius 1/(2b), touching the origin.
  CHECK(wh.pieces[0].center[0] == doctest::Approx(0.25));
  CHECK(wh.pieces[0].radius == doctest::Approx(0.25));
  CHECK(wh.pieces[0].center.norm() <= wh.pieces[0].radius + 1e-15);

  CHECK_THROWS_AS(inverted_complement(d, pt(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(inverted_complement(d, ExtendedPoint::infinity(2)),
                  std::invalid_argument);
}

TEST_CASE("sup_log_ratio on the unit ball matches the hand values") {
  const Domain d = unit_ball_domain();
  CHECK(sup_log_ratio(d, pt(0, 0), pt(0.5, 0)) ==
        doctest::Approx(std::log(1.5)).epsilon(1e-12));
  CHECK(sup_log_ratio(d, pt(0.5, 0), pt(0, 0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(sup_log_ratio(d, pt(0.3, -0.2), pt(0.3, -0.2)) == 0.0);
  CHECK_THROWS_AS(sup_log_ratio(d, pt(0, 0), pt(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("sup_log_ratio infinity conventions") {
  const Domain d = ball_complement_domain();  // complement = closed unit ball
  const ExtendedPoint inf = ExtendedPoint::infinity(2);
  // x2 = infinity: -log inf-distance; x1 = (3,0) has distance 2 to the ball.
  CHECK(sup_log_ratio(d, pt(3, 0), inf) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  // x1 = infinity: log of the farthest distance, here 3 + 1.
  CHECK(sup_log_ratio(d, inf, pt(3, 0)) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(sup_log_ratio(d, inf, inf) == 0.0);
}

TEST_CASE("support interval examples") {
  const Domain d = unit_ball_domain();
  const auto [lo, hi] = support_interval(d, pt(0, 0), v2(1, 0));
  CHECK(lo == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-14));

  // Singleton complement: zero width orthogonal to the point direction.
  const Domain dp(2, {SinglePoint{pt(1, 0)}}, ExtendedPoint(Vec::Zero(2)));
  const auto [lo2, hi2] = support_interval(dp, pt(0, 0), v2(0, 1));
  CHECK(hi2 - lo2 == doctest::Approx(0.0));

  // B(0, rho): width 2/rho for unit directions.
  const double rho = 2.5;
  const Domain dr(2, {ClosedBallExterior{Vec::Zero(2), rho}},
                  ExtendedPoint(Vec::Zero(2)));
  const auto [lo3, hi3] = support_interval(dr, pt(0, 0), v2(0, 1));
  CHECK(hi3 - lo3 == doctest::Approx(2.0 / rho).epsilon(1e-14));

  CHECK_THROWS_AS(support_interval(d, pt(0, 0), Vec::Zero(2)),
                  std::invalid_argument);
}

TEST_CASE("diameter of the inverted complement") {
  const Domain d = unit_ball_domain();
  CHECK(diameter_of_inverted_complement(d, pt(0, 0)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // 2R/(R^2-|x|^2) at x=(1/2,0), R=1 gives 8/3.
  CHECK(diameter_of_inverted_complement(d, pt(0.5, 0)) ==
        doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  const Domain dp(2, {SinglePoint{pt(1, 0)}}, ExtendedPoint(Vec::Zero(2)));
  CHECK(diameter_of_inverted_complement(dp, pt(0, 0)) == 0.0);
}

TEST_CASE("region_inside uses strict containment") {
  const Domain ball = unit_ball_domain();
  CHECK(region_inside(ball, Region::inside_ball(v2(0.5, 0), 0.25)));
  CHECK(!region_inside(ball, Region::inside_ball(v2(0.5, 0), 0.75)));
  // Exact tangency counts as not inside.
  CHECK(!region_inside(ball, Region::inside_ball(v2(0.5, 0), 0.5)));

  const Domain outside = ball_complement_domain();
  CHECK(region_inside(outside, Region::inside_ball(v2(3, 0), 1.0)));
  CHECK(!region_inside(outside, Region::inside_ball(v2(2, 0), 1.0)));

  CHECK_THROWS_AS(region_inside(ball, Region::outside_ball(v2(0, 0), 1.0)),
                  std::invalid_argument);
}

TEST_CASE("closed-form queries dominate the sampling oracle") {
  Rng rng(101);
  for (int trial = 0; trial < 12; ++trial) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.index(2));
    const Domain d = test::random_domain(dim, rng);
    const ExtendedPoint x1 = test::random_domain_point(d, rng, 1.2, 0.05);
    const ExtendedPoint x2 = test::random_domain_point(d, rng, 1.2, 0.05);
    if (test::separation(x1, x2) < 1e-3) continue;

    const double closed = sup_log_ratio(d, x1, x2);
    Rng orng(rng.next_u64());
    const double sampled = test::oracle_sup_log_ratio(d, x1, x2, 30000, orng);
    CHECK(sampled <= closed + 1e-9);
    CHECK(closed - sampled <= 1e-3);

    const Vec h = rng.unit_vector(dim);
    const auto [lo, hi] = support_interval(d, x1, h);
    const auto [olo, ohi] = test::oracle_support_interval(d, x1, h, 30000, orng);
    CHECK(olo >= lo - 1e-9);
    CHECK(ohi <= hi + 1e-9);
    CHECK(hi - ohi <= 1e-3);
    CHECK(olo - lo <= 1e-3);

    const double diam = diameter_of_inverted_complement(d, x1);
    const double odiam = test::oracle_w_diameter(d, x1, 30000, orng);
    CHECK(odiam <= diam + 1e-9);
    CHECK(diam - odiam <= 2e-3);
  }
}

TEST_CASE("growing the complement never decreases the supremum") {
  Rng rng(211);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index dim = 2;
    const Domain d = test::random_domain(dim, rng, 2);
    const ExtendedPoint x1 = test::random_domain_point(d, rng);
    const ExtendedPoint x2 = test::random_domain_point(d, rng);
    // Add one more obstacle that keeps both points in the domain.
    Vec c = 3.0 * rng.unit_vector(dim);
    const double r = 0.3;
    if ((c - x1.coords()).norm() <= r + 0.05 ||
        (c - x2.coords()).norm() <= r + 0.05) {
      continue;
    }
    std::vector<Obstacle> obs = d.obstacles();
    obs.push_back(ClosedBall{c, r});
    bool witness_ok = true;
    if (d.witness().is_finite() &&
        (c - d.witness().coords()).norm() <= r) {
      witness_ok = false;
    }
    if (!witness_ok) continue;
    const Domain grown(dim, obs, d.witness());
    CHECK(sup_log_ratio(grown, x1, x2) >= sup_log_ratio(d, x1, x2) - 1e-12);
  }
}

TEST_CASE("obstacles transform exactly under the group") {
  Rng rng(307);
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.index(2));
    const Domain d = test::random_domain(dim, rng);
    const ConformalMap m = test::random_conformal_map(dim, rng);
    std::optional<Domain> transformed;
    try {
      transformed = transform_domain(m, d);
    } catch (const std::invalid_argument&) {
      continue;  // witness mapped onto an obstacle boundary; skip
    }
    const Domain& img = *transformed;
    for (int k = 0; k < 25; ++k) {
      const ExtendedPoint p =
          rng.uniform() < 0.05
              ? ExtendedPoint::infinity(dim)
              : ExtendedPoint(Vec(rng.in_ball(dim, 2.5)));
      const ExtendedPoint mp = m(p);
      // Skip points numerically on an obstacle boundary, on either the
      // source or the image side; membership there is a roundoff call.
      // The point at infinity lies on the boundary of every half-space.
      auto boundary_margin = [](const Obstacle& o, const ExtendedPoint& q) {
        if (q.is_infinite()) {
          return std::holds_alternative<ClosedHalfSpace>(o) ? 0.0 : 1.0;
        }
        return std::visit(
            [&](const auto& obs) -> double {
              using T = std::decay_t<decltype(obs)>;
              if constexpr (std::is_same_v<T, ClosedBall> ||
                            std::is_same_v<T, ClosedBallExterior>) {
                return std::abs((q.coords() - obs.center).norm() - obs.radius);
              } else if constexpr (std::is_same_v<T, ClosedHalfSpace>) {
                return std::abs(obs.normal.dot(q.coords()) - obs.offset);
              } else {
                return 1.0;
              }
            },
            o);
      };
      bool ambiguous = false;
      for (std::size_t oi = 0; oi < d.obstacles().size(); ++oi) {
        const double scale =
            mp.is_finite() ? 1.0 + mp.coords().squaredNorm() : 1.0;
        if (boundary_margin(d.obstacles()[oi], p) < 1e-6 ||
            boundary_margin(img.obstacles()[oi], mp) < 1e-6 * scale) {
          ambiguous = true;
        }
      }
      if (ambiguous) continue;
      if (mp.is_finite() && mp.coords().norm() > 1e4) continue;
      CHECK(d.contains(p) == img.contains(mp));
    }
  }
}
