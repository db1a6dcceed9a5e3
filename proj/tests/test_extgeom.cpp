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
#include <limits>

#include "apollon/region.hpp"
#include "apollon/random.hpp"

using namespace apollon;

namespace {

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}

ExtendedPoint pt(double x, double y) { return ExtendedPoint(v2(x, y)); }

}  // namespace

TEST_CASE("chordal distance matches the closed form") {
  CHECK(chordal_distance(ExtendedPoint::infinity(2), pt(0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(chordal_distance(pt(0.3, -0.7), pt(0.3, -0.7)) == 0.0);
  CHECK(chordal_distance(pt(1, 0), pt(0, 1)) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  // d(inf, y) = 1/sqrt(1+|y|^2)
  CHECK(chordal_distance(ExtendedPoint::infinity(2), pt(3, 4)) ==
        doctest::Approx(1.0 / std::sqrt(26.0)).epsilon(1e-12));
  CHECK_THROWS_AS(chordal_distance(pt(0, 0), ExtendedPoint(v1(1))),
                  std::invalid_argument);
}

TEST_CASE("chordal distance is a metric of diameter one") {
  Rng rng(7);
  for (Eigen::Index dim = 1; dim <= 5; ++dim) {
    for (int i = 0; i < 200; ++i) {
      std::vector<ExtendedPoint> pts;
      for (int k = 0; k < 3; ++k) {
        if (rng.uniform() < 0.1) {
          pts.emplace_back(ExtendedPoint::infinity(dim));
        } else {
          pts.emplace_back(Vec(5.0 * rng.in_ball(dim, 1.0)));
        }
      }
      const double dab = chordal_distance(pts[0], pts[1]);
      const double dba = chordal_distance(pts[1], pts[0]);
      const double dac = chordal_distance(pts[0], pts[2]);
      const double dcb = chordal_distance(pts[2], pts[1]);
      CHECK(dab == dba);
      CHECK(dab <= 1.0 + 1e-15);
      CHECK(dab <= dac + dcb + 1e-12);
      if (pts[0] == pts[1]) {
        CHECK(dab == 0.0);
      } else {
        CHECK(dab > 0.0);
      }
    }
  }
}

TEST_CASE("cross-ratio examples") {
  // On the real line with u2 = infinity the two conventional factors cancel.
  const ExtendedPoint x1(v1(1)), x2(v1(2)), u1(v1(0));
  CHECK(cross_ratio(x1, x2, u1, ExtendedPoint::infinity(1)) ==
        doctest::Approx(2.0).epsilon(1e-15));

  // Coincident first pair gives 1 regardless of the second pair.
  CHECK(cross_ratio(pt(0.4, 0.1), pt(0.4, 0.1), pt(1, 1), pt(-2, 0.5)) ==
        doctest::Approx(1.0).epsilon(1e-15));

  // (3/2 * 1) / (1 * 1/2) = 3, cross-checked by direct evaluation.
  const double direct =
      ((v2(0.5, 0) - v2(-1, 0)).norm() * (v2(0, 0) - v2(1, 0)).norm()) /
      ((v2(0, 0) - v2(-1, 0)).norm() * (v2(0.5, 0) - v2(1, 0)).norm());
  CHECK(direct == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(cross_ratio(pt(0, 0), pt(0.5, 0), pt(-1, 0), pt(1, 0)) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("cross-ratio rejects shared points between the pairs") {
  CHECK_THROWS_AS(cross_ratio(pt(1, 0), pt(2, 0), pt(1, 0), pt(3, 0)),
                  std::invalid_argument);
  const ExtendedPoint inf = ExtendedPoint::infinity(2);
  CHECK_THROWS_AS(cross_ratio(inf, pt(2, 0), pt(1, 0), inf),
                  std::invalid_argument);
}

TEST_CASE("cross-ratio multiplicativity") {
  Rng rng(11);
  for (Eigen::Index dim = 1; dim <= 4; ++dim) {
    for (int i = 0; i < 300; ++i) {
      auto draw = [&](double infinity_prob) {
        if (rng.uniform() < infinity_prob) {
          return ExtendedPoint::infinity(dim);
        }
        return ExtendedPoint(Vec(3.0 * rng.in_ball(dim, 1.0)));
      };
      const ExtendedPoint x = draw(0.0), y = draw(0.05), z = draw(0.0);
      const ExtendedPoint u = draw(0.05), v = draw(0.0);
      auto distinct = [](const ExtendedPoint& a, const ExtendedPoint& b) {
        return !(a == b);
      };
      if (!(distinct(x, u) && distinct(x, v) && distinct(y, u) &&
            distinct(y, v) && distinct(z, u) && distinct(z, v) &&
            distinct(u, v))) {
        continue;
      }
      const double lhs = cross_ratio(x, z, u, v);
      const double rhs = cross_ratio(x, y, u, v) * cross_ratio(y, z, u, v);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("apollonian ball: alpha < 1 gives the ball around a") {
  const Region r = apollonian_ball(pt(0, 0), pt(1, 0), 0.5);
  REQUIRE(r.surface.is_sphere());
  CHECK(r.side == RegionSide::negative);
  CHECK(!r.closed);
  CHECK(r.surface.center()[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(r.surface.center()[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r.surface.radius() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  // Membership just inside the boundary point (1/3, 0).
  CHECK(r.contains(pt(1.0 / 3.0 - 1e-6, 0)));
  CHECK(!r.contains(pt(1.0 / 3.0 + 1e-6, 0)));
}

TEST_CASE("apollonian ball: alpha = 1 gives the bisector half-space") {
  const Region r = apollonian_ball(pt(0, 0), pt(2, 0), 1.0);
  REQUIRE(r.surface.is_hyperplane());
  CHECK(r.surface.normal()[0] == doctest::Approx(1.0));
  CHECK(r.surface.offset() == doctest::Approx(1.0));
  CHECK(r.side == RegionSide::negative);
  CHECK(r.contains(pt(0.5, 7.0)));
  CHECK(!r.contains(pt(1.5, 0.0)));
}

TEST_CASE("apollonian ball boundary satisfies the defining ratio") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.index(2));
    const Vec a = rng.in_ball(dim, 2.0);
    Vec b = rng.in_ball(dim, 2.0);
    while ((a - b).norm() < 0.1) b = rng.in_ball(dim, 2.0);
    const double alpha = rng.uniform() < 0.5 ? rng.uniform(0.2, 0.9)
                                             : rng.uniform(1.1, 4.0);
    const Region r =
        apollonian_ball(ExtendedPoint(a), ExtendedPoint(b), alpha);
    REQUIRE(r.surface.is_sphere());
    const Vec u =
        r.surface.center() + r.surface.radius() * rng.unit_vector(dim);
    const double ratio = (a - u).norm() / (b - u).norm();
    CHECK(ratio == doctest::Approx(alpha).epsilon(1e-10));
    // The side containing a is the sublevel side.
    CHECK(r.contains(ExtendedPoint(a)));
    CHECK(!r.contains(ExtendedPoint(b)));
  }
}

TEST_CASE("apollonian ball rejects degenerate input") {
  CHECK_THROWS_AS(apollonian_ball(pt(1, 1), pt(1, 1), 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(apollonian_ball(pt(0, 0), pt(1, 0), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(apollonian_ball(pt(0, 0), pt(1, 0), -2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      apollonian_ball(ExtendedPoint::infinity(2), pt(1, 0), 1.0),
      std::invalid_argument);
}

TEST_CASE("extended point invariants") {
  CHECK_THROWS_AS(ExtendedPoint{Vec()}, std::invalid_argument);
  Vec bad(2);
  bad << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ExtendedPoint{bad}, std::invalid_argument);
  const ExtendedPoint inf = ExtendedPoint::infinity(3);
  CHECK(inf.is_infinite());
  CHECK(inf.dimension() == 3);
  CHECK_THROWS_AS(inf.coords(), std::logic_error);
  CHECK(inf == ExtendedPoint::infinity(3));
  CHECK(inf != ExtendedPoint(Vec::Zero(3)));
}
