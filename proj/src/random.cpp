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

#include "apollon/random.hpp"

#include <cmath>

namespace apollon {

double Rng::normal() {
  double u = uniform();
  while (u == 0.0) u = uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

Vec Rng::unit_vector(Eigen::Index dim) {
  Vec v(dim);
  double n = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = normal();
    n = v.norm();
  } while (n < 1e-12);
  return v / n;
}

Vec Rng::in_ball(Eigen::Index dim, double radius) {
  const double r =
      radius * std::pow(uniform(), 1.0 / static_cast<double>(dim));
  return r * unit_vector(dim);
}

}  // namespace apollon
