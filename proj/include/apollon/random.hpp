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

#ifndef APOLLON_RANDOM_HPP
#define APOLLON_RANDOM_HPP

#include <cstdint>
#include <random>

#include "apollon/extgeom.hpp"

namespace apollon {

/// Deterministic random source.  Distribution transforms are hand-rolled
/// (std:: distributions are implementation-defined) so that seeded outputs
/// are reproducible byte-for-byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0,1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no caching, two draws per call).
  double normal();

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % n);
  }

  /// Uniform direction on the unit sphere of R^dim.
  Vec unit_vector(Eigen::Index dim);

  /// Uniform in the ball of the given radius.
  Vec in_ball(Eigen::Index dim, double radius);

 private:
  std::mt19937_64 gen_;
};

}  // namespace apollon

#endif  // APOLLON_RANDOM_HPP
