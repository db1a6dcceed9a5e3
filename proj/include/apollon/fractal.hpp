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

#ifndef APOLLON_FRACTAL_HPP
#define APOLLON_FRACTAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apollon/contraction.hpp"

namespace apollon {

/// A conformal iterated function system: generators mapping V into U for a
/// nested pair with finite closed-form delta and Cl V != completed space
/// (V's complement contains a ball).
class IfsSystem {
 public:
  IfsSystem(NestedPair nesting, std::vector<ConformalMap> generators);

  const NestedPair& nesting() const { return nesting_; }
  const std::vector<ConformalMap>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  double delta() const { return nesting_.delta(); }

 private:
  NestedPair nesting_;
  std::vector<ConformalMap> generators_;
};

struct CoverCell {
  std::vector<int> word;  // generator indices, outermost first
  Vec center;             // Euclidean ball after normalization
  double radius;
};

/// All depth-n cylinder balls of the limit set, in normalized coordinates
/// where V is a bounded Euclidean ball.
struct CylinderCover {
  int depth = 0;
  std::vector<CoverCell> cells;     // k^depth cells, lexicographic words
  double certified_bound = 0.0;     // delta * tanh(delta/4)^(depth-1)
  ConformalMap normalization;       // maps scene coordinates to cover coordinates
  Domain normalized_outer;          // N(V), the domain the bound refers to
  Vec outer_center;                 // N(V) ball parameters
  double outer_radius = 0.0;
};

/// Enumerates the depth-n cylinder cover.  Throws when k^n exceeds the cell
/// cap or when no normalizing point is available in V's complement.
CylinderCover limit_cover(const IfsSystem& sys, int depth,
                          std::size_t cell_cap = 1000000);

/// Upper bound log k / (-log tanh(delta/4)) for the Hausdorff and box
/// dimensions of the limit set; 0 for k = 1; delta must be finite.
double dimension_bound(std::size_t k, double delta);

struct BoxCountResult {
  std::vector<double> scales;
  std::vector<std::size_t> counts;
  double slope = 0.0;     // least-squares fit of log N against log(1/r)
  double residual = 0.0;  // rms residual of the fit
};

/// Occupied axis-aligned boxes of the point set per scale, plus the fitted
/// box-counting slope.  Scales must span at least one decade.
BoxCountResult box_count(const std::vector<Vec>& points,
                         const std::vector<double>& scales);

/// Pairwise disjointness of the depth-1 images (open balls).
bool depth1_images_disjoint(const IfsSystem& sys);

/// "a.b.c" word label used in file outputs.
std::string word_label(const std::vector<int>& word);

}  // namespace apollon

#endif  // APOLLON_FRACTAL_HPP
