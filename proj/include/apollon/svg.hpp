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

#ifndef APOLLON_SVG_HPP
#define APOLLON_SVG_HPP

#include <string>
#include <vector>

#include "apollon/domain.hpp"

namespace apollon {

/// Minimal deterministic SVG writer for 2-D scenes.  World coordinates map
/// to a fixed 800x800 viewport; the mapping is declared in a header
/// comment of the emitted file.
class SvgCanvas {
 public:
  /// World window [xmin,xmax] x [ymin,ymax]; y points up in world space.
  SvgCanvas(double xmin, double xmax, double ymin, double ymax);

  void add_obstacles(const Domain& d);
  void add_region(const Region& r, const std::string& stroke);
  void add_point(const Vec& p, double px_radius, const std::string& fill);
  void add_circle(const Vec& center, double radius, const std::string& stroke,
                  const std::string& fill);

  std::string finish() const;

 private:
  double to_px_x(double x) const;
  double to_px_y(double y) const;
  double to_px_len(double r) const;

  double xmin_, xmax_, ymin_, ymax_;
  double scale_;
  std::vector<std::string> elements_;
};

}  // namespace apollon

#endif  // APOLLON_SVG_HPP
