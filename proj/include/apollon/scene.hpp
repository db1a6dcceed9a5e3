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

#ifndef APOLLON_SCENE_HPP
#define APOLLON_SCENE_HPP

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "apollon/fractal.hpp"

namespace apollon {

/// Scene validation failure; the message carries the path of the offending
/// element within the document.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed scene file: named domains, conformal maps, nestings and IFS
/// systems, plus raw per-command parameter blocks.
struct Scene {
  Eigen::Index dimension = 0;
  std::map<std::string, Domain> domains;
  std::map<std::string, ConformalMap> maps;
  std::map<std::string, NestedPair> nestings;
  std::map<std::string, IfsSystem> systems;
  nlohmann::json commands;
  std::string hash;  // fnv1a-64 of the document bytes, hex
};

Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

std::string fnv1a_hex(const std::string& bytes);

/// Parses a point spec: an array of numbers or the string "infinity".
ExtendedPoint parse_point(const nlohmann::json& j, Eigen::Index dim,
                          const std::string& path);

}  // namespace apollon

#endif  // APOLLON_SCENE_HPP
