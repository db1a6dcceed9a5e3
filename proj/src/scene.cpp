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

#include "apollon/scene.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace apollon {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SceneError(path + ": " + what);
}

const json& field(const json& j, const std::string& key,
                  const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing");
  return *it;
}

const json* opt_field(const json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Vec vec(const json& j, Eigen::Index dim, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  if (static_cast<Eigen::Index>(j.size()) != dim) {
    fail(path, "expected " + std::to_string(dim) + " coordinates");
  }
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v[i] = number(j[static_cast<std::size_t>(i)],
                  path + "/" + std::to_string(i));
  }
  return v;
}

Obstacle parse_obstacle(const json& j, Eigen::Index dim,
                        const std::string& path) {
  const std::string type = str(field(j, "type", path), path + "/type");
  if (type == "ball" || type == "ball_exterior") {
    Vec c = vec(field(j, "center", path), dim, path + "/center");
    const double r = number(field(j, "radius", path), path + "/radius");
    if (!(r > 0.0)) fail(path + "/radius", "must be > 0");
    if (type == "ball") return ClosedBall{std::move(c), r};
    return ClosedBallExterior{std::move(c), r};
  }
  if (type == "half_space") {
    Vec n = vec(field(j, "normal", path), dim, path + "/normal");
    const double b = number(field(j, "offset", path), path + "/offset");
    if (n.norm() == 0.0) fail(path + "/normal", "must be nonzero");
    return ClosedHalfSpace{std::move(n), b};
  }
  if (type == "point") {
    return SinglePoint{parse_point(field(j, "point", path), dim,
                                   path + "/point")};
  }
  fail(path + "/type", "unknown obstacle type '" + type + "'");
}

ConformalPrimitive parse_primitive(const json& j, Eigen::Index dim,
                                   const std::string& path) {
  const std::string type = str(field(j, "type", path), path + "/type");
  if (type == "translation") {
    return Translation{vec(field(j, "vector", path), dim, path + "/vector")};
  }
  if (type == "orthogonal") {
    const json& rows = field(j, "matrix", path);
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
      fail(path + "/matrix", "expected " + std::to_string(dim) + " rows");
    }
    Eigen::MatrixXd q(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Vec row = vec(rows[static_cast<std::size_t>(r)], dim,
                          path + "/matrix/" + std::to_string(r));
      q.row(r) = row.transpose();
    }
    return OrthogonalMap{std::move(q)};
  }
  if (type == "homothety") {
    const double f = number(field(j, "factor", path), path + "/factor");
    if (!(f > 0.0)) fail(path + "/factor", "must be > 0");
    return Homothety{f};
  }
  if (type == "inversion") {
    return Inversion{};
  }
  fail(path + "/type", "unknown primitive type '" + type + "'");
}

Domain parse_domain(const json& j, Eigen::Index dim, const std::string& path) {
  const json& obs = field(j, "obstacles", path);
  if (!obs.is_array() || obs.empty()) {
    fail(path + "/obstacles", "expected a non-empty array");
  }
  std::vector<Obstacle> obstacles;
  obstacles.reserve(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i) {
    obstacles.push_back(
        parse_obstacle(obs[i], dim, path + "/obstacles/" + std::to_string(i)));
  }
  ExtendedPoint witness =
      parse_point(field(j, "witness", path), dim, path + "/witness");
  try {
    return Domain(dim, std::move(obstacles), std::move(witness));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

ConformalMap parse_map(const json& j, Eigen::Index dim,
                       const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of primitives");
  std::vector<ConformalPrimitive> prims;
  prims.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    prims.push_back(parse_primitive(j[i], dim, path + "/" + std::to_string(i)));
  }
  try {
    return ConformalMap(dim, std::move(prims));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

NestedPair parse_nesting(const json& j, const Scene& scene, Eigen::Index dim,
                         const std::string& path) {
  const std::string type = str(field(j, "type", path), path + "/type");
  try {
    if (type == "concentric") {
      const double rho = number(field(j, "rho", path), path + "/rho");
      const double R = number(field(j, "R", path), path + "/R");
      return NestedPair::concentric(dim, rho, R);
    }
    if (type == "transformed") {
      const std::string name = str(field(j, "map", path), path + "/map");
      auto it = scene.maps.find(name);
      if (it == scene.maps.end()) {
        fail(path + "/map", "unknown map '" + name + "'");
      }
      const double rho = number(field(j, "rho", path), path + "/rho");
      const double R = number(field(j, "R", path), path + "/R");
      return NestedPair::transformed(it->second, rho, R);
    }
    if (type == "general") {
      const std::string in = str(field(j, "inner", path), path + "/inner");
      const std::string out = str(field(j, "outer", path), path + "/outer");
      auto iit = scene.domains.find(in);
      if (iit == scene.domains.end()) {
        fail(path + "/inner", "unknown domain '" + in + "'");
      }
      auto oit = scene.domains.find(out);
      if (oit == scene.domains.end()) {
        fail(path + "/outer", "unknown domain '" + out + "'");
      }
      std::vector<ExtendedPoint> samples;
      if (const json* s = opt_field(j, "samples")) {
        for (std::size_t i = 0; i < s->size(); ++i) {
          samples.push_back(parse_point((*s)[i], dim,
                                        path + "/samples/" + std::to_string(i)));
        }
      }
      return NestedPair::with_sampled_delta(iit->second, oit->second, samples);
    }
  } catch (const SceneError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + "/type", "unknown nesting type '" + type + "'");
}

IfsSystem parse_system(const json& j, const Scene& scene,
                       const std::string& path) {
  const std::string nname = str(field(j, "nesting", path), path + "/nesting");
  auto nit = scene.nestings.find(nname);
  if (nit == scene.nestings.end()) {
    fail(path + "/nesting", "unknown nesting '" + nname + "'");
  }
  const json& gens = field(j, "generators", path);
  if (!gens.is_array() || gens.empty()) {
    fail(path + "/generators", "expected a non-empty array of map names");
  }
  std::vector<ConformalMap> generators;
  generators.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gname =
        str(gens[i], path + "/generators/" + std::to_string(i));
    auto git = scene.maps.find(gname);
    if (git == scene.maps.end()) {
      fail(path + "/generators/" + std::to_string(i),
           "unknown map '" + gname + "'");
    }
    generators.push_back(git->second);
  }
  try {
    return IfsSystem(nit->second, std::move(generators));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

}  // namespace

ExtendedPoint parse_point(const json& j, Eigen::Index dim,
                          const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinity") {
      return ExtendedPoint::infinity(dim);
    }
    fail(path, "expected coordinates or \"infinity\"");
  }
  return ExtendedPoint(vec(j, dim, path));
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("/: invalid JSON: ") + e.what());
  }
  Scene scene;
  scene.hash = fnv1a_hex(text);
  const double dim_d = number(field(doc, "dimension", "/"), "/dimension");
  if (dim_d < 1 || dim_d != std::floor(dim_d)) {
    fail("/dimension", "must be a positive integer");
  }
  scene.dimension = static_cast<Eigen::Index>(dim_d);

  if (const json* domains = opt_field(doc, "domains")) {
    for (auto it = domains->begin(); it != domains->end(); ++it) {
      scene.domains.emplace(
          it.key(),
          parse_domain(it.value(), scene.dimension, "/domains/" + it.key()));
    }
  }
  if (const json* maps = opt_field(doc, "maps")) {
    for (auto it = maps->begin(); it != maps->end(); ++it) {
      scene.maps.emplace(
          it.key(), parse_map(it.value(), scene.dimension, "/maps/" + it.key()));
    }
  }
  if (const json* nestings = opt_field(doc, "nestings")) {
    for (auto it = nestings->begin(); it != nestings->end(); ++it) {
      scene.nestings.emplace(it.key(),
                             parse_nesting(it.value(), scene, scene.dimension,
                                           "/nestings/" + it.key()));
    }
  }
  if (const json* systems = opt_field(doc, "systems")) {
    for (auto it = systems->begin(); it != systems->end(); ++it) {
      scene.systems.emplace(
          it.key(), parse_system(it.value(), scene, "/systems/" + it.key()));
    }
  }
  if (const json* commands = opt_field(doc, "commands")) {
    scene.commands = *commands;
  } else {
    scene.commands = json::object();
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SceneError("cannot open scene file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

}  // namespace apollon
