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

#include "apollon/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "apollon/random.hpp"
#include "apollon/scene.hpp"
#include "apollon/svg.hpp"
#include "apollon/version.hpp"

namespace apollon::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string point_str(const ExtendedPoint& p) {
  if (p.is_infinite()) return "infinity";
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.dimension(); ++i) {
    if (i) s += ", ";
    s += num(p.coords()[i]);
  }
  return s + ")";
}

class Report {
 public:
  Report(const Scene& scene, const std::string& command, std::uint64_t seed) {
    line("# apollon " + std::string(kVersion));
    line("# scene fnv1a " + scene.hash);
    line("# command " + command);
    line("# seed " + std::to_string(seed));
  }

  void line(const std::string& s) { text_ += s + "\n"; }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file " + name);
  }
  out << content;
}

const json& command_block(const Scene& scene, const std::string& cmd) {
  auto it = scene.commands.find(cmd);
  if (it == scene.commands.end()) {
    throw SceneError("/commands/" + cmd + ": missing");
  }
  return *it;
}

template <typename T>
const T& named(const std::map<std::string, T>& m, const std::string& name,
               const std::string& path) {
  auto it = m.find(name);
  if (it == m.end()) {
    throw SceneError(path + ": unknown name '" + name + "'");
  }
  return it->second;
}

std::string get_string(const json& j, const std::string& key,
                       const std::string& path) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw SceneError(path + "/" + key + ": expected a string");
  }
  return j[key].get<std::string>();
}

double get_number(const json& j, const std::string& key,
                  const std::string& path) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw SceneError(path + "/" + key + ": expected a number");
  }
  return j[key].get<double>();
}

double get_number_or(const json& j, const std::string& key, double fallback) {
  if (j.contains(key) && j[key].is_number()) return j[key].get<double>();
  return fallback;
}

int run_dist(const Scene& scene, const Options& opts, std::ostream& out) {
  const json& block = command_block(scene, "dist");
  const Domain& d = named(scene.domains,
                          get_string(block, "domain", "/commands/dist"),
                          "/commands/dist/domain");
  if (!block.contains("pairs") || !block["pairs"].is_array()) {
    throw SceneError("/commands/dist/pairs: expected an array");
  }
  Report rep(scene, "dist", opts.seed);
  const auto& pairs = block["pairs"];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string path = "/commands/dist/pairs/" + std::to_string(i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) {
      throw SceneError(path + ": expected [x1, x2]");
    }
    const ExtendedPoint x1 =
        parse_point(pairs[i][0], scene.dimension, path + "/0");
    const ExtendedPoint x2 =
        parse_point(pairs[i][1], scene.dimension, path + "/1");
    const double v = apollonian_distance(d, x1, x2);
    rep.line("pair " + std::to_string(i) + " " + point_str(x1) + " " +
             point_str(x2) + " d_U " + num(v));
  }
  out << rep.text();
  write_file(opts.out_dir, "dist_report.txt", rep.text());
  return 0;
}

int run_density(const Scene& scene, const Options& opts, std::ostream& out) {
  const json& block = command_block(scene, "density");
  const Domain& d = named(scene.domains,
                          get_string(block, "domain", "/commands/density"),
                          "/commands/density/domain");
  if (!block.contains("grid")) {
    throw SceneError("/commands/density/grid: missing");
  }
  const json& grid = block["grid"];
  const Eigen::Index dim = scene.dimension;
  const ExtendedPoint lo =
      parse_point(grid.contains("min") ? grid["min"] : json(), dim,
                  "/commands/density/grid/min");
  const ExtendedPoint hi =
      parse_point(grid.contains("max") ? grid["max"] : json(), dim,
                  "/commands/density/grid/max");
  if (!grid.contains("counts") || !grid["counts"].is_array() ||
      static_cast<Eigen::Index>(grid["counts"].size()) != dim) {
    throw SceneError("/commands/density/grid/counts: expected " +
                     std::to_string(dim) + " entries");
  }
  std::vector<int> counts;
  std::size_t total = 1;
  for (const auto& c : grid["counts"]) {
    const int n = c.get<int>();
    if (n < 1) throw SceneError("/commands/density/grid/counts: entries must be >= 1");
    counts.push_back(n);
    total *= static_cast<std::size_t>(n);
    if (total > 4000000) {
      throw SceneError("/commands/density/grid/counts: grid too large");
    }
  }
  std::string csv;
  for (Eigen::Index i = 0; i < dim; ++i) csv += "x" + std::to_string(i) + ",";
  csv += "g\n";
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  double gmin = std::numeric_limits<double>::infinity();
  double gmax = 0.0;
  std::size_t inside = 0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    Vec x(dim);
    std::size_t rem = flat;
    for (Eigen::Index i = dim - 1; i >= 0; --i) {
      const int n = counts[static_cast<std::size_t>(i)];
      const int k = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
      const double t = n == 1 ? 0.5 : static_cast<double>(k) / (n - 1);
      x[i] = lo.coords()[i] + t * (hi.coords()[i] - lo.coords()[i]);
    }
    const ExtendedPoint p(x);
    std::string row;
    for (Eigen::Index i = 0; i < dim; ++i) row += num(x[i]) + ",";
    if (d.contains(p)) {
      const double g = conformal_density(d, p);
      row += num(g);
      gmin = std::min(gmin, g);
      gmax = std::max(gmax, g);
      ++inside;
    } else {
      row += "nan";
    }
    csv += row + "\n";
  }
  Report rep(scene, "density", opts.seed);
  rep.line("grid points " + std::to_string(total));
  rep.line("inside " + std::to_string(inside));
  if (inside > 0) {
    rep.line("g min " + num(gmin));
    rep.line("g max " + num(gmax));
  }
  out << rep.text();
  write_file(opts.out_dir, "density_report.txt", rep.text());
  write_file(opts.out_dir, "density.csv", csv);
  return 0;
}

int run_finsler(const Scene& scene, const Options& opts, std::ostream& out) {
  const json& block = command_block(scene, "finsler");
  const Domain& d = named(scene.domains,
                          get_string(block, "domain", "/commands/finsler"),
                          "/commands/finsler/domain");
  if (!block.contains("points") || !block["points"].is_array() ||
      !block.contains("directions") || !block["directions"].is_array()) {
    throw SceneError("/commands/finsler: needs points and directions arrays");
  }
  Report rep(scene, "finsler", opts.seed);
  const auto& pts = block["points"];
  const auto& dirs = block["directions"];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const ExtendedPoint x = parse_point(
        pts[i], scene.dimension, "/commands/finsler/points/" + std::to_string(i));
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      const ExtendedPoint h = parse_point(
          dirs[j], scene.dimension,
          "/commands/finsler/directions/" + std::to_string(j));
      if (h.is_infinite()) {
        throw SceneError("/commands/finsler/directions/" + std::to_string(j) +
                         ": must be finite");
      }
      const double v = finsler_norm(d, x, h.coords());
      rep.line("p(" + point_str(x) + "; " + point_str(h) + ") = " + num(v));
    }
  }
  out << rep.text();
  write_file(opts.out_dir, "finsler_report.txt", rep.text());
  return 0;
}

int run_contract_check(const Scene& scene, const Options& opts,
                       std::ostream& out) {
  const json& block = command_block(scene, "contract-check");
  const NestedPair& np =
      named(scene.nestings, get_string(block, "nesting", "/commands/contract-check"),
            "/commands/contract-check/nesting");
  const auto count = static_cast<std::size_t>(opts.samples.value_or(
      static_cast<int>(get_number_or(block, "samples", 1000))));
  const double frac = get_number_or(block, "near_center_fraction", 0.2);
  const auto contraction_samples = static_cast<std::size_t>(
      get_number_or(block, "contraction_samples", 200));
  const double tol = opts.tol.value_or(1e-9);

  const auto pairs = sample_nesting_pairs(np, count, opts.seed, frac);
  const ContractionReport ucp = verify_ucp(np, pairs, tol);

  // Derived contraction checks: Finsler, density, and path-length ratios on
  // deterministic samples.
  const double theta = birkhoff_coefficient(np.delta());
  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  const double rho = np.base_rho().value();
  const ConformalMap& base_map = *np.base_map();
  const Eigen::Index dim = np.inner().dimension();
  double finsler_max = 0.0;
  double density_max = 0.0;
  for (std::size_t i = 0; i < contraction_samples; ++i) {
    const ExtendedPoint x = base_map(ExtendedPoint(rng.in_ball(dim, 0.95 * rho)));
    const Vec h = rng.unit_vector(dim);
    const double pu = finsler_norm(np.inner(), x, h);
    const double pv = finsler_norm(np.outer(), x, h);
    if (pu > 1e-13) finsler_max = std::max(finsler_max, pv / pu);
    const double gu = conformal_density(np.inner(), x);
    const double gv = conformal_density(np.outer(), x);
    if (gu > 1e-13) density_max = std::max(density_max, gv / gu);
  }
  // A short polyline inside a safe Euclidean ball around a domain point.
  ExtendedPoint anchor = base_map(ExtendedPoint(Vec::Zero(dim)));
  if (anchor.is_infinite()) {
    Vec off = Vec::Zero(dim);
    off[0] = 0.3 * rho;
    anchor = base_map(ExtendedPoint(off));
  }
  const double safe = 0.5 * distance_to_complement(np.inner(), anchor);
  std::vector<Vec> verts;
  verts.push_back(anchor.coords());
  Vec e0 = Vec::Zero(dim);
  e0[0] = 1.0;
  verts.push_back(anchor.coords() + 0.6 * safe * e0);
  Vec e1 = Vec::Zero(dim);
  e1[dim - 1] = 1.0;
  verts.push_back(anchor.coords() + 0.4 * safe * e1);
  const PathPolyline path(verts);
  const double inner_u = inner_path_length(np.inner(), path);
  const double inner_v = inner_path_length(np.outer(), path);
  const double riem_u = riemann_path_length(np.inner(), path);
  const double riem_v = riemann_path_length(np.outer(), path);
  const double inner_ratio = inner_v / inner_u;
  const double riem_ratio = riem_v / riem_u;

  const bool contraction_pass = finsler_max <= theta + tol &&
                              density_max <= theta + tol &&
                              inner_ratio <= theta + tol &&
                              riem_ratio <= theta + tol;

  Report rep(scene, "contract-check", opts.seed);
  rep.line("delta " + num(np.delta()) + " provenance closed-form");
  rep.line("bound " + num(ucp.bound));
  rep.line("pairs " + std::to_string(ucp.pairs_evaluated) + " skipped " +
           std::to_string(ucp.pairs_skipped));
  rep.line("max ratio " + num(ucp.max_ratio));
  rep.line("margin " + num(ucp.margin));
  rep.line("finsler max ratio " + num(finsler_max));
  rep.line("density max ratio " + num(density_max));
  rep.line("inner path ratio " + num(inner_ratio));
  rep.line("riemann path ratio " + num(riem_ratio));
  const bool pass = ucp.pass && contraction_pass;
  rep.line(pass ? "result PASS" : "result FAIL");
  out << rep.text();
  write_file(opts.out_dir, "contract_check_report.txt", rep.text());
  return pass ? 0 : 1;
}

int run_birkhoff(const Scene& scene, const Options& opts, std::ostream& out) {
  const json& block = command_block(scene, "birkhoff");
  const double a1 = get_number(block, "a1", "/commands/birkhoff");
  const double a2 = get_number(block, "a2", "/commands/birkhoff");
  const int m = static_cast<int>(get_number_or(block, "grid", 401));
  const double tol = opts.tol.value_or(1e-6);
  const BirkhoffGridResult res = birkhoff_grid_check(a1, a2, m);
  Report rep(scene, "birkhoff", opts.seed);
  rep.line("K (" + num(a1) + ", " + num(a2) + ") grid " + std::to_string(m));
  rep.line("theta " + num(res.bound));
  rep.line("max ratio " + num(res.max_ratio));
  rep.line("argmax s " + num(res.argmax_s));
  rep.line("sqrt(a1 a2) " + num(std::sqrt(a1 * a2)));
  const bool pass = res.max_ratio <= res.bound + tol;
  rep.line(pass ? "result PASS" : "result FAIL");
  out << rep.text();
  write_file(opts.out_dir, "birkhoff_report.txt", rep.text());
  return pass ? 0 : 1;
}

int run_ifs(const Scene& scene, const Options& opts, std::ostream& out) {
  const json& block = command_block(scene, "ifs");
  const IfsSystem& sys =
      named(scene.systems, get_string(block, "system", "/commands/ifs"),
            "/commands/ifs/system");
  const int depth =
      opts.depth.value_or(static_cast<int>(get_number_or(block, "depth", 8)));
  const CylinderCover cover = limit_cover(sys, depth);

  std::string csv = "word,";
  for (Eigen::Index i = 0; i < scene.dimension; ++i) {
    csv += "c" + std::to_string(i) + ",";
  }
  csv += "radius,apollonian_diameter_bound\n";
  std::vector<Vec> centers;
  centers.reserve(cover.cells.size());
  for (const auto& cell : cover.cells) {
    csv += word_label(cell.word) + ",";
    for (Eigen::Index i = 0; i < scene.dimension; ++i) {
      csv += num(cell.center[i]) + ",";
    }
    csv += num(cell.radius) + "," + num(cover.certified_bound) + "\n";
    centers.push_back(cell.center);
  }

  std::vector<double> scales;
  if (block.contains("scales") && block["scales"].is_array()) {
    for (const auto& s : block["scales"]) scales.push_back(s.get<double>());
  } else {
    for (int j = 3; j <= 9; ++j) {
      scales.push_back(cover.outer_radius * std::pow(2.0, -j));
    }
  }
  const BoxCountResult bc = box_count(centers, scales);
  const double bound = dimension_bound(sys.generator_count(), sys.delta());

  Report rep(scene, "ifs", opts.seed);
  rep.line("generators " + std::to_string(sys.generator_count()) + " depth " +
           std::to_string(depth) + " cells " + std::to_string(cover.cells.size()));
  rep.line("delta " + num(sys.delta()));
  rep.line("certified diameter bound " + num(cover.certified_bound));
  rep.line("dimension bound " + num(bound));
  for (std::size_t i = 0; i < bc.scales.size(); ++i) {
    rep.line("boxes r " + num(bc.scales[i]) + " N " +
             std::to_string(bc.counts[i]));
  }
  rep.line("box-count slope " + num(bc.slope) + " residual " +
           num(bc.residual));
  rep.line(std::string("depth-1 images disjoint ") +
           (depth1_images_disjoint(sys) ? "yes" : "no"));
  const bool pass = bc.slope <= bound + 0.1;
  rep.line(pass ? "result PASS" : "result FAIL");
  out << rep.text();
  write_file(opts.out_dir, "ifs_report.txt", rep.text());
  write_file(opts.out_dir, "cover.csv", csv);
  return pass ? 0 : 1;
}

int run_render(const Scene& scene, const Options& opts, std::ostream& out) {
  if (scene.dimension != 2) {
    throw SceneError("/commands/render: rendering requires dimension 2");
  }
  const json& block = command_block(scene, "render");
  double xmin = -2.0, xmax = 2.0, ymin = -2.0, ymax = 2.0;
  if (block.contains("window")) {
    const json& w = block["window"];
    xmin = get_number(w, "xmin", "/commands/render/window");
    xmax = get_number(w, "xmax", "/commands/render/window");
    ymin = get_number(w, "ymin", "/commands/render/window");
    ymax = get_number(w, "ymax", "/commands/render/window");
  }
  SvgCanvas canvas(xmin, xmax, ymin, ymax);
  if (block.contains("domain")) {
    canvas.add_obstacles(named(scene.domains,
                               get_string(block, "domain", "/commands/render"),
                               "/commands/render/domain"));
  }
  if (block.contains("balls") && block["balls"].is_array()) {
    const auto& balls = block["balls"];
    for (std::size_t i = 0; i < balls.size(); ++i) {
      const std::string path = "/commands/render/balls/" + std::to_string(i);
      const ExtendedPoint a = parse_point(balls[i]["a"], 2, path + "/a");
      const ExtendedPoint b = parse_point(balls[i]["b"], 2, path + "/b");
      const double alpha = get_number(balls[i], "alpha", path);
      canvas.add_region(apollonian_ball(a, b, alpha), "#cc3333");
    }
  }
  if (block.contains("points") && block["points"].is_array()) {
    const auto& pts = block["points"];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const ExtendedPoint p = parse_point(
          pts[i], 2, "/commands/render/points/" + std::to_string(i));
      if (p.is_finite()) canvas.add_point(p.coords(), 2.0, "#3333cc");
    }
  }
  if (block.contains("system")) {
    const IfsSystem& sys =
        named(scene.systems, get_string(block, "system", "/commands/render"),
              "/commands/render/system");
    const int depth =
        opts.depth.value_or(static_cast<int>(get_number_or(block, "depth", 6)));
    const CylinderCover cover = limit_cover(sys, depth);
    for (const auto& cell : cover.cells) {
      canvas.add_circle(cell.center, cell.radius, "none", "#227722");
    }
  }
  const std::string svg = canvas.finish();
  Report rep(scene, "render", opts.seed);
  rep.line("wrote render.svg");
  out << rep.text();
  write_file(opts.out_dir, "render_report.txt", rep.text());
  write_file(opts.out_dir, "render.svg", svg);
  return 0;
}

}  // namespace

int run(const Options& opts, std::ostream& out) {
  try {
    const Scene scene = load_scene(opts.scene_path);
    if (opts.command == "dist") return run_dist(scene, opts, out);
    if (opts.command == "density") return run_density(scene, opts, out);
    if (opts.command == "finsler") return run_finsler(scene, opts, out);
    if (opts.command == "contract-check") {
      return run_contract_check(scene, opts, out);
    }
    if (opts.command == "birkhoff") return run_birkhoff(scene, opts, out);
    if (opts.command == "ifs") return run_ifs(scene, opts, out);
    if (opts.command == "render") return run_render(scene, opts, out);
    out << "error: unknown command '" << opts.command << "'\n";
    return 2;
  } catch (const SceneError& e) {
    out << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    out << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace apollon::cli
