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

#include <iostream>

#include <CLI11.hpp>

#include "apollon/cli.hpp"
#include "apollon/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Apollonian metric geometry toolkit"};
  app.set_version_flag("--version", std::string("apollon ") + apollon::kVersion);
  app.require_subcommand(1);

  apollon::cli::Options opts;
  int samples = -1;
  int depth = -1;
  double tol = -1.0;

  const std::vector<std::string> commands = {
      "dist", "density", "finsler", "contract-check", "birkhoff", "ifs",
      "render"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--scene", opts.scene_path, "scene JSON file")->required();
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--seed", opts.seed, "random seed");
    sub->add_option("--samples", samples, "sample count override");
    sub->add_option("--depth", depth, "depth override");
    sub->add_option("--tol", tol, "tolerance override");
    sub->callback([&opts, name]() { opts.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  if (samples >= 0) opts.samples = samples;
  if (depth >= 0) opts.depth = depth;
  if (tol >= 0.0) opts.tol = tol;

  return apollon::cli::run(opts, std::cout);
}
