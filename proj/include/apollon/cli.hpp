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

#ifndef APOLLON_CLI_HPP
#define APOLLON_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace apollon::cli {

struct Options {
  std::string command;
  std::string scene_path;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  std::optional<int> samples;
  std::optional<int> depth;
  std::optional<double> tol;
};

/// Runs one subcommand against a scene file.  Reports are echoed to `out`
/// and written under out_dir.  Returns 0 on pass, 1 on assertion failure,
/// 2 on input error.  Deterministic for a fixed seed and scene.
int run(const Options& opts, std::ostream& out);

}  // namespace apollon::cli

#endif  // APOLLON_CLI_HPP
