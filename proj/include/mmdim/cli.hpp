// Copyright 2026 The mmdim Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmdim/json_io.hpp"
#include "mmdim/system.hpp"

namespace mmdim::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { csv, json };

// Resolved settings of one invocation. Everything except threads and the
// output path is echoed into the artifact.
struct RunConfig {
  std::string subcommand;
  std::string system;  // catalog id, "a*b" product of ids, inline JSON or a file
  std::vector<double> eps_list;
  std::vector<std::string> eps_text;  // as given, for the artifact
  std::vector<std::int64_t> window_sizes;
  std::optional<double> delta;  // default diameter / 4
  std::size_t centers = 32;
  std::uint64_t seed = 1;
  double grid_step = 1.0 / 512;
  double tail_fraction = 0.5;
  std::string fit = "tail_slope";
  double beta = 0.1;
  std::vector<std::int64_t> n_list;
  double tolerance = 1e-9;
  std::string input;  // tiling input file
  std::string overlap = "interior";
  std::size_t vitali_families = 50;
  bool growth = false;
  int threads = 1;
  std::string output;  // empty: MMDIM_OUTPUT_DIR/<subcommand>.<ext>, else stdout
  Format format = Format::csv;

  Json to_json() const;
};

// Catalog id, product "a*b", inline JSON object or path to a JSON file.
SystemSpec resolve_system(const std::string& text);

// "2^-3", "1/8", "0.125".
double parse_real(const std::string& text, const std::string& field);

// Parses args (without the program name), runs the subcommand and writes the
// artifact. Returns 0 on success, 2 on usage or precondition errors and 3
// when a checked property fails. Messages go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmdim::cli
