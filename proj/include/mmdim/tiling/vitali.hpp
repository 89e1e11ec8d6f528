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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmdim/numeric.hpp"
#include "mmdim/tiling/cube.hpp"

namespace mmdim::tiling {

// When two cubes count as overlapping. Regions are taken up to measure zero,
// so by default cubes sharing only a face are disjoint; `closed` also rejects
// touching cubes, as with the literal closed cubes.
enum class OverlapRule { interior, closed };
std::string to_string(OverlapRule r);
OverlapRule parse_overlap_rule(const std::string& s);

bool cubes_overlap(const Cube& a, const Cube& b, OverlapRule rule);

struct VitaliResult {
  std::vector<std::size_t> selected;  // input indices, in selection order
  CubeFamily family;                  // the selected cubes
  // For each input cube: a selected cube at least as large that it meets, so
  // the input cube lies in its tripled cube.
  std::vector<std::size_t> witness;
  Rational selected_volume = 0;
  Rational input_volume = 0;
  bool disjoint = false;
  bool covered = false;        // union of inputs inside union of tripled selected
  bool witnesses_ok = false;
  bool volume_bound = false;   // 3^D vol(selected) >= vol(input)
  bool all_hold() const { return disjoint && covered && witnesses_ok && volume_bound; }
  std::string describe() const;
};

// Greedy selection by decreasing side (ties: lowest input index), discarding
// cubes that overlap a selected one. All postconditions are verified exactly.
VitaliResult vitali_select(const CubeFamily& family,
                           OverlapRule rule = OverlapRule::interior);

// Pairwise disjointness by a sweep along the first axis.
bool pairwise_disjoint(const std::vector<Cube>& cubes, OverlapRule rule);

// n random cubes in [0, 8)^D with corners on the 1/4 grid and sides in
// {1/4, 1/2, ..., 2}; depends only on the seed.
CubeFamily random_cube_family(int dim, std::size_t n, std::uint64_t seed);

// Smallest integer K >= 2 with K 3^-D eta/3 > 1 and
// (1 + 2/K)^D - (1 - 2/K)^D < eta/3 (the relative volume of the r-boundary of
// a cube of side K r).
std::int64_t k_of_eta(const Rational& eta, int dim);

}  // namespace mmdim::tiling
