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

#include "mmdim/tiling/vitali.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mmdim/error.hpp"
#include "mmdim/tiling/slab_set.hpp"

namespace mmdim::tiling {

std::string to_string(OverlapRule r) { return r == OverlapRule::interior ? "interior" : "closed"; }

OverlapRule parse_overlap_rule(const std::string& s) {
  if (s == "interior") return OverlapRule::interior;
  if (s == "closed") return OverlapRule::closed;
  throw UsageError("overlap: unknown value '" + s + "' (interior or closed)");
}

bool cubes_overlap(const Cube& a, const Cube& b, OverlapRule rule) {
  return rule == OverlapRule::interior ? interiors_meet(a.box(), b.box())
                                       : boxes_meet(a.box(), b.box());
}

namespace {

using CellKey = std::vector<long>;

// Hash grid with cell size at least the largest side, so a cube touches at
// most 2^D cells.
class CubeGrid {
 public:
  CubeGrid(Rational cell, int dim) : cell_(std::move(cell)), dim_(dim) {}

  void insert(const Cube& c, std::size_t id) {
    for (const auto& k : keys(c)) cells_[k].push_back(id);
  }

  std::vector<std::size_t> near(const Cube& c) const {
    std::vector<std::size_t> out;
    for (const auto& k : keys(c)) {
      auto it = cells_.find(k);
      if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::vector<CellKey> keys(const Cube& c) const {
    std::vector<long> lo(static_cast<std::size_t>(dim_)), hi(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = floor_of(c.corner[i] / cell_).convert_to<long>();
      hi[i] = floor_of((c.corner[i] + c.side) / cell_).convert_to<long>();
    }
    std::vector<CellKey> out;
    CellKey k = lo;
    while (true) {
      out.push_back(k);
      std::size_t i = lo.size();
      while (i > 0) {
        --i;
        if (k[i] < hi[i]) {
          ++k[i];
          break;
        }
        k[i] = lo[i];
        if (i == 0) return out;
      }
    }
  }

  Rational cell_;
  int dim_;
  std::map<CellKey, std::vector<std::size_t>> cells_;
};

}  // namespace

bool pairwise_disjoint(const std::vector<Cube>& cubes, OverlapRule rule) {
  std::vector<std::size_t> order(cubes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cubes[a].corner[0] < cubes[b].corner[0];
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Cube& a = cubes[order[i]];
    const Rational end = a.corner[0] + a.side;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Cube& b = cubes[order[j]];
      if (b.corner[0] > end) break;
      if (cubes_overlap(a, b, rule)) return false;
    }
  }
  return true;
}

VitaliResult vitali_select(const CubeFamily& family, OverlapRule rule) {
  if (family.empty()) throw UsageError("vitali_select needs a nonempty family");
  const auto& cubes = family.cubes();
  const int d = family.dim();
  std::vector<std::size_t> order(cubes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cubes[a].side > cubes[b].side;
  });

  VitaliResult r;
  r.witness.assign(cubes.size(), 0);
  CubeGrid grid(family.ell_max(), d);
  for (std::size_t i : order) {
    std::optional<std::size_t> blocker;
    for (std::size_t j : grid.near(cubes[i]))
      if (cubes_overlap(cubes[i], cubes[j], rule)) {
        blocker = j;
        break;
      }
    if (blocker) {
      r.witness[i] = *blocker;
      continue;
    }
    r.witness[i] = i;
    r.selected.push_back(i);
    r.family.push_back(cubes[i]);
    grid.insert(cubes[i], i);
  }

  // Postconditions, checked directly on the sets.
  r.disjoint = pairwise_disjoint(r.family.cubes(), rule);
  std::vector<Box> tripled;
  for (const auto& c : r.family.cubes()) tripled.push_back(c.tripled().box());
  const SlabSet input = SlabSet::from_boxes(d, family.boxes());
  const SlabSet selected = SlabSet::from_boxes(d, r.family.boxes());
  r.covered = input.subtract(SlabSet::from_boxes(d, tripled)).empty();
  r.witnesses_ok = true;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const Cube& w = cubes[r.witness[i]];
    r.witnesses_ok = r.witnesses_ok && w.side >= cubes[i].side &&
                     boxes_meet(w.box(), cubes[i].box()) &&
                     box_contains(w.tripled().box(), cubes[i].box());
  }
  r.input_volume = input.volume();
  r.selected_volume = selected.volume();
  r.volume_bound = r.selected_volume * pow(Rational(3), d) >= r.input_volume;
  return r;
}

std::string VitaliResult::describe() const {
  return std::to_string(selected.size()) + " selected; disjoint=" + (disjoint ? "yes" : "NO") +
         " covered_by_3x=" + (covered ? "yes" : "NO") +
         " witnesses=" + (witnesses_ok ? "yes" : "NO") + " volume " +
         to_string(selected_volume) + " vs " + to_string(input_volume) +
         (volume_bound ? " (bound holds)" : " (bound FAILS)");
}

CubeFamily random_cube_family(int dim, std::size_t n, std::uint64_t seed) {
  if (dim < 1 || n == 0) throw UsageError("random_cube_family: need dim >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  CubeFamily out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> u(dim);
    for (auto& x : u) x = Rational(static_cast<long>(rng() % 32), 4);
    out.push_back(Cube(std::move(u), Rational(static_cast<long>(rng() % 8 + 1), 4)));
  }
  return out;
}

std::int64_t k_of_eta(const Rational& eta, int dim) {
  if (!(eta > 0)) throw UsageError("eta must be positive");
  if (dim < 1) throw UsageError("dimension must be positive");
  const Rational third = eta / 3;
  const Rational scale = third / pow(Rational(3), dim);
  for (std::int64_t k = 2;; ++k) {
    const Rational q(2, k);
    if (Rational(k) * scale > 1 && pow(1 + q, dim) - pow(1 - q, dim) < third) return k;
    if (k > (std::int64_t{1} << 40)) throw UsageError("k_of_eta: eta too small");
  }
}

}  // namespace mmdim::tiling
