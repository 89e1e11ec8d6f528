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
#include <string>
#include <vector>

namespace mmdim {

// A vector of the acting lattice Z^D.
using Site = std::vector<std::int64_t>;

std::int64_t sup_norm(const Site& a);
Site operator+(const Site& a, const Site& b);
Site operator-(const Site& a, const Site& b);
Site operator-(const Site& a);
std::string to_string(const Site& a);

// A finite, nonempty subset of Z^D over which orbit metrics take their sup.
// Box windows are inclusive integer boxes lo <= n <= hi. Sites are kept
// sorted and unique for both kinds.
class Window {
 public:
  enum class Kind { box, explicit_set };

  static Window box(Site lo, Site hi);
  static Window interval(std::int64_t first, std::int64_t last);
  // {0, ..., side-1}^D: the lattice cells of [0, side]^D, so |window| = side^D.
  static Window cube(std::int64_t side, int dim);
  // [-radius, radius]^D.
  static Window centered(std::int64_t radius, int dim);
  static Window from_sites(std::vector<Site> sites);

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(lo_.size()); }
  // Bounding box; equals the window for box windows.
  const Site& lo() const { return lo_; }
  const Site& hi() const { return hi_; }
  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }

  bool contains(const Site& n) const;
  // sup-norm distance from n to the nearest site of the window.
  std::int64_t distance(const Site& n) const;
  Window translated(const Site& a) const;
  // Sites within sup-distance r of the window; empty when r < 0.
  std::vector<Site> dilated_sites(std::int64_t r) const;
  Window dilated(std::int64_t r) const;
  bool is_subset_of(const Window& other) const;

  std::string to_string() const;
  bool operator==(const Window& other) const;

 private:
  Window() = default;
  void finish_explicit();

  Kind kind_ = Kind::box;
  Site lo_, hi_;
  std::vector<Site> sites_;
};

// All lattice points of the inclusive box [lo, hi], in row-major order.
std::vector<Site> box_sites(const Site& lo, const Site& hi);

// Sorted union of site lists.
std::vector<Site> site_union(std::vector<Site> a, const std::vector<Site>& b);

// Sites of `a` that are not in `b` (both sorted).
std::vector<Site> site_difference(const std::vector<Site>& a,
                                  const std::vector<Site>& b);

}  // namespace mmdim
