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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmdim/lattice.hpp"
#include "mmdim/point.hpp"
#include "mmdim/system.hpp"

namespace mmdim {

// Closed range of allowed values for one channel at one site. For symbolic
// systems lo and hi are symbols.
struct ChannelRange {
  double lo = 0.0;
  double hi = 1.0;
  bool operator==(const ChannelRange& o) const { return lo == o.lo && hi == o.hi; }
};

// {x in X : x_n in pins[n] for every pinned site n}. Product systems keep one
// cylinder per factor (an empty factor list means no constraint).
struct Cylinder {
  std::map<Site, std::vector<ChannelRange>> pins;
  std::vector<Cylinder> factors;

  bool operator==(const Cylinder& o) const {
    return pins == o.pins && factors == o.factors;
  }
};

// A subset K of X that the covering routines can count or enumerate.
struct PointSet {
  enum class Kind { whole_space, explicit_cloud, cylinder_enumeration };

  SystemSpec system;
  Kind kind = Kind::whole_space;
  std::vector<Point> points;  // explicit_cloud
  Cylinder cylinder;          // cylinder_enumeration
  // Interval coordinates restricted to multiples of grid_step when > 0.
  double grid_step = 0.0;
  // Box over which cylinder patterns are enumerated (default: chosen by the
  // caller from the metric window).
  std::optional<Window> enumeration;

  static PointSet whole(const SystemSpec& s);
  static PointSet cloud(const SystemSpec& s, std::vector<Point> points);
  static PointSet cylinder_set(const SystemSpec& s, Cylinder c);

  PointSet with_grid(double h) const;
  PointSet with_enumeration(const Window& box) const;

  // T^t K.
  PointSet shifted(const Site& t) const;
  // Pins of the cylinder (empty for whole_space); throws for clouds.
  const Cylinder& constraints() const;
  bool contains(const Point& x) const;
  std::string describe() const;
};

std::string to_string(PointSet::Kind k);

// Allowed range for channel c at site n of a cylinder over system s.
ChannelRange allowed_range(const SystemSpec& s, const Cylinder& c, const Site& n,
                           int ch);

// All points of K whose configuration is supported on `box` (constant tail
// outside). Symbolic: every admissible pattern; interval: every grid point.
// Throws UnsupportedInstance if more than `cap` points would be produced.
// Points come in a fixed lexicographic order.
std::vector<Point> enumerate_points(const PointSet& k, const Window& box,
                                    std::size_t cap = std::size_t{1} << 22);

// Tail value used for enumerated symbolic points (smallest symbol with a
// self-loop).
int enumeration_tail_symbol(const SystemSpec& s);

}  // namespace mmdim
