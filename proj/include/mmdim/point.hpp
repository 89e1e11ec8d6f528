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

#include <string>
#include <vector>

#include "mmdim/lattice.hpp"
#include "mmdim/system.hpp"

namespace mmdim {

// A configuration x in X stored on a finite box of lattice sites and extended
// by a constant value outside it. Each site carries spec.channels() numbers:
// one symbol (stored as an integral double) or m coordinates in [0,1].
// Product points keep one component per factor and no values of their own.
struct Point {
  std::string system_id;
  Site lo, hi;                  // inclusive box
  std::vector<double> values;   // row-major over the box, channel fastest
  std::vector<double> tail;     // value at every site outside the box
  std::vector<Point> components;

  // Constant configuration with the given per-site value.
  static Point constant(const SystemSpec& s, std::vector<double> value);
  static Point constant(const SystemSpec& s, double value = 0.0);
  static Point make(const SystemSpec& s, Site lo, Site hi,
                    std::vector<double> values, std::vector<double> tail);
  static Point product(const SystemSpec& s, std::vector<Point> components);

  int dim() const { return static_cast<int>(lo.size()); }
  int channels() const { return static_cast<int>(tail.size()); }
  bool in_box(const Site& n) const;
  // Value of channel c at site n, using the tail outside the box.
  double at(const Site& n, int c = 0) const;
  std::string to_string() const;
};

// Throws UsageError when x is not a point of s (wrong id, dimension, values
// outside the alphabet or cube, or a forbidden transition).
void check_point(const SystemSpec& s, const Point& x);

// True iff the two configurations agree at every site after extension.
bool equal_under_extension(const Point& x, const Point& y);

// Smallest sup norm of a site outside the box [lo, hi].
std::int64_t outside_distance(const Site& lo, const Site& hi);

// Box containing both boxes.
void hull(const Site& alo, const Site& ahi, const Site& blo, const Site& bhi,
          Site* lo, Site* hi);

}  // namespace mmdim
