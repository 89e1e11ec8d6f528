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

#include "mmdim/numeric.hpp"

namespace mmdim::tiling {

using mmdim::to_string;

// Closed axis-parallel box lo <= x <= hi.
struct Box {
  std::vector<Rational> lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool degenerate() const;  // zero volume
  Rational volume() const;
  std::string to_string() const;
  bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

// Closed boxes share a point.
bool boxes_meet(const Box& a, const Box& b);
// Interiors intersect.
bool interiors_meet(const Box& a, const Box& b);
bool box_contains(const Box& outer, const Box& inner);

// u + [0, L]^D.
struct Cube {
  std::vector<Rational> corner;
  Rational side;

  Cube() = default;
  Cube(std::vector<Rational> u, Rational l);

  int dim() const { return static_cast<int>(corner.size()); }
  // u + [-L, 2L]^D.
  Cube tripled() const;
  Rational volume() const;
  Box box() const;
  std::string to_string() const;
  bool operator==(const Cube& o) const { return corner == o.corner && side == o.side; }
};

class CubeFamily {
 public:
  CubeFamily() = default;
  explicit CubeFamily(std::vector<Cube> cubes);

  void push_back(Cube c);
  const std::vector<Cube>& cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }
  const Cube& operator[](std::size_t i) const { return cubes_[i]; }
  int dim() const { return cubes_.empty() ? 0 : cubes_.front().dim(); }
  // Zero for an empty family.
  const Rational& ell_max() const { return ell_max_; }
  const Rational& ell_min() const { return ell_min_; }
  std::vector<Box> boxes() const;

 private:
  void recompute();
  std::vector<Cube> cubes_;
  Rational ell_max_ = 0, ell_min_ = 0;
};

Rational pow(const Rational& q, int e);

// Largest integer <= q.
Count floor_of(const Rational& q);

}  // namespace mmdim::tiling
