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
#include <vector>

#include "mmdim/numeric.hpp"
#include "mmdim/tiling/cube.hpp"
#include "mmdim/tiling/slab_set.hpp"

namespace mmdim::tiling {

// Occupancy grid of cells origin + h*(i + [0,1]^D), 0 <= i < extent. Cells
// outside the grid count as empty.
class Raster {
 public:
  Raster() = default;
  Raster(std::vector<Rational> origin, Rational h, std::vector<std::int64_t> extent);

  // A cell is set when its center lies in the set; exact for sets whose
  // boxes have corners on the grid.
  static Raster rasterize(const SlabSet& s, std::vector<Rational> origin, Rational h,
                          std::vector<std::int64_t> extent);

  int dim() const { return static_cast<int>(extent_.size()); }
  const Rational& cell() const { return h_; }
  const std::vector<Rational>& origin() const { return origin_; }
  const std::vector<std::int64_t>& extent() const { return extent_; }
  std::size_t count() const;
  Rational volume() const;

  Raster unite(const Raster& o) const;
  Raster intersect(const Raster& o) const;
  Raster subtract(const Raster& o) const;
  Raster complement() const;  // within the grid
  // Sup-norm dilation / erosion by k cells.
  Raster dilate(std::int64_t k) const;
  Raster erode(std::int64_t k) const;

  SlabSet to_slab_set() const;
  bool operator==(const Raster& o) const;

 private:
  template <typename Op>
  Raster zip(const Raster& o, Op op) const;
  std::vector<Rational> origin_;
  Rational h_ = 1;
  std::vector<std::int64_t> extent_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace mmdim::tiling
