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
#include "mmdim/tiling/cube.hpp"
#include "mmdim/tiling/raster.hpp"
#include "mmdim/tiling/slab_set.hpp"

namespace mmdim::tiling {

// A bounded region of R^D, up to sets of measure zero. box_union regions are
// exact in every dimension; raster regions live on a fixed grid and are exact
// only for grid-aligned sets and radii (otherwise radii are rounded up to
// whole cells and a note is recorded).
class Region {
 public:
  enum class Kind { box_union, raster };

  explicit Region(int dim = 1);
  static Region from_boxes(int dim, const std::vector<Box>& boxes);
  static Region from_box(const Box& b);
  static Region from_cubes(const CubeFamily& f);
  static Region from_slabs(SlabSet s);
  // Rasterized copy on the grid of cell h anchored at `anchor`, padded by
  // `pad` cells beyond the bounding box.
  Region to_raster(const Rational& h, const std::vector<Rational>& anchor,
                   std::int64_t pad) const;

  Kind kind() const { return kind_; }
  int dim() const { return set_.dim(); }
  bool empty() const;
  Rational volume() const;

  Region unite(const Region& o) const;
  Region intersect(const Region& o) const;
  Region subtract(const Region& o) const;
  bool contains(const Region& o) const { return o.subtract(*this).empty(); }
  bool meets_closed(const Box& b) const;

  // Exact set view (rasters are converted cell by cell).
  SlabSet as_slabs() const;
  const Raster& raster() const { return raster_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::vector<Box> boxes() const { return as_slabs().boxes(); }
  bool operator==(const Region& o) const { return as_slabs() == o.as_slabs(); }

  friend Region b_r(const Region& omega, const Rational& r);
  friend Region r_interior(const Region& omega, const Rational& r);
  friend Region r_boundary(const Region& omega, const Rational& r);

 private:
  std::int64_t cells_for(const Rational& r, Region* note_to) const;
  Region with_raster(Raster r) const;

  Kind kind_ = Kind::box_union;
  SlabSet set_;
  Raster raster_;
  std::vector<std::string> notes_;
};

std::string to_string(Region::Kind k);

// B_r(Omega) = {x : exists y in Omega, |x - y| <= r}.
Region b_r(const Region& omega, const Rational& r);
// int(Omega, r) = {x in Omega : x + [-r, r]^D in Omega}.
Region r_interior(const Region& omega, const Rational& r);
// Points within r of both Omega and its complement.
Region r_boundary(const Region& omega, const Rational& r);

}  // namespace mmdim::tiling
