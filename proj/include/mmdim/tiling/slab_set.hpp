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

#include <optional>
#include <vector>

#include "mmdim/numeric.hpp"
#include "mmdim/tiling/cube.hpp"

namespace mmdim::tiling {

struct Slab;

// A finite union of closed boxes in R^D, identified up to sets of measure
// zero (the closure of its interior). Stored as slabs along the first axis,
// each carrying the (D-1)-dimensional cross-section; dimension 0 is a flag
// (full or empty). Adjacent slabs with equal cross-sections are merged, so
// the representation is canonical and == is set equality.
class SlabSet {
 public:
  explicit SlabSet(int dim = 1);
  static SlabSet full_point();  // dimension 0, nonempty
  static SlabSet from_box(const Box& b);
  static SlabSet from_boxes(int dim, const std::vector<Box>& boxes);

  int dim() const { return dim_; }
  bool empty() const;
  Rational volume() const;
  std::optional<Box> bounds() const;

  SlabSet unite(const SlabSet& o) const;
  SlabSet intersect(const SlabSet& o) const;
  SlabSet subtract(const SlabSet& o) const;
  // Sup-norm dilation {x : dist(x, S) <= r}.
  SlabSet dilate(const Rational& r) const;

  // Some point of the closed box lies in the (closed) set.
  bool meets_closed(const Box& b) const;
  bool contains(const SlabSet& o) const { return o.subtract(*this).empty(); }
  // Boxes with pairwise disjoint interiors whose union is the set.
  std::vector<Box> boxes() const;
  std::size_t slab_count() const;

  const std::vector<Slab>& slabs() const { return slabs_; }
  bool operator==(const SlabSet& o) const;
  bool operator!=(const SlabSet& o) const { return !(*this == o); }

 private:
  template <typename Op>
  static SlabSet combine(const SlabSet& a, const SlabSet& b, Op op);
  static SlabSet union_of(int dim, std::vector<Slab> items);
  void normalize();

  int dim_;
  bool full_ = false;  // dimension 0 only
  std::vector<Slab> slabs_;
};

struct Slab {
  Rational lo, hi;
  SlabSet child;
};

}  // namespace mmdim::tiling
