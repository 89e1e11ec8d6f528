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

#include "mmdim/tiling/region.hpp"

#include "mmdim/error.hpp"

namespace mmdim::tiling {

std::string to_string(Region::Kind k) {
  return k == Region::Kind::box_union ? "box_union" : "raster";
}

Region::Region(int dim) : set_(dim) {}

Region Region::from_boxes(int dim, const std::vector<Box>& boxes) {
  return from_slabs(SlabSet::from_boxes(dim, boxes));
}

Region Region::from_box(const Box& b) { return from_boxes(b.dim(), {b}); }

Region Region::from_cubes(const CubeFamily& f) {
  if (f.empty()) throw UsageError("from_cubes: empty family has no dimension");
  return from_boxes(f.dim(), f.boxes());
}

Region Region::from_slabs(SlabSet s) {
  Region r(s.dim());
  r.set_ = std::move(s);
  return r;
}

Region Region::to_raster(const Rational& h, const std::vector<Rational>& anchor,
                         std::int64_t pad) const {
  if (!(h > 0)) throw UsageError("raster cell size must be positive");
  const SlabSet s = as_slabs();
  const auto bounds = s.bounds();
  const auto d = static_cast<std::size_t>(dim());
  std::vector<Rational> origin(d);
  std::vector<std::int64_t> extent(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Rational lo = bounds ? bounds->lo[i] : anchor[i];
    const Rational hi = bounds ? bounds->hi[i] : anchor[i];
    // Grid lines at anchor + h Z.
    const Count first = floor_of((lo - anchor[i]) / h) - pad;
    const Count last = -floor_of(-(hi - anchor[i]) / h) + pad;
    origin[i] = anchor[i] + h * Rational(first);
    extent[i] = static_cast<std::int64_t>((last - first).convert_to<long>());
  }
  Region r(dim());
  r.kind_ = Kind::raster;
  r.raster_ = Raster::rasterize(s, origin, h, extent);
  r.set_ = r.raster_.to_slab_set();
  if (!(r.set_ == s)) r.notes_.push_back("region is not aligned to the raster grid");
  return r;
}

bool Region::empty() const { return set_.empty(); }

Rational Region::volume() const {
  return kind_ == Kind::raster ? raster_.volume() : set_.volume();
}

SlabSet Region::as_slabs() const { return set_; }

bool Region::meets_closed(const Box& b) const { return set_.meets_closed(b); }

Region Region::with_raster(Raster r) const {
  Region out(dim());
  out.kind_ = Kind::raster;
  out.set_ = r.to_slab_set();
  out.raster_ = std::move(r);
  out.notes_ = notes_;
  return out;
}

Region Region::unite(const Region& o) const {
  if (kind_ == Kind::raster && o.kind_ == Kind::raster) return with_raster(raster_.unite(o.raster_));
  return from_slabs(set_.unite(o.set_));
}

Region Region::intersect(const Region& o) const {
  if (kind_ == Kind::raster && o.kind_ == Kind::raster)
    return with_raster(raster_.intersect(o.raster_));
  return from_slabs(set_.intersect(o.set_));
}

Region Region::subtract(const Region& o) const {
  if (kind_ == Kind::raster && o.kind_ == Kind::raster)
    return with_raster(raster_.subtract(o.raster_));
  return from_slabs(set_.subtract(o.set_));
}

std::int64_t Region::cells_for(const Rational& r, Region* note_to) const {
  const Rational k = r / raster_.cell();
  Count c = -floor_of(-k);
  if (Rational(c) != k)
    note_to->notes_.push_back("radius " + to_string(r) + " rounded up to " + to_string(c) +
                              " cells");
  return c.convert_to<long>();
}

namespace {

// A box around S with margin m on every side.
SlabSet frame(const SlabSet& s, const Rational& m) {
  auto b = s.bounds();
  if (!b) return SlabSet(s.dim());
  for (auto& x : b->lo) x -= m;
  for (auto& x : b->hi) x += m;
  return SlabSet::from_box(*b);
}

}  // namespace

Region b_r(const Region& omega, const Rational& r) {
  if (r < 0) throw UsageError("radius must be nonnegative");
  if (omega.kind_ == Region::Kind::raster) {
    Region out = omega;
    const std::int64_t k = omega.cells_for(r, &out);
    return out.with_raster(omega.raster_.dilate(k));
  }
  return Region::from_slabs(omega.set_.dilate(r));
}

Region r_interior(const Region& omega, const Rational& r) {
  if (!(r > 0)) throw UsageError("radius must be positive");
  if (omega.kind_ == Region::Kind::raster) {
    Region out = omega;
    const std::int64_t k = omega.cells_for(r, &out);
    return out.with_raster(omega.raster_.erode(k));
  }
  const SlabSet outside = frame(omega.set_, 2 * r + 1).subtract(omega.set_);
  return Region::from_slabs(omega.set_.subtract(outside.dilate(r)));
}

Region r_boundary(const Region& omega, const Rational& r) {
  if (!(r > 0)) throw UsageError("radius must be positive");
  if (omega.kind_ == Region::Kind::raster) {
    Region out = omega;
    const std::int64_t k = omega.cells_for(r, &out);
    const Raster inside = omega.raster_.dilate(k);
    const Raster outside = omega.raster_.complement().dilate(k);
    return out.with_raster(inside.intersect(outside));
  }
  // The frame margin exceeds 2r, so the outer edge of the frame stays away
  // from B_r(Omega).
  const SlabSet outside = frame(omega.set_, 2 * r + 1).subtract(omega.set_);
  return Region::from_slabs(omega.set_.dilate(r).intersect(outside.dilate(r)));
}

}  // namespace mmdim::tiling
