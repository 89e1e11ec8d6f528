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

#include "mmdim/tiling/raster.hpp"

#include <algorithm>

#include "mmdim/error.hpp"

namespace mmdim::tiling {

Raster::Raster(std::vector<Rational> origin, Rational h, std::vector<std::int64_t> extent)
    : origin_(std::move(origin)), h_(std::move(h)), extent_(std::move(extent)) {
  if (!(h_ > 0)) throw UsageError("raster cell size must be positive");
  if (origin_.size() != extent_.size()) throw UsageError("raster origin/extent mismatch");
  std::size_t n = 1;
  for (auto e : extent_) {
    if (e < 1) throw UsageError("raster extent must be positive");
    n *= static_cast<std::size_t>(e);
  }
  if (n > (std::size_t{1} << 26)) throw UnsupportedInstance("raster too large");
  cells_.assign(n, 0);
}

Raster Raster::rasterize(const SlabSet& s, std::vector<Rational> origin, Rational h,
                         std::vector<std::int64_t> extent) {
  Raster r(std::move(origin), std::move(h), std::move(extent));
  if (s.dim() != r.dim()) throw UsageError("raster dimension mismatch");
  const auto d = static_cast<std::size_t>(r.dim());
  std::vector<std::int64_t> idx(d, 0);
  for (std::size_t c = 0; c < r.cells_.size(); ++c) {
    // Row-major: last axis fastest.
    std::size_t rem = c;
    for (std::size_t i = d; i-- > 0;) {
      idx[i] = static_cast<std::int64_t>(rem % static_cast<std::size_t>(r.extent_[i]));
      rem /= static_cast<std::size_t>(r.extent_[i]);
    }
    Box centre;
    for (std::size_t i = 0; i < d; ++i) {
      Rational x = r.origin_[i] + r.h_ * (Rational(idx[i]) + Rational(1, 2));
      centre.lo.push_back(x);
      centre.hi.push_back(x);
    }
    r.cells_[c] = s.meets_closed(centre) ? 1 : 0;
  }
  return r;
}

std::size_t Raster::count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

Rational Raster::volume() const {
  return Rational(static_cast<long>(count())) * pow(h_, dim());
}

template <typename Op>
Raster Raster::zip(const Raster& o, Op op) const {
  if (origin_ != o.origin_ || h_ != o.h_ || extent_ != o.extent_)
    throw UsageError("raster operations need identical grids");
  Raster r = *this;
  for (std::size_t i = 0; i < cells_.size(); ++i) r.cells_[i] = op(cells_[i], o.cells_[i]) ? 1 : 0;
  return r;
}

Raster Raster::unite(const Raster& o) const {
  return zip(o, [](bool a, bool b) { return a || b; });
}
Raster Raster::intersect(const Raster& o) const {
  return zip(o, [](bool a, bool b) { return a && b; });
}
Raster Raster::subtract(const Raster& o) const {
  return zip(o, [](bool a, bool b) { return a && !b; });
}

Raster Raster::complement() const {
  Raster r = *this;
  for (auto& c : r.cells_) c = c ? 0 : 1;
  return r;
}

Raster Raster::dilate(std::int64_t k) const {
  if (k < 0) throw UsageError("dilation must be nonnegative");
  Raster cur = *this;
  // The sup-norm ball is a product, so filter one axis at a time.
  std::size_t stride = 1;
  for (std::size_t axis = extent_.size(); axis-- > 0;) {
    const auto len = static_cast<std::int64_t>(extent_[axis]);
    Raster next = cur;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const auto pos = static_cast<std::int64_t>((c / stride) % static_cast<std::size_t>(len));
      std::uint8_t v = 0;
      for (std::int64_t t = std::max<std::int64_t>(0, pos - k);
           t <= std::min(len - 1, pos + k) && !v; ++t)
        v = cur.cells_[c + static_cast<std::size_t>(t - pos) * stride];
      next.cells_[c] = v;
    }
    cur = std::move(next);
    stride *= static_cast<std::size_t>(len);
  }
  return cur;
}

Raster Raster::erode(std::int64_t k) const { return complement().dilate(k).complement(); }

SlabSet Raster::to_slab_set() const {
  const auto d = static_cast<std::size_t>(dim());
  std::vector<Box> boxes;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (!cells_[c]) continue;
    std::size_t rem = c;
    Box b;
    b.lo.resize(d);
    b.hi.resize(d);
    for (std::size_t i = d; i-- > 0;) {
      const auto idx = static_cast<long>(rem % static_cast<std::size_t>(extent_[i]));
      rem /= static_cast<std::size_t>(extent_[i]);
      b.lo[i] = origin_[i] + h_ * idx;
      b.hi[i] = b.lo[i] + h_;
    }
    boxes.push_back(std::move(b));
  }
  return SlabSet::from_boxes(dim(), boxes);
}

bool Raster::operator==(const Raster& o) const {
  return origin_ == o.origin_ && h_ == o.h_ && extent_ == o.extent_ && cells_ == o.cells_;
}

}  // namespace mmdim::tiling
