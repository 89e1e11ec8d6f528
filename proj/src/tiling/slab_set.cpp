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

#include "mmdim/tiling/slab_set.hpp"

#include <algorithm>

#include "mmdim/error.hpp"

namespace mmdim::tiling {
namespace {

Box tail_of(const Box& b) {
  return Box{std::vector<Rational>(b.lo.begin() + 1, b.lo.end()),
             std::vector<Rational>(b.hi.begin() + 1, b.hi.end())};
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SlabSet::SlabSet(int dim) : dim_(dim) {
  if (dim < 0) throw UsageError("SlabSet dimension must be nonnegative");
}

SlabSet SlabSet::full_point() {
  SlabSet s(0);
  s.full_ = true;
  return s;
}

SlabSet SlabSet::from_box(const Box& b) { return from_boxes(b.dim(), {b}); }

SlabSet SlabSet::from_boxes(int dim, const std::vector<Box>& boxes) {
  if (dim == 0) {
    SlabSet s(0);
    s.full_ = !boxes.empty();
    return s;
  }
  std::vector<const Box*> live;
  for (const auto& b : boxes) {
    if (b.dim() != dim) throw UsageError("box dimension does not match region dimension");
    if (!b.degenerate()) live.push_back(&b);
  }
  SlabSet out(dim);
  if (live.empty()) return out;
  std::sort(live.begin(), live.end(),
            [](const Box* a, const Box* b) { return a->lo[0] < b->lo[0]; });

  if (dim == 1) {
    // Merge sorted closed intervals.
    for (const Box* b : live) {
      if (!out.slabs_.empty() && b->lo[0] <= out.slabs_.back().hi) {
        if (b->hi[0] > out.slabs_.back().hi) out.slabs_.back().hi = b->hi[0];
      } else {
        out.slabs_.push_back(Slab{b->lo[0], b->hi[0], full_point()});
      }
    }
    return out;
  }

  std::vector<Rational> cuts;
  for (const Box* b : live) {
    cuts.push_back(b->lo[0]);
    cuts.push_back(b->hi[0]);
  }
  cuts = sorted_unique(std::move(cuts));
  std::vector<const Box*> active;
  std::size_t next = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& p = cuts[i];
    while (next < live.size() && live[next]->lo[0] <= p) active.push_back(live[next++]);
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](const Box* b) { return b->hi[0] <= p; }),
                 active.end());
    if (active.empty()) continue;
    std::vector<Box> section;
    section.reserve(active.size());
    for (const Box* b : active) section.push_back(tail_of(*b));
    SlabSet child = from_boxes(dim - 1, section);
    if (!child.empty()) out.slabs_.push_back(Slab{p, cuts[i + 1], std::move(child)});
  }
  out.normalize();
  return out;
}

bool SlabSet::empty() const { return dim_ == 0 ? !full_ : slabs_.empty(); }

Rational SlabSet::volume() const {
  if (dim_ == 0) return full_ ? 1 : 0;
  Rational v = 0;
  for (const auto& s : slabs_) v += (s.hi - s.lo) * s.child.volume();
  return v;
}

std::optional<Box> SlabSet::bounds() const {
  if (empty()) return std::nullopt;
  if (dim_ == 0) return Box{};
  Box b;
  std::optional<Box> inner;
  for (const auto& s : slabs_) {
    auto c = s.child.bounds();
    if (!inner) {
      inner = c;
      continue;
    }
    for (std::size_t i = 0; i < c->lo.size(); ++i) {
      if (c->lo[i] < inner->lo[i]) inner->lo[i] = c->lo[i];
      if (c->hi[i] > inner->hi[i]) inner->hi[i] = c->hi[i];
    }
  }
  b.lo.push_back(slabs_.front().lo);
  b.hi.push_back(slabs_.back().hi);
  b.lo.insert(b.lo.end(), inner->lo.begin(), inner->lo.end());
  b.hi.insert(b.hi.end(), inner->hi.begin(), inner->hi.end());
  return b;
}

template <typename Op>
SlabSet SlabSet::combine(const SlabSet& a, const SlabSet& b, Op op) {
  if (a.dim_ != b.dim_) throw UsageError("region dimensions differ");
  SlabSet out(a.dim_);
  if (a.dim_ == 0) {
    out.full_ = op(a.full_, b.full_);
    return out;
  }
  std::vector<Rational> cuts;
  for (const auto& s : a.slabs_) { cuts.push_back(s.lo); cuts.push_back(s.hi); }
  for (const auto& s : b.slabs_) { cuts.push_back(s.lo); cuts.push_back(s.hi); }
  cuts = sorted_unique(std::move(cuts));
  const SlabSet none(a.dim_ - 1);
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& p = cuts[i];
    while (ia < a.slabs_.size() && a.slabs_[ia].hi <= p) ++ia;
    while (ib < b.slabs_.size() && b.slabs_[ib].hi <= p) ++ib;
    const bool in_a = ia < a.slabs_.size() && a.slabs_[ia].lo <= p;
    const bool in_b = ib < b.slabs_.size() && b.slabs_[ib].lo <= p;
    if (!in_a && !in_b) continue;
    SlabSet child = combine(in_a ? a.slabs_[ia].child : none,
                            in_b ? b.slabs_[ib].child : none, op);
    if (!child.empty()) out.slabs_.push_back(Slab{p, cuts[i + 1], std::move(child)});
  }
  out.normalize();
  return out;
}

void SlabSet::normalize() {
  std::vector<Slab> merged;
  for (auto& s : slabs_) {
    if (s.child.empty() || !(s.lo < s.hi)) continue;
    if (!merged.empty() && merged.back().hi == s.lo && merged.back().child == s.child) {
      merged.back().hi = s.hi;
    } else {
      merged.push_back(std::move(s));
    }
  }
  slabs_ = std::move(merged);
}

SlabSet SlabSet::unite(const SlabSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}

SlabSet SlabSet::intersect(const SlabSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}

SlabSet SlabSet::subtract(const SlabSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

SlabSet SlabSet::dilate(const Rational& r) const {
  if (r < 0) throw UsageError("dilation radius must be nonnegative");
  if (dim_ == 0) return *this;
  std::vector<Box> grown = boxes();
  for (auto& b : grown)
    for (int i = 0; i < dim_; ++i) {
      b.lo[static_cast<std::size_t>(i)] -= r;
      b.hi[static_cast<std::size_t>(i)] += r;
    }
  return from_boxes(dim_, grown);
}

bool SlabSet::meets_closed(const Box& b) const {
  if (dim_ == 0) return full_;
  const Box rest = tail_of(b);
  // Slabs are sorted and disjoint; skip those ending before the box.
  auto it = std::lower_bound(slabs_.begin(), slabs_.end(), b.lo[0],
                             [](const Slab& s, const Rational& x) { return s.hi < x; });
  for (; it != slabs_.end() && it->lo <= b.hi[0]; ++it)
    if (it->child.meets_closed(rest)) return true;
  return false;
}

std::vector<Box> SlabSet::boxes() const {
  if (dim_ == 0) return full_ ? std::vector<Box>{Box{}} : std::vector<Box>{};
  std::vector<Box> out;
  for (const auto& s : slabs_)
    for (const Box& c : s.child.boxes()) {
      Box b;
      b.lo.push_back(s.lo);
      b.hi.push_back(s.hi);
      b.lo.insert(b.lo.end(), c.lo.begin(), c.lo.end());
      b.hi.insert(b.hi.end(), c.hi.begin(), c.hi.end());
      out.push_back(std::move(b));
    }
  return out;
}

std::size_t SlabSet::slab_count() const {
  std::size_t n = slabs_.size();
  for (const auto& s : slabs_) n += s.child.slab_count();
  return n;
}

bool SlabSet::operator==(const SlabSet& o) const {
  if (dim_ != o.dim_ || full_ != o.full_ || slabs_.size() != o.slabs_.size()) return false;
  for (std::size_t i = 0; i < slabs_.size(); ++i) {
    const Slab& a = slabs_[i];
    const Slab& b = o.slabs_[i];
    if (a.lo != b.lo || a.hi != b.hi || a.child != b.child) return false;
  }
  return true;
}

}  // namespace mmdim::tiling
