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

#include "mmdim/tiling/cube.hpp"

#include <algorithm>

#include "mmdim/error.hpp"

namespace mmdim::tiling {

bool Box::degenerate() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) return true;
  return false;
}

Rational Box::volume() const {
  Rational v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i])) return 0;
    v *= hi[i] - lo[i];
  }
  return v;
}

std::string Box::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lo.size(); ++i)
    s += (i ? "x" : "") + std::string("[") + mmdim::to_string(lo[i]) + "," +
         mmdim::to_string(hi[i]) + "]";
  return s;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.lo.size(); ++i)
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  return true;
}

bool interiors_meet(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.lo.size(); ++i)
    if (!(a.lo[i] < b.hi[i] && b.lo[i] < a.hi[i])) return false;
  return true;
}

bool box_contains(const Box& outer, const Box& inner) {
  for (std::size_t i = 0; i < outer.lo.size(); ++i)
    if (inner.lo[i] < outer.lo[i] || outer.hi[i] < inner.hi[i]) return false;
  return true;
}

Cube::Cube(std::vector<Rational> u, Rational l) : corner(std::move(u)), side(std::move(l)) {
  if (!(side > 0)) throw UsageError("cube side must be positive, got " + mmdim::to_string(side));
  if (corner.empty()) throw UsageError("cube corner must have at least one coordinate");
}

Cube Cube::tripled() const {
  std::vector<Rational> u = corner;
  for (auto& x : u) x -= side;
  return Cube(std::move(u), side * 3);
}

Rational Cube::volume() const { return pow(side, dim()); }

Box Cube::box() const {
  Box b{corner, corner};
  for (auto& x : b.hi) x += side;
  return b;
}

std::string Cube::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < corner.size(); ++i)
    s += (i ? "," : "") + mmdim::to_string(corner[i]);
  return s + ")+[0," + mmdim::to_string(side) + "]^" + std::to_string(dim());
}

CubeFamily::CubeFamily(std::vector<Cube> cubes) : cubes_(std::move(cubes)) {
  for (const auto& c : cubes_)
    if (c.dim() != cubes_.front().dim()) throw UsageError("cube family mixes dimensions");
  recompute();
}

void CubeFamily::push_back(Cube c) {
  if (!cubes_.empty() && c.dim() != dim()) throw UsageError("cube family mixes dimensions");
  if (cubes_.empty()) {
    ell_max_ = ell_min_ = c.side;
  } else if (c.side > ell_max_) {
    ell_max_ = c.side;
  } else if (c.side < ell_min_) {
    ell_min_ = c.side;
  }
  cubes_.push_back(std::move(c));
}

std::vector<Box> CubeFamily::boxes() const {
  std::vector<Box> out;
  out.reserve(cubes_.size());
  for (const auto& c : cubes_) out.push_back(c.box());
  return out;
}

void CubeFamily::recompute() {
  if (cubes_.empty()) {
    ell_max_ = ell_min_ = 0;
    return;
  }
  ell_max_ = ell_min_ = cubes_.front().side;
  for (const auto& c : cubes_) {
    if (c.side > ell_max_) ell_max_ = c.side;
    if (c.side < ell_min_) ell_min_ = c.side;
  }
}

Rational pow(const Rational& q, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

Count floor_of(const Rational& q) {
  Count n = numerator(q), d = denominator(q);
  Count f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

}  // namespace mmdim::tiling
