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

#include "mmdim/point_set.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "mmdim/error.hpp"
#include "mmdim/metric.hpp"

namespace mmdim {

PointSet PointSet::whole(const SystemSpec& s) {
  PointSet k;
  k.system = s;
  k.kind = Kind::whole_space;
  return k;
}

PointSet PointSet::cloud(const SystemSpec& s, std::vector<Point> points) {
  if (points.empty()) throw UsageError("explicit point cloud must be nonempty");
  for (const auto& p : points) check_point(s, p);
  PointSet k;
  k.system = s;
  k.kind = Kind::explicit_cloud;
  k.points = std::move(points);
  return k;
}

PointSet PointSet::cylinder_set(const SystemSpec& s, Cylinder c) {
  PointSet k;
  k.system = s;
  k.kind = Kind::cylinder_enumeration;
  k.cylinder = std::move(c);
  return k;
}

PointSet PointSet::with_grid(double h) const {
  if (h < 0) throw UsageError("grid_step must be nonnegative");
  PointSet k = *this;
  k.grid_step = h;
  return k;
}

PointSet PointSet::with_enumeration(const Window& box) const {
  PointSet k = *this;
  k.enumeration = box;
  return k;
}

namespace {

Cylinder shift_cylinder(const Cylinder& c, const Site& t) {
  Cylinder out;
  for (const auto& [n, r] : c.pins) out.pins.emplace(n - t, r);
  for (const auto& f : c.factors) out.factors.push_back(shift_cylinder(f, t));
  return out;
}

bool in_cylinder(const SystemSpec& s, const Cylinder& c, const Point& x) {
  if (s.point_kind == PointKind::product_of_systems) {
    if (c.factors.empty()) return true;
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      if (!in_cylinder(s.factors[i], c.factors[i], x.components[i])) return false;
    return true;
  }
  for (const auto& [n, ranges] : c.pins)
    for (std::size_t ch = 0; ch < ranges.size(); ++ch) {
      const double v = x.at(n, static_cast<int>(ch));
      if (v < ranges[ch].lo || v > ranges[ch].hi) return false;
    }
  return true;
}

void describe_cylinder(std::ostream& os, const Cylinder& c) {
  os << "{";
  bool first = true;
  for (const auto& [n, r] : c.pins) {
    os << (first ? "" : ", ") << to_string(n) << ":";
    for (const auto& q : r) os << "[" << q.lo << "," << q.hi << "]";
    first = false;
  }
  for (const auto& f : c.factors) {
    os << (first ? "" : ", ");
    describe_cylinder(os, f);
    first = false;
  }
  os << "}";
}

}  // namespace

PointSet PointSet::shifted(const Site& t) const {
  if (static_cast<int>(t.size()) != system.lattice_dim)
    throw UsageError("shift dimension does not match lattice_dim");
  PointSet k = *this;
  switch (kind) {
    case Kind::whole_space:
      break;
    case Kind::explicit_cloud:
      for (auto& p : k.points) p = act(system, t, p);
      break;
    case Kind::cylinder_enumeration:
      k.cylinder = shift_cylinder(cylinder, t);
      break;
  }
  if (enumeration) k.enumeration = enumeration->translated(-t);
  return k;
}

const Cylinder& PointSet::constraints() const {
  if (kind == Kind::explicit_cloud)
    throw UsageError("explicit point clouds have no cylinder description");
  return cylinder;
}

bool PointSet::contains(const Point& x) const {
  check_point(system, x);
  switch (kind) {
    case Kind::whole_space:
      return true;
    case Kind::explicit_cloud:
      for (const auto& p : points)
        if (equal_under_extension(p, x)) return true;
      return false;
    case Kind::cylinder_enumeration:
      return in_cylinder(system, cylinder, x);
  }
  return false;
}

std::string PointSet::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " of " << system.id;
  if (kind == Kind::explicit_cloud) os << " (" << points.size() << " points)";
  if (kind == Kind::cylinder_enumeration) {
    os << " ";
    describe_cylinder(os, cylinder);
  }
  if (grid_step > 0) os << " grid " << grid_step;
  return os.str();
}

std::string to_string(PointSet::Kind k) {
  switch (k) {
    case PointSet::Kind::whole_space: return "whole_space";
    case PointSet::Kind::explicit_cloud: return "explicit_cloud";
    case PointSet::Kind::cylinder_enumeration: return "cylinder_enumeration";
  }
  return "?";
}

ChannelRange allowed_range(const SystemSpec& s, const Cylinder& c, const Site& n,
                           int ch) {
  ChannelRange r{0.0, s.point_kind == PointKind::symbolic
                          ? static_cast<double>(s.alphabet_size - 1)
                          : 1.0};
  auto it = c.pins.find(n);
  if (it != c.pins.end()) {
    const auto& p = it->second.at(static_cast<std::size_t>(ch));
    r.lo = std::max(r.lo, p.lo);
    r.hi = std::min(r.hi, p.hi);
  }
  return r;
}

int enumeration_tail_symbol(const SystemSpec& s) {
  for (int a = 0; a < s.alphabet_size; ++a)
    if (s.allows(a, a)) return a;
  throw UnsupportedInstance("system '" + s.id +
                            "' has no fixed point; constant tails are impossible");
}

namespace {

// Candidate values for one channel at one site.
std::vector<double> site_values(const SystemSpec& s, const Cylinder& c, double h,
                                const Site& n, int ch) {
  const ChannelRange r = allowed_range(s, c, n, ch);
  std::vector<double> out;
  if (s.point_kind == PointKind::symbolic) {
    for (int a = static_cast<int>(std::ceil(r.lo)); a <= r.hi; ++a)
      out.push_back(a);
    return out;
  }
  if (!(h > 0))
    throw UsageError("enumerating an interval system requires a positive grid_step");
  const auto first = static_cast<std::int64_t>(std::ceil(r.lo / h - 1e-9));
  const auto last = static_cast<std::int64_t>(std::floor(r.hi / h + 1e-9));
  for (std::int64_t i = first; i <= last; ++i) {
    double v = static_cast<double>(i) * h;
    if (v >= r.lo && v <= r.hi) out.push_back(v);
  }
  return out;
}

std::vector<Point> enumerate_simple(const PointSet& k, const Window& box,
                                    std::size_t cap) {
  const SystemSpec& s = k.system;
  if (box.kind() != Window::Kind::box)
    throw UsageError("enumeration window must be a box");
  const Cylinder& cyl = k.constraints();
  const int ch = s.channels();
  std::vector<double> tail(static_cast<std::size_t>(ch), 0.0);
  if (s.point_kind == PointKind::symbolic) tail[0] = enumeration_tail_symbol(s);

  // Pins outside the box must accept the tail.
  for (const auto& [n, ranges] : cyl.pins) {
    if (box.contains(n)) continue;
    for (int c = 0; c < ch; ++c) {
      const auto& r = ranges[static_cast<std::size_t>(c)];
      if (tail[static_cast<std::size_t>(c)] < r.lo || tail[static_cast<std::size_t>(c)] > r.hi)
        throw UnsupportedInstance("pin at " + to_string(n) +
                                  " lies outside the enumeration box " + box.to_string());
    }
  }

  const std::vector<Site>& sites = box.sites();
  std::vector<std::vector<double>> choices;
  for (const Site& n : sites)
    for (int c = 0; c < ch; ++c) choices.push_back(site_values(s, cyl, k.grid_step, n, c));

  const bool sft = s.point_kind == PointKind::symbolic && !s.transitions.empty();
  std::vector<Point> out;
  std::vector<double> vals(choices.size());
  const int t = static_cast<int>(tail[0]);

  // Depth-first over coordinates in row-major order; for D = 1 subshifts
  // forbidden transitions prune the search.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      if (sft && !s.allows(static_cast<int>(vals.back()), t)) return;
      if (out.size() >= cap)
        throw UnsupportedInstance("enumeration of " + k.describe() + " on " +
                                  box.to_string() + " exceeds " + std::to_string(cap) +
                                  " points");
      Point p;
      p.system_id = s.id;
      p.lo = box.lo();
      p.hi = box.hi();
      p.values = vals;
      p.tail = tail;
      out.push_back(std::move(p));
      return;
    }
    for (double v : choices[i]) {
      if (sft) {
        const int prev = i == 0 ? t : static_cast<int>(vals[i - 1]);
        if (!s.allows(prev, static_cast<int>(v))) continue;
      }
      vals[i] = v;
      rec(i + 1);
    }
  };
  for (const auto& c : choices)
    if (c.empty()) return out;
  rec(0);
  return out;
}

}  // namespace

std::vector<Point> enumerate_points(const PointSet& k, const Window& box,
                                    std::size_t cap) {
  const SystemSpec& s = k.system;
  if (k.kind == PointSet::Kind::explicit_cloud) return k.points;
  if (s.point_kind != PointKind::product_of_systems) return enumerate_simple(k, box, cap);

  std::vector<std::vector<Point>> parts;
  std::size_t total = 1;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    PointSet f = k.kind == PointSet::Kind::whole_space || k.cylinder.factors.empty()
                     ? PointSet::whole(s.factors[i])
                     : PointSet::cylinder_set(s.factors[i], k.cylinder.factors[i]);
    f.grid_step = k.grid_step;
    parts.push_back(enumerate_points(f, box, cap));
    total *= std::max<std::size_t>(parts.back().size(), 1);
    if (parts.back().empty()) return {};
    if (total > cap)
      throw UnsupportedInstance("product enumeration exceeds " + std::to_string(cap) +
                                " points");
  }
  std::vector<Point> out;
  std::vector<std::size_t> idx(parts.size(), 0);
  while (true) {
    Point p;
    p.system_id = s.id;
    for (std::size_t i = 0; i < parts.size(); ++i) p.components.push_back(parts[i][idx[i]]);
    out.push_back(std::move(p));
    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++idx[i] < parts[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace mmdim
