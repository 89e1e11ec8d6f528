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

#include "mmdim/point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mmdim/error.hpp"

namespace mmdim {
namespace {

std::size_t box_volume(const Site& lo, const Site& hi) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    v *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  return v;
}

std::size_t box_index(const Site& lo, const Site& hi, const Site& n) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) +
          static_cast<std::size_t>(n[i] - lo[i]);
  return idx;
}

bool same_values(const Point& x, const Point& y, const Site& n) {
  for (int c = 0; c < x.channels(); ++c)
    if (x.at(n, c) != y.at(n, c)) return false;
  return true;
}

}  // namespace

Point Point::constant(const SystemSpec& s, std::vector<double> value) {
  if (s.point_kind == PointKind::product_of_systems) {
    std::vector<Point> comps;
    for (const auto& f : s.factors) comps.push_back(constant(f, value.at(0)));
    return product(s, std::move(comps));
  }
  Site zero(static_cast<std::size_t>(s.lattice_dim), 0);
  return make(s, zero, zero, value, value);
}

Point Point::constant(const SystemSpec& s, double value) {
  if (s.point_kind == PointKind::product_of_systems)
    return constant(s, std::vector<double>{value});
  return constant(s, std::vector<double>(static_cast<std::size_t>(s.channels()), value));
}

Point Point::make(const SystemSpec& s, Site lo, Site hi,
                  std::vector<double> values, std::vector<double> tail) {
  if (s.point_kind == PointKind::product_of_systems)
    throw UsageError("Point::make: use Point::product for product systems");
  Point p;
  p.system_id = s.id;
  p.lo = std::move(lo);
  p.hi = std::move(hi);
  p.values = std::move(values);
  p.tail = std::move(tail);
  check_point(s, p);
  return p;
}

Point Point::product(const SystemSpec& s, std::vector<Point> components) {
  Point p;
  p.system_id = s.id;
  p.components = std::move(components);
  check_point(s, p);
  return p;
}

bool Point::in_box(const Site& n) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (n[i] < lo[i] || n[i] > hi[i]) return false;
  return true;
}

double Point::at(const Site& n, int c) const {
  if (!in_box(n)) return tail[static_cast<std::size_t>(c)];
  return values[box_index(lo, hi, n) * tail.size() + static_cast<std::size_t>(c)];
}

std::string Point::to_string() const {
  std::ostringstream os;
  if (!components.empty()) {
    os << "(";
    for (std::size_t i = 0; i < components.size(); ++i)
      os << (i ? ", " : "") << components[i].to_string();
    os << ")";
    return os.str();
  }
  os << mmdim::to_string(lo) << ".." << mmdim::to_string(hi) << " [";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  os << "] tail [";
  for (std::size_t i = 0; i < tail.size(); ++i) os << (i ? " " : "") << tail[i];
  os << "]";
  return os.str();
}

void check_point(const SystemSpec& s, const Point& x) {
  if (x.system_id != s.id)
    throw UsageError("point belongs to system '" + x.system_id + "', not '" + s.id + "'");
  if (s.point_kind == PointKind::product_of_systems) {
    if (x.components.size() != s.factors.size())
      throw UsageError("product point needs one component per factor");
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      check_point(s.factors[i], x.components[i]);
    return;
  }
  const auto d = static_cast<std::size_t>(s.lattice_dim);
  if (x.lo.size() != d || x.hi.size() != d)
    throw UsageError("point window dimension does not match lattice_dim");
  for (std::size_t i = 0; i < d; ++i)
    if (x.lo[i] > x.hi[i]) throw UsageError("point window must satisfy lo <= hi");
  const auto ch = static_cast<std::size_t>(s.channels());
  if (x.tail.size() != ch) throw UsageError("point tail has the wrong channel count");
  if (x.values.size() != box_volume(x.lo, x.hi) * ch)
    throw UsageError("point values do not fill the window");
  auto check_value = [&](double v) {
    if (s.point_kind == PointKind::symbolic) {
      if (v != std::floor(v) || v < 0 || v >= s.alphabet_size)
        throw UsageError("symbol " + std::to_string(v) + " outside alphabet");
    } else if (!(v >= 0.0 && v <= 1.0)) {
      throw UsageError("coordinate " + std::to_string(v) + " outside [0,1]");
    }
  };
  for (double v : x.values) check_value(v);
  for (double v : x.tail) check_value(v);
  if (s.point_kind == PointKind::symbolic && !s.transitions.empty()) {
    auto t = static_cast<int>(x.tail[0]);
    if (!s.allows(t, t)) throw UsageError("constant tail symbol is not admissible");
    int prev = t;
    for (std::int64_t n = x.lo[0]; n <= x.hi[0] + 1; ++n) {
      int cur = static_cast<int>(x.at({n}));
      if (!s.allows(prev, cur))
        throw UsageError("forbidden transition at site " + std::to_string(n));
      prev = cur;
    }
  }
}

std::int64_t outside_distance(const Site& lo, const Site& hi) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > 0 || hi[i] < 0) return 0;
  best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < lo.size(); ++i)
    best = std::min({best, hi[i] + 1, 1 - lo[i]});
  return best;
}

void hull(const Site& alo, const Site& ahi, const Site& blo, const Site& bhi,
          Site* lo, Site* hi) {
  lo->resize(alo.size());
  hi->resize(alo.size());
  for (std::size_t i = 0; i < alo.size(); ++i) {
    (*lo)[i] = std::min(alo[i], blo[i]);
    (*hi)[i] = std::max(ahi[i], bhi[i]);
  }
}

bool equal_under_extension(const Point& x, const Point& y) {
  if (x.components.size() != y.components.size()) return false;
  if (!x.components.empty()) {
    for (std::size_t i = 0; i < x.components.size(); ++i)
      if (!equal_under_extension(x.components[i], y.components[i])) return false;
    return true;
  }
  if (x.tail != y.tail || x.lo.size() != y.lo.size()) return false;
  Site lo, hi;
  hull(x.lo, x.hi, y.lo, y.hi, &lo, &hi);
  for (const Site& n : box_sites(lo, hi))
    if (!same_values(x, y, n)) return false;
  return true;
}

}  // namespace mmdim
