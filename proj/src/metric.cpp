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

#include "mmdim/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmdim/error.hpp"
#include "mmdim/numeric.hpp"

namespace mmdim {
namespace {

void check_pair(const SystemSpec& s, const Point& x, const Point& y) {
  if (x.system_id != s.id || y.system_id != s.id)
    throw UsageError("base_metric: points belong to '" + x.system_id + "' and '" +
                     y.system_id + "', expected '" + s.id + "'");
}

double tail_gap(const Point& x, const Point& y) {
  double g = 0.0;
  for (std::size_t c = 0; c < x.tail.size(); ++c)
    g = std::max(g, std::abs(x.tail[c] - y.tail[c]));
  return g;
}

}  // namespace

double base_metric(const SystemSpec& s, const Point& x, const Point& y) {
  check_pair(s, x, y);
  if (s.point_kind == PointKind::product_of_systems) {
    double d = 0.0;
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      d = std::max(d, base_metric(s.factors[i], x.components[i], y.components[i]));
    return d;
  }
  Site lo, hi;
  hull(x.lo, x.hi, y.lo, y.hi, &lo, &hi);
  const int ch = s.channels();
  const double tail = tail_gap(x, y);
  const std::int64_t out = outside_distance(lo, hi);

  if (s.point_kind == PointKind::symbolic) {
    std::int64_t nearest = tail > 0 ? out : std::numeric_limits<std::int64_t>::max();
    for (const Site& n : box_sites(lo, hi)) {
      const std::int64_t r = sup_norm(n);
      if (r < nearest && x.at(n) != y.at(n)) nearest = r;
    }
    if (nearest == std::numeric_limits<std::int64_t>::max()) return 0.0;
    return std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(nearest, 2000)));
  }

  double d = tail > 0 ? std::ldexp(tail, -static_cast<int>(std::min<std::int64_t>(out, 2000)))
                      : 0.0;
  for (const Site& n : box_sites(lo, hi)) {
    double gap = 0.0;
    for (int c = 0; c < ch; ++c) gap = std::max(gap, std::abs(x.at(n, c) - y.at(n, c)));
    d = std::max(d, std::ldexp(gap, -static_cast<int>(std::min<std::int64_t>(sup_norm(n), 2000))));
  }
  return d;
}

Point act(const SystemSpec& s, const Site& a, const Point& x) {
  if (static_cast<int>(a.size()) != s.lattice_dim)
    throw UsageError("act: shift has dimension " + std::to_string(a.size()) +
                     ", system has lattice_dim " + std::to_string(s.lattice_dim));
  Point y = x;
  if (s.point_kind == PointKind::product_of_systems) {
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      y.components[i] = act(s.factors[i], a, x.components[i]);
    return y;
  }
  y.lo = x.lo - a;
  y.hi = x.hi - a;
  return y;
}

double orbit_metric(const SystemSpec& s, const Window& w, const Point& x,
                    const Point& y) {
  if (w.size() == 0) throw UsageError("orbit_metric: empty window");
  if (w.dim() != s.lattice_dim) throw UsageError("orbit_metric: window dimension mismatch");
  double d = 0.0;
  for (const Site& a : w.sites())
    d = std::max(d, base_metric(s, act(s, a, x), act(s, a, y)));
  return d;
}

double truncation_error_bound(std::int64_t radius) {
  return std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(radius + 1, 2000)));
}

std::int64_t constraint_radius(double eps) { return scale_depth(eps) - 1; }

}  // namespace mmdim
