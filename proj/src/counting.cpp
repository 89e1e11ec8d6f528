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

#include "mmdim/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

#include "mmdim/error.hpp"
#include "mmdim/metric.hpp"

namespace mmdim {
namespace {

std::int64_t symbol_choices(const ChannelRange& r) {
  const auto lo = static_cast<std::int64_t>(std::ceil(r.lo));
  const auto hi = static_cast<std::int64_t>(std::floor(r.hi));
  return std::max<std::int64_t>(0, hi - lo + 1);
}

std::int64_t grid_points(const ChannelRange& r, double h) {
  if (r.hi < r.lo) return 0;
  auto a = static_cast<std::int64_t>(std::ceil(r.lo / h - 1e-9));
  auto b = static_cast<std::int64_t>(std::floor(r.hi / h + 1e-9));
  // Undo the tolerance when it admitted a point just outside the range.
  if (static_cast<double>(a) * h < r.lo) ++a;
  if (static_cast<double>(b) * h > r.hi) --b;
  return std::max<std::int64_t>(0, b - a + 1);
}

// Balls of half-width r needed for one interval coordinate.
std::int64_t coordinate_count(const ChannelRange& r, double radius, double h) {
  if (r.hi < r.lo) return 0;
  if (h > 0) {
    const std::int64_t p = grid_points(r, h);
    if (p == 0) return 0;
    const auto per_ball =
        static_cast<std::int64_t>(std::floor(2.0 * radius / h * (1.0 + 1e-12))) + 1;
    return (p + per_ball - 1) / per_ball;
  }
  return ceil_div_real(r.hi - r.lo, 2.0 * radius);
}

bool pins_nonempty(const SystemSpec& s, const Cylinder& c, double h) {
  for (const auto& [n, ranges] : c.pins)
    for (int ch = 0; ch < s.channels(); ++ch) {
      const ChannelRange r = allowed_range(s, c, n, ch);
      if (s.point_kind == PointKind::symbolic ? symbol_choices(r) == 0
                                              : (h > 0 ? grid_points(r, h) == 0 : r.hi < r.lo))
        return false;
    }
  return true;
}

Count count_simple(const SystemSpec& s, const Cylinder& c, double h,
                   const Window& w, double eps) {
  const std::vector<Site> a = constrained_sites(w, eps);
  if (s.point_kind == PointKind::symbolic) {
    if (!s.transitions.empty()) return sft_restriction_count(s, c, a);
    if (!pins_nonempty(s, c, h)) return 0;
    Count n = 1;
    for (const Site& site : a) n *= symbol_choices(allowed_range(s, c, site, 0));
    return n;
  }
  if (!pins_nonempty(s, c, h)) return 0;
  Count n = 1;
  for (const Site& site : a) {
    const double radius = std::ldexp(eps, static_cast<int>(w.distance(site)));
    for (int ch = 0; ch < s.channels(); ++ch)
      n *= coordinate_count(allowed_range(s, c, site, ch), radius, h);
  }
  return n;
}

bool ultrametric(const SystemSpec& s) {
  if (s.point_kind == PointKind::symbolic) return true;
  if (s.point_kind == PointKind::interval_product) return false;
  return std::all_of(s.factors.begin(), s.factors.end(), ultrametric);
}

void append_key(const SystemSpec& s, const Point& x, const std::vector<Site>& a,
                std::vector<double>* key) {
  if (s.point_kind == PointKind::product_of_systems) {
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      append_key(s.factors[i], x.components[i], a, key);
    return;
  }
  for (const Site& n : a) key->push_back(x.at(n));
}

Count count_cylinder(const SystemSpec& s, const Cylinder& c, double h,
                     const Window& w, double eps) {
  if (s.point_kind != PointKind::product_of_systems) return count_simple(s, c, h, w, eps);
  Count n = 1;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const Cylinder none;
    n *= count_cylinder(s.factors[i], c.factors.empty() ? none : c.factors[i], h, w, eps);
  }
  return n;
}

}  // namespace

std::vector<Site> constrained_sites(const Window& w, double eps) {
  return w.dilated_sites(constraint_radius(eps));
}

bool oracle_eligible(const PointSet& k) {
  if (k.kind == PointSet::Kind::explicit_cloud) return ultrametric(k.system);
  return true;
}

Count exact_count(const PointSet& k, const Window& w, double eps) {
  if (!(eps > 0)) throw UsageError("epsilon must be positive");
  if (w.size() == 0) throw UsageError("window must be nonempty");
  if (w.dim() != k.system.lattice_dim) throw UsageError("window dimension mismatch");
  if (k.kind == PointSet::Kind::explicit_cloud) {
    if (!ultrametric(k.system))
      throw UnsupportedInstance(
          "exact covering numbers of explicit clouds need an ultrametric system; "
          "use greedy_spanning / greedy_separated for a bracket");
    const std::vector<Site> a = constrained_sites(w, eps);
    std::set<std::vector<double>> keys;
    for (const auto& p : k.points) {
      std::vector<double> key;
      append_key(k.system, p, a, &key);
      keys.insert(std::move(key));
    }
    return static_cast<long>(keys.size());
  }
  return count_cylinder(k.system, k.cylinder, k.grid_step, w, eps);
}

Count sft_restriction_count(const SystemSpec& s, const Cylinder& c,
                            const std::vector<Site>& counted) {
  const int k = s.alphabet_size;
  std::set<std::int64_t> in_a;
  for (const Site& n : counted) in_a.insert(n.at(0));
  std::int64_t first = 0, last = -1;
  bool any = false;
  auto extend = [&](std::int64_t p) {
    if (!any) { first = last = p; any = true; }
    first = std::min(first, p);
    last = std::max(last, p);
  };
  for (auto p : in_a) extend(p);
  for (const auto& [n, r] : c.pins) extend(n.at(0));
  if (!any) return 1;

  std::vector<std::uint32_t> succ(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (s.allows(a, b)) succ[static_cast<std::size_t>(a)] |= 1u << b;
  auto allowed = [&](std::int64_t p) {
    const ChannelRange r = allowed_range(s, c, {p}, 0);
    std::uint32_t m = 0;
    for (int b = 0; b < k; ++b)
      if (b >= r.lo && b <= r.hi) m |= 1u << b;
    return m;
  };
  // Essential transitions: every symbol has a past and a future, so only the
  // scanned stretch constrains the configuration.
  std::map<std::uint32_t, Count> states;
  auto place = [&](std::map<std::uint32_t, Count>& into, std::uint32_t set,
                   std::int64_t p, const Count& weight) {
    if (set == 0) return;
    if (in_a.count(p)) {
      for (int b = 0; b < k; ++b)
        if (set & (1u << b)) into[1u << b] += weight;
    } else {
      into[set] += weight;
    }
  };
  place(states, allowed(first), first, Count(1));
  for (std::int64_t p = first + 1; p <= last; ++p) {
    std::map<std::uint32_t, Count> next;
    const std::uint32_t here = allowed(p);
    for (const auto& [set, weight] : states) {
      std::uint32_t reach = 0;
      for (int a = 0; a < k; ++a)
        if (set & (1u << a)) reach |= succ[static_cast<std::size_t>(a)];
      place(next, reach & here, p, weight);
    }
    states.swap(next);
  }
  Count total = 0;
  for (const auto& [set, weight] : states) total += weight;
  return total;
}

GridBracket grid_bracket(const PointSet& k, const Window& w, double eps, double h) {
  if (!(h > 0) || !(h < eps))
    throw UsageError("grid bracket needs 0 < grid_step < epsilon");
  PointSet g = k.with_grid(h);
  return {exact_count(g, w, eps + h), exact_count(g, w, eps - h)};
}

}  // namespace mmdim
