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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mmdim/counting.hpp"
#include "mmdim/covering.hpp"
#include "mmdim/error.hpp"
#include "mmdim/metric.hpp"
#include "mmdim/point_set.hpp"
#include "mmdim/systems.hpp"

namespace mmdim {
namespace {

// Number of classes of `pts` under d_w <= eps, using the literal orbit metric.
// For ultrametrics the relation is an equivalence, so this is the covering
// number of the point list.
std::size_t classes_by_orbit_metric(const SystemSpec& s, const Window& w, double eps,
                                    const std::vector<Point>& pts) {
  std::vector<Point> reps;
  for (const auto& p : pts) {
    bool found = false;
    for (const auto& r : reps)
      if (orbit_metric(s, w, p, r) <= eps) {
        found = true;
        break;
      }
    if (!found) reps.push_back(p);
  }
  return reps.size();
}

Point random_symbolic(const SystemSpec& s, std::mt19937_64& rng, std::int64_t r) {
  const Site lo(s.lattice_dim, -r), hi(s.lattice_dim, r);
  std::vector<double> v(box_sites(lo, hi).size());
  for (auto& x : v) x = static_cast<double>(rng() % s.alphabet_size);
  if (!s.transitions.empty())
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!s.allows(static_cast<int>(v[i - 1]), static_cast<int>(v[i]))) v[i] = 0;
  return Point::make(s, lo, hi, v, {0.0});
}

Point random_interval(const SystemSpec& s, std::mt19937_64& rng, std::int64_t r) {
  const Site lo(s.lattice_dim, -r), hi(s.lattice_dim, r);
  std::vector<double> v(box_sites(lo, hi).size() * s.coordinate_dim);
  for (auto& x : v) x = static_cast<double>(rng() % 17) / 16.0;
  return Point::make(s, lo, hi, v, std::vector<double>(s.coordinate_dim, 0.5));
}

TEST(Numeric, ScaleDepthAndLogs) {
  EXPECT_EQ(scale_depth(1.0), 0);
  EXPECT_EQ(scale_depth(0.5), 1);
  EXPECT_EQ(scale_depth(0.3), 2);
  EXPECT_EQ(scale_depth(1.0 / 128), 7);
  EXPECT_DOUBLE_EQ(log_count(Count(1) << 1000), 1000 * std::log(2.0));
  EXPECT_EQ(log_ratio(Count(8), Count(4)), log_ratio(Count(2), Count(1)));
  EXPECT_EQ(ceil_div_real(1.0, 0.25), 4);
  EXPECT_EQ(ceil_div_real(0.1, 0.25), 1);
}

TEST(Lattice, WindowsAndSites) {
  const Window c = Window::cube(3, 2);
  EXPECT_EQ(c.size(), 9u);
  EXPECT_TRUE(c.contains({2, 2}));
  EXPECT_FALSE(c.contains({3, 0}));
  EXPECT_EQ(c.distance({5, 1}), 3);
  EXPECT_EQ(c.dilated(1).size(), 25u);
  EXPECT_TRUE(c.is_subset_of(c.dilated(1)));
  EXPECT_EQ(box_sites({0, 0}, {1, 2}).size(), 6u);
  EXPECT_EQ(box_sites({0, 0}, {1, 2}).front(), (Site{0, 0}));
  EXPECT_EQ(box_sites({0, 0}, {1, 2}).back(), (Site{1, 2}));
  const Window e = Window::from_sites({{2}, {0}, {2}});
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e.distance({1}), 1);
  EXPECT_THROW(Window::box({1}, {0}), UsageError);
}

TEST(System, CatalogEntriesValidate) {
  for (const auto& e : catalog()) {
    EXPECT_NO_THROW(validate(e.spec)) << e.spec.id;
    EXPECT_EQ(find_system(e.spec.id).spec.id, e.spec.id);
  }
  EXPECT_THROW(find_system("nope"), UsageError);
  SystemSpec bad = full_shift(2);
  bad.alphabet_size = 0;
  EXPECT_THROW(validate(bad), UsageError);
}

TEST(Point, AdmissibilityAndExtension) {
  const SystemSpec g = golden_mean_shift();
  EXPECT_NO_THROW(check_point(g, Point::make(g, {0}, {2}, {1, 0, 1}, {0})));
  EXPECT_THROW(check_point(g, Point::make(g, {0}, {1}, {1, 1}, {0})), UsageError);
  const SystemSpec f = full_shift(2);
  EXPECT_THROW(check_point(f, Point::make(f, {0}, {0}, {2}, {0})), UsageError);
  const Point a = Point::make(f, {0}, {1}, {0, 0}, {0});
  EXPECT_TRUE(equal_under_extension(a, Point::constant(f, 0.0)));
}

TEST(Metric, AxiomsOnRandomPoints) {
  std::mt19937_64 rng(7);
  for (const auto& id : {"full-shift-3", "hilbert-cube", "interval-product-2", "full-shift-2-z2"}) {
    const SystemSpec s = find_system(id).spec;
    auto draw = [&] {
      return s.point_kind == PointKind::symbolic ? random_symbolic(s, rng, 3)
                                                 : random_interval(s, rng, 3);
    };
    for (int t = 0; t < 60; ++t) {
      const Point x = draw(), y = draw(), z = draw();
      const Window w = Window::cube(3, s.lattice_dim);
      const double dxy = orbit_metric(s, w, x, y);
      EXPECT_EQ(orbit_metric(s, w, x, x), 0.0);
      EXPECT_EQ(dxy, orbit_metric(s, w, y, x));
      EXPECT_LE(dxy, orbit_metric(s, w, x, z) + orbit_metric(s, w, z, y) + 1e-15);
      EXPECT_LE(dxy, s.diameter);
      // Orbit metrics grow with the window.
      EXPECT_LE(base_metric(s, x, y), dxy);
      // T^a is an isometry between shifted windows.
      const Site a(s.lattice_dim, 1);
      EXPECT_DOUBLE_EQ(orbit_metric(s, w, act(s, a, x), act(s, a, y)),
                       orbit_metric(s, w.translated(a), x, y));
    }
  }
}

TEST(Metric, WithinMatchesLiteralOrbitMetric) {
  std::mt19937_64 rng(11);
  for (const auto& id : {"full-shift-2", "golden-mean", "hilbert-cube", "full-shift-2-z2"}) {
    const SystemSpec s = find_system(id).spec;
    for (int t = 0; t < 200; ++t) {
      Point x = s.point_kind == PointKind::symbolic ? random_symbolic(s, rng, 4)
                                                    : random_interval(s, rng, 4);
      Point y = x;
      // Perturb one site so distances vary across scales.
      const std::size_t k = rng() % x.values.size();
      if (s.point_kind == PointKind::symbolic) {
        // Symbol 0 never creates a forbidden golden-mean word.
        x.values[k] = s.transitions.empty() ? static_cast<double>(rng() % s.alphabet_size) : 0.0;
      } else {
        y.values[k] = static_cast<double>(rng() % 17) / 16.0;
      }
      const Window w = Window::cube(2, s.lattice_dim);
      for (double eps : {0.5, 0.25, 0.125, 0.0625, 0.03}) {
        EXPECT_EQ(within(s, w, eps, x, y), orbit_metric(s, w, x, y) <= eps)
            << id << " eps=" << eps;
      }
    }
  }
}

TEST(Counting, SymbolicExactMatchesEnumeratedClasses) {
  for (const auto& id : {"full-shift-2", "full-shift-3", "golden-mean", "full-shift-2-z2"}) {
    const SystemSpec s = find_system(id).spec;
    const PointSet x = PointSet::whole(s);
    const bool line = s.lattice_dim == 1;
    for (double eps : {0.5, 0.25}) {
      const Window w = Window::cube(line ? 3 : 1, s.lattice_dim);
      // Enumerate a box containing every constrained site; more sites do not
      // change the class count.
      const Site lo(s.lattice_dim, line ? -2 : -1), hi(s.lattice_dim, line ? 5 : 1);
      const auto pts = enumerate_points(x, Window::box(lo, hi));
      EXPECT_EQ(exact_count(x, w, eps), Count(classes_by_orbit_metric(s, w, eps, pts)))
          << id << " eps=" << eps;
    }
  }
}

TEST(Counting, CylinderCountMatchesEnumeration) {
  const SystemSpec s = golden_mean_shift();
  Cylinder c;
  c.pins[{0}] = {{1, 1}};
  c.pins[{3}] = {{0, 0}};
  const PointSet k = PointSet::cylinder_set(s, c);
  const Window w = Window::interval(0, 4);
  const auto pts = enumerate_points(k, Window::interval(-3, 8));
  for (const auto& p : pts) EXPECT_TRUE(k.contains(p));
  EXPECT_EQ(exact_count(k, w, 0.25), Count(classes_by_orbit_metric(s, w, 0.25, pts)));
}

TEST(Counting, TransferMatrixWords) {
  // Words of length n in the golden-mean shift are Fibonacci numbers.
  const SystemSpec s = golden_mean_shift();
  std::vector<Site> sites;
  Count f1 = 2, f2 = 3;
  for (int n = 1; n <= 30; ++n) {
    sites.push_back({n});
    const Count got = sft_restriction_count(s, Cylinder{}, sites);
    if (n == 1) EXPECT_EQ(got, 2);
    else if (n == 2) EXPECT_EQ(got, 3);
    else {
      const Count f3 = f1 + f2;
      EXPECT_EQ(got, f3);
      f1 = f2;
      f2 = f3;
    }
  }
}

TEST(Counting, IntervalSingleSiteMatchesLineCover) {
  // One coordinate, window {0}, eps < 1: only site 0 with |n| < depth
  // matter; a single grid line is covered optimally by the greedy sweep.
  const SystemSpec s = hilbert_cube_shift();
  const double h = 1.0 / 64;
  for (double eps : {0.5, 0.25, 0.1, 0.05}) {
    std::vector<double> grid;
    for (int i = 0; i <= 64; ++i) grid.push_back(i * h);
    std::int64_t balls = 0;
    double reach = -1;
    for (double g : grid)
      if (g > reach + 1e-12) {
        ++balls;
        reach = g + 2 * eps;
      }
    Cylinder c;
    const std::int64_t t = constraint_radius(eps);
    for (std::int64_t n = -t; n <= t; ++n)
      if (n != 0) c.pins[{n}] = {{0.0, 0.0}};
    const PointSet k = PointSet::cylinder_set(s, c).with_grid(h);
    EXPECT_EQ(exact_count(k, Window::interval(0, 0), eps), Count(balls)) << eps;
  }
}

TEST(Counting, GridBracketEnclosesContinuum) {
  const SystemSpec s = hilbert_cube_shift();
  const PointSet x = PointSet::whole(s);
  for (double eps : {0.25, 0.125, 1.0 / 32})
    for (std::int64_t n : {1, 3, 5}) {
      const Window w = Window::interval(0, n - 1);
      const Count exact = exact_count(x, w, eps);
      const GridBracket b = grid_bracket(x, w, eps, 1.0 / 512);
      EXPECT_LE(b.lo, exact);
      EXPECT_GE(b.hi, exact);
    }
}

TEST(Counting, ProductCountsMultiply) {
  const SystemCatalogEntry p =
      build_product({find_system("full-shift-2"), find_system("full-shift-2")});
  const PointSet x = PointSet::whole(p.spec);
  const PointSet four = PointSet::whole(full_shift(4));
  for (double eps : {0.5, 0.25, 0.125})
    for (std::int64_t n : {1, 2, 4})
      EXPECT_EQ(exact_count(x, Window::interval(0, n - 1), eps),
                exact_count(four, Window::interval(0, n - 1), eps));
  EXPECT_THROW(build_product({find_system("full-shift-2"), find_system("full-shift-2-z2")}),
               UsageError);
}

TEST(PointSet, ShiftMovesPins) {
  const SystemSpec s = full_shift(2);
  Cylinder c;
  c.pins[{5}] = {{1, 1}};
  const PointSet k = PointSet::cylinder_set(s, c);
  const PointSet t = k.shifted({2});
  const Point x = Point::make(s, {3}, {3}, {1}, {0});
  EXPECT_TRUE(t.contains(x));
  EXPECT_FALSE(k.contains(x));
  // T^t K = {T^t x : x in K}: (T^2 x)_3 = x_5.
  const Point y = Point::make(s, {5}, {5}, {1}, {0});
  EXPECT_TRUE(t.contains(act(s, {2}, y)));
}

}  // namespace
}  // namespace mmdim
