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

#include "mmdim/counting.hpp"
#include "mmdim/covering.hpp"
#include "mmdim/error.hpp"
#include "mmdim/local.hpp"
#include "mmdim/metric.hpp"
#include "mmdim/systems.hpp"

namespace mmdim {
namespace {

const std::vector<std::int64_t> kWindows = {2, 3, 4, 5, 6};

TEST(BowenBall, ContainsCenterAndMatchesMetric) {
  const SystemSpec s = hilbert_cube_shift();
  const auto centers = sample_centers(s, 4, 1);
  const PointSet grid = PointSet::whole(s).with_grid(0.25);
  const Window w = Window::interval(-1, 1);
  for (const auto& x : centers) {
    const PointSet ball = bowen_ball(s, {x, 0.25, 1, 0});
    EXPECT_TRUE(ball.contains(x));
    for (const auto& y : enumerate_points(grid, Window::interval(-2, 2), 1u << 20))
      EXPECT_EQ(ball.contains(y), orbit_metric(s, w, x, y) <= 0.25) << y.to_string();
  }
}

TEST(BowenBall, ExpansiveShiftsGiveSingletons) {
  // Below the expansivity constant, balls over growing windows pin every
  // visible site, so local counts are 1.
  for (const auto& id : {"full-shift-2", "golden-mean", "full-shift-2-z2"}) {
    const auto& e = find_system(id);
    ASSERT_TRUE(e.expansivity_constant.has_value()) << id;
    const auto centers = sample_centers(e.spec, 8, 3);
    for (const auto& x : centers) {
      const LocalEntropyReport r =
          local_entropy(e.spec, {x, *e.expansivity_constant / 2, 0, 0}, 1.0 / 64,
                        e.spec.lattice_dim == 1 ? kWindows : std::vector<std::int64_t>{2, 3, 4});
      EXPECT_TRUE(r.converged);
      EXPECT_EQ(r.S_local, 0.0) << id;
      for (const auto& smp : r.curve.samples) EXPECT_EQ(smp.count, 1);
    }
  }
}

TEST(LocalEntropy, HilbertQuarterBall) {
  // Inside B_{1/4}(x, d_Z) each coordinate ranges over an interval of length
  // at most 1/2, so S_local(1/4, 2^-m) = (m - 2) log 2.
  const SystemSpec s = hilbert_cube_shift();
  const auto centers = sample_centers(s, 6, 5);
  for (int m = 3; m <= 6; ++m)
    for (const auto& x : centers) {
      const LocalEntropyReport r = local_entropy(s, {x, 0.25, 0, 0}, std::ldexp(1.0, -m), kWindows);
      EXPECT_LE(r.S_local, (m - 2) * std::log(2.0) + 1e-9) << m;
    }
  std::vector<double> eps;
  for (int m = 3; m <= 7; ++m) eps.push_back(std::ldexp(1.0, -m));
  const LocalMmdimReport lm = local_mmdim(s, 0.25, eps, sample_centers(s, 8, 1), kWindows);
  for (int m = 3; m <= 7; ++m)
    EXPECT_NEAR(lm.max_S[m - 3], (m - 2) * std::log(2.0), 1e-9) << m;
}

TEST(LocalEntropy, ThreadCountDoesNotChangeResults) {
  const SystemSpec s = hilbert_cube_shift();
  const auto centers = sample_centers(s, 10, 2);
  const std::vector<double> eps = {0.125, 0.0625, 0.03125};
  LocalOptions one, four;
  four.threads = 4;
  const auto a = local_mmdim(s, 0.25, eps, centers, kWindows, one);
  const auto b = local_mmdim(s, 0.25, eps, centers, kWindows, four);
  EXPECT_EQ(a.max_S, b.max_S);
  EXPECT_EQ(a.estimate.upper, b.estimate.upper);
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    for (std::size_t j = 0; j < a.reports[i].size(); ++j)
      EXPECT_EQ(a.reports[i][j].S_local, b.reports[i][j].S_local);
}

TEST(LocalEntropy, MarginShrinksCount) {
  const SystemSpec s = full_shift(2);
  const Point x = sample_centers(s, 1, 1).front();
  Count prev = -1;
  for (std::int64_t R = 0; R <= 6; ++R) {
    const MarginReport r = local_entropy_with_margin(s, x, 0.25, R, 4, 1.0 / 32);
    if (prev >= 0) EXPECT_LE(r.count, prev);
    prev = r.count;
  }
  EXPECT_EQ(prev, 1);
  EXPECT_THROW(local_entropy_with_margin(s, x, 0.25, -1, 4, 0.25), UsageError);
}

TEST(Centers, DeterministicAndAdmissible) {
  for (const auto& e : catalog()) {
    const auto a = sample_centers(e.spec, 32, 9);
    const auto b = sample_centers(e.spec, 32, 9);
    // The one-point system has a single configuration.
    ASSERT_GE(a.size(), e.spec.id == "one-point" ? 1u : 32u) << e.spec.id;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].values, b[i].values);
      EXPECT_NO_THROW(check_point(e.spec, a[i]));
    }
  }
}

TEST(Growth, FullShiftIsFlat) {
  const SystemSpec s = full_shift(2);
  const GrowthReport g =
      bowen_growth_check(s, sample_centers(s, 4, 1), 0.25, 0.125, {4, 8, 16}, 0.1, kWindows);
  // B_{1/4}(x, d_n) pins sites -1..n; counting at 1/8 sees -2..n+1, so two
  // sites stay free: g(16) = log 4 / 16.
  EXPECT_EQ(g.a, 0.0);
  EXPECT_NEAR(g.g_max, std::log(4.0) / 16, 1e-12);
  EXPECT_TRUE(g.holds);
  EXPECT_THROW(bowen_growth_check(s, {}, 0.25, 0.125, {4}, 0.1, kWindows), UsageError);
}

TEST(HStar, ExpansiveVersusHilbert) {
  const std::vector<double> eps = {0.125, 0.0625, 0.03125};
  const SystemSpec f = full_shift(3);
  const HStarReport a = h_star_estimate(f, 0.25, eps, sample_centers(f, 9, 1), kWindows);
  EXPECT_EQ(a.value, 0.0);
  EXPECT_TRUE(a.evidence);
  const SystemSpec h = hilbert_cube_shift();
  const HStarReport b = h_star_estimate(h, 0.25, eps, sample_centers(h, 4, 1), kWindows);
  EXPECT_GT(b.value, 0.0);
  EXPECT_FALSE(b.evidence);
}

}  // namespace
}  // namespace mmdim
