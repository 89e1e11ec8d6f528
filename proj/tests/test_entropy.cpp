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
#include "mmdim/entropy.hpp"
#include "mmdim/error.hpp"
#include "mmdim/systems.hpp"

namespace mmdim {
namespace {

// Number of admissible words of length len: 1^T A^(len-1) 1.
Count word_count(const std::vector<std::vector<int>>& a, std::int64_t len) {
  const std::size_t k = a.size();
  std::vector<Count> v(k, 1);
  for (std::int64_t i = 1; i < len; ++i) {
    std::vector<Count> next(k, 0);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q)
        if (a[p][q]) next[q] += v[p];
    v = next;
  }
  Count total = 0;
  for (const auto& x : v) total += x;
  return total;
}

TEST(Entropy, FullShiftSlopeIsLogK) {
  for (int k : {2, 3}) {
    const PointSet x = PointSet::whole(full_shift(k));
    for (int m = 1; m <= 6; ++m) {
      const EntropyCurve c = entropy_at_scale(x, std::ldexp(1.0, -m), {4, 6, 8, 10, 12});
      EXPECT_NEAR(c.fitted_S, std::log(k), 1e-12);
      for (const auto& s : c.samples) EXPECT_EQ(s.method, NetMethod::exact_oracle);
    }
  }
}

TEST(Entropy, GoldenMeanCountsMatchTransferMatrix) {
  const SystemSpec s = golden_mean_shift();
  const PointSet x = PointSet::whole(s);
  for (int m = 1; m <= 5; ++m) {
    const double eps = std::ldexp(1.0, -m);
    for (std::int64_t n = 1; n <= 16; ++n)
      EXPECT_EQ(exact_count(x, Window::interval(0, n - 1), eps),
                word_count(s.transitions, n + 2 * (m - 1)))
          << "m=" << m << " n=" << n;
    const EntropyCurve c = entropy_at_scale(x, eps, {4, 8, 12, 16});
    EXPECT_NEAR(c.fitted_S, std::log((1 + std::sqrt(5.0)) / 2), 1e-3);
  }
}

TEST(Entropy, Z2FullShift) {
  const PointSet x = PointSet::whole(full_shift(2, 2));
  const EntropyCurve c = entropy_at_scale(x, 0.25, {2, 3, 4, 5});
  // Counts are 2^((L+2)^2); the largest tail slope is between L = 4 and 5.
  EXPECT_NEAR(c.fitted_S, std::log(2.0) * (49 - 36) / (25 - 16), 1e-12);
}

TEST(Entropy, HilbertCubeClosedForm) {
  // S(X, 2^-m) = (m - 1) log 2: per window site one coordinate needs
  // ceil(2^(m-1)) balls, the dilation only adds a boundary term.
  const PointSet x = PointSet::whole(hilbert_cube_shift());
  EntropyOptions opt;
  opt.grid_step = 1.0 / 512;
  for (int m = 2; m <= 7; ++m) {
    const EntropyCurve c = entropy_at_scale(x, std::ldexp(1.0, -m), {2, 3, 4, 5, 6}, opt);
    EXPECT_NEAR(c.fitted_S, (m - 1) * std::log(2.0), 1e-9) << m;
    for (const auto& s : c.samples) {
      EXPECT_LE(s.lo, s.count);
      EXPECT_GE(s.hi, s.count);
    }
    EXPECT_LE(c.S_lo, c.fitted_S + 1e-12);
    EXPECT_GE(c.S_hi, c.fitted_S - 1e-12);
  }
}

TEST(Entropy, ProductIsAdditive) {
  const SystemCatalogEntry p =
      build_product({find_system("golden-mean"), find_system("full-shift-3")});
  const PointSet x = PointSet::whole(p.spec);
  const double eps = 0.125;
  const std::vector<std::int64_t> n = {4, 8, 12, 16};
  const double a = entropy_at_scale(PointSet::whole(golden_mean_shift()), eps, n).fitted_S;
  const double b = entropy_at_scale(PointSet::whole(full_shift(3)), eps, n).fitted_S;
  EXPECT_NEAR(entropy_at_scale(x, eps, n).fitted_S, a + b, 1e-9);
  const SystemCatalogEntry q =
      build_product({find_system("full-shift-2"), find_system("one-point")});
  EXPECT_NEAR(entropy_at_scale(PointSet::whole(q.spec), eps, n).fitted_S, std::log(2.0), 1e-12);
}

TEST(Entropy, WindowListValidation) {
  const PointSet x = PointSet::whole(full_shift(2));
  EXPECT_THROW(entropy_at_scale(x, 0.25, {2, 3}), UsageError);
  EXPECT_THROW(entropy_at_scale(x, 0.25, {2, 4, 3}), UsageError);
  EXPECT_THROW(entropy_at_scale(x, 0.0, {2, 3, 4}), UsageError);
}

TEST(Mmdim, FullShiftRatioAtSmallestScale) {
  std::vector<double> eps;
  for (int m = 1; m <= 6; ++m) eps.push_back(std::ldexp(1.0, -m));
  const MmdimEstimate e = mmdim_estimate(full_shift(2), eps, {4, 6, 8, 10, 12});
  EXPECT_TRUE(e.monotone);
  EXPECT_NEAR(e.upper, 1.0 / 6, 1e-12);
  EXPECT_EQ(e.upper, e.lower);
  EXPECT_EQ(mmdim_bound_report(mmdim_estimate(one_point_system(), eps, {2, 3, 4})),
            "mdim <= 0 <= 0");
}

TEST(Mmdim, HilbertRatioIsMMinusOneOverM) {
  std::vector<double> eps;
  for (int m = 3; m <= 7; ++m) eps.push_back(std::ldexp(1.0, -m));
  EntropyOptions opt;
  opt.grid_step = 1.0 / 512;
  const MmdimEstimate e = mmdim_estimate(hilbert_cube_shift(), eps, {2, 3, 4, 5, 6}, opt);
  ASSERT_EQ(e.points.size(), 5u);
  for (int m = 3; m <= 7; ++m) EXPECT_NEAR(e.points[m - 3].ratio, (m - 1.0) / m, 1e-9);
  EXPECT_NEAR(e.upper, 6.0 / 7, 1e-9);
  EXPECT_NEAR(e.lower, 6.0 / 7, 1e-9);
}

TEST(Mmdim, ExtractionRules) {
  // Non-monotone ratios: max/min over the last half.
  const MmdimEstimate e = extract_mmdim(
      "t", {{0.5, 0.3}, {0.25, 0.4}, {0.125, 1.0}, {0.0625, 1.2}}, 0.5);
  EXPECT_FALSE(e.monotone);
  EXPECT_NEAR(e.upper, 1.0 / std::log(8.0), 1e-12);
  EXPECT_NEAR(e.lower, 1.2 / std::log(16.0), 1e-12);
  EXPECT_LE(e.lower, e.upper);
  EXPECT_THROW(check_eps_list({0.5, 0.25}), UsageError);
  EXPECT_THROW(check_eps_list({0.25, 0.5, 0.125}), UsageError);
}

TEST(Mmdim, SubadditivityOfLogCounts) {
  // #(X, d_{n+m}, eps) <= #(X, d_n, eps/2) #(X, d_m, eps/2), checked directly
  // on the counts rather than through coding_bound_check.
  const PointSet x = PointSet::whole(golden_mean_shift());
  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t m = 1; m <= 6; ++m)
      EXPECT_LE(exact_count(x, Window::interval(0, n + m - 1), 0.25),
                exact_count(x, Window::interval(0, n - 1), 0.125) *
                    exact_count(x, Window::interval(0, m - 1), 0.125));
}

}  // namespace
}  // namespace mmdim
