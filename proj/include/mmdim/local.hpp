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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mmdim/entropy.hpp"
#include "mmdim/point.hpp"
#include "mmdim/point_set.hpp"

namespace mmdim {

struct BowenBallSpec {
  Point center;
  double delta = 0.25;
  std::int64_t M = 0;         // truncation radius: window [-M, M]^D
  std::int64_t margin_R = 0;  // used by local_entropy_with_margin
};

// {y : d_W(x, y) <= delta} as a cylinder. Symbolic: agreement on the sites
// within constraint_radius(delta) of W. Interval: y_n within delta 2^dist(n,W)
// of x_n on those sites.
PointSet bowen_ball_on(const SystemSpec& s, const Point& x, double delta, const Window& w);

// The finite-window ball B_delta(x, d_{[-M, M]^D}).
PointSet bowen_ball(const SystemSpec& s, const BowenBallSpec& spec);

struct LocalOptions {
  EntropyOptions entropy;
  std::int64_t max_M = 64;
  int threads = 1;
};

struct LocalEntropyReport {
  std::size_t center_id = 0;
  Point center;
  double delta = 0.0;
  double epsilon = 0.0;
  double S_local = 0.0;
  std::int64_t M_used = 0;
  bool converged = false;
  std::vector<std::pair<std::int64_t, double>> S_by_M;
  EntropyCurve curve;
};

// Smallest M >= start such that the balls for M, M+1, M+2 agree on `sites`
// (the sites any of the counting windows can see); capped at max_M.
std::pair<std::int64_t, bool> stable_radius(const SystemSpec& s, const Point& x,
                                            double delta, const std::vector<Site>& sites,
                                            std::int64_t start, std::int64_t max_M);

// S(B_delta(x, d_Z), eps) approximated by finite-window balls; reported at the
// largest M of the stable triple, with the values for smaller M kept in S_by_M.
LocalEntropyReport local_entropy(const SystemSpec& s, const BowenBallSpec& spec, double eps,
                                 const std::vector<std::int64_t>& window_sizes,
                                 const LocalOptions& opt = {});

struct LocalMmdimReport {
  MmdimEstimate estimate;
  std::vector<double> max_S;  // per eps: max over centers of S_local
  std::vector<std::vector<LocalEntropyReport>> reports;  // [eps][center]
};

LocalMmdimReport local_mmdim(const SystemSpec& s, double delta,
                             const std::vector<double>& eps_list,
                             const std::vector<Point>& centers,
                             const std::vector<std::int64_t>& window_sizes,
                             const LocalOptions& opt = {});

// #(B_delta(x, d_{[-R, L+R-1]^D}), d_{[0, L-1]^D}, eps).
struct MarginReport {
  std::int64_t R = 0;
  std::int64_t L = 0;
  Count count = 0;
  Count lo = 0;
  Count hi = 0;
};
MarginReport local_entropy_with_margin(const SystemSpec& s, const Point& x, double delta,
                                       std::int64_t R, std::int64_t L, double eps,
                                       const LocalOptions& opt = {});

struct GrowthRow {
  std::size_t center_id = 0;
  std::int64_t n = 0;
  Count count = 0;
  double g = 0.0;  // log count / n^D
};
struct GrowthReport {
  double delta = 0.0;
  double epsilon = 0.0;
  double a = 0.0;  // max over centers of S_local(delta, eps/4)
  double beta = 0.0;
  std::vector<GrowthRow> rows;
  double g_max = 0.0;  // max over centers of g at the largest n
  bool holds = false;  // g_max <= a + beta
};
GrowthReport bowen_growth_check(const SystemSpec& s, const std::vector<Point>& centers,
                                double delta, double eps,
                                const std::vector<std::int64_t>& n_list, double beta,
                                const std::vector<std::int64_t>& window_sizes,
                                const LocalOptions& opt = {});

struct HStarReport {
  double delta = 0.0;
  double value = 0.0;  // max over centers of S_local at the smallest eps
  double tolerance = 0.0;
  bool evidence = false;  // value <= tolerance
  std::vector<std::pair<double, double>> max_S_by_eps;
};
HStarReport h_star_estimate(const SystemSpec& s, double delta,
                            const std::vector<double>& eps_list,
                            const std::vector<Point>& centers,
                            const std::vector<std::int64_t>& window_sizes,
                            double tolerance = 1e-9, const LocalOptions& opt = {});

// Centers for sup over x: every pattern on the smallest [-r, r]^D with at
// least n admissible patterns (symbolic), or n low-discrepancy configurations
// snapped to the grid (interval: even indices constant, odd indices varying on
// [-2, 2]^D).
std::vector<Point> sample_centers(const SystemSpec& s, std::size_t n, std::uint64_t seed,
                                  double grid_step = 1.0 / 512);

}  // namespace mmdim
