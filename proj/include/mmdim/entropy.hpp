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

#include "mmdim/covering.hpp"
#include "mmdim/numeric.hpp"
#include "mmdim/point_set.hpp"

namespace mmdim {

enum class FitKind { tail_slope, linear_regression };
std::string to_string(FitKind k);
FitKind parse_fit_kind(const std::string& s);

struct EntropyOptions {
  FitKind fit = FitKind::tail_slope;
  double tail_fraction = 0.5;
  // Interval systems: grid step of the independent bracket (0 disables it).
  double grid_step = 0.0;
  NetOptions net;
};

// One window size L: the window {0..L-1}^D of volume L^D and the count
// #(K, d_window, eps) with its enclosure [lo, hi].
struct EntropySample {
  std::int64_t size = 0;
  std::int64_t volume = 0;
  NetMethod method = NetMethod::exact_oracle;
  Count count = 0;
  Count lo = 0;
  Count hi = 0;
};

struct EntropyCurve {
  double epsilon = 0.0;
  std::vector<EntropySample> samples;
  double fitted_S = 0.0;
  FitKind fit_kind = FitKind::tail_slope;
  std::size_t tail_start = 0;
  // Range of the tail-slope maximum allowed by the count enclosures.
  double S_lo = 0.0;
  double S_hi = 0.0;
  std::vector<std::string> warnings;
};

// The count used for one (window, eps) cell: exact when possible (plus the
// grid bracket for interval systems), greedy bracket otherwise.
EntropySample count_cell(const PointSet& k, const Window& w, double eps,
                         const EntropyOptions& opt);

// S(K, eps) from windows {0..L-1}^D for the given increasing sizes (at least
// three). fitted_S is the largest slope of log count against volume between
// consecutive samples of the tail.
EntropyCurve entropy_at_scale(const PointSet& k, double eps,
                              const std::vector<std::int64_t>& window_sizes,
                              const EntropyOptions& opt = {});

// Refits an existing curve (e.g. with another fit kind or tail).
void fit_curve(EntropyCurve* c, FitKind fit, double tail_fraction);

struct MmdimPoint {
  double epsilon = 0.0;
  double S = 0.0;
  double ratio = 0.0;  // S / log(1/eps)
};

struct MmdimEstimate {
  std::string system_id;
  std::vector<MmdimPoint> points;
  double upper = 0.0;
  double lower = 0.0;
  std::pair<double, double> epsilon_range{0.0, 0.0};
  // S/log(1/eps) monotone over the sampled range, so both bounds are the
  // value at the smallest eps.
  bool monotone = false;
  std::size_t tail_start = 0;
  std::vector<EntropyCurve> curves;
  std::vector<std::string> warnings;
};

// Checks that eps_list has at least three strictly decreasing values in (0,1).
void check_eps_list(const std::vector<double>& eps_list);

// Upper/lower from (eps, S) pairs: the value at the smallest eps when the
// ratios are monotone, else max/min over the last ceil(n * tail_fraction).
MmdimEstimate extract_mmdim(const std::string& system_id,
                            const std::vector<std::pair<double, double>>& eps_s,
                            double tail_fraction = 0.5);

MmdimEstimate mmdim_estimate(const SystemSpec& s, const std::vector<double>& eps_list,
                             const std::vector<std::int64_t>& window_sizes,
                             const EntropyOptions& opt = {});

// "mdim <= lower <= upper" with the computed numbers.
std::string mmdim_bound_report(const MmdimEstimate& e);

}  // namespace mmdim
