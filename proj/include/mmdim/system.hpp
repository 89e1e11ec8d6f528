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

#include <string>
#include <vector>

namespace mmdim {

enum class PointKind { symbolic, interval_product, product_of_systems };
enum class MetricKind { dyadic_sup, weighted_sup };

std::string to_string(PointKind k);
std::string to_string(MetricKind k);
PointKind parse_point_kind(const std::string& s);
MetricKind parse_metric_kind(const std::string& s);

// A Z^D action by shifts on a compact product space together with its base
// metric.
//
//   symbolic          X is a closed shift-invariant subset of {0..k-1}^(Z^D);
//                     d(x,y) = 2^-min{|n| : x_n != y_n}  (dyadic_sup).
//   interval_product  X = ([0,1]^m)^(Z^D);
//                     d(x,y) = sup_n 2^-|n| |x_n - y_n|   (weighted_sup).
//   product_of_systems  X = X_1 x ... x X_r with d = max_i d_i.
//
// |n| is the sup norm. Both base metrics have diameter 1 (0 for a one-letter
// alphabet).
struct SystemSpec {
  std::string id;
  int lattice_dim = 1;
  PointKind point_kind = PointKind::symbolic;
  int alphabet_size = 2;
  int coordinate_dim = 1;
  MetricKind metric_kind = MetricKind::dyadic_sup;
  double diameter = 1.0;
  // transitions[a][b] != 0 iff b may follow a. Empty means the full shift.
  // Only one-step subshifts of finite type in D = 1 are supported.
  std::vector<std::vector<int>> transitions;
  std::vector<SystemSpec> factors;

  bool is_full_shift() const {
    return point_kind == PointKind::symbolic && transitions.empty();
  }
  // Number of reals (or symbols) stored per lattice site.
  int channels() const {
    return point_kind == PointKind::interval_product ? coordinate_dim : 1;
  }
  bool allows(int a, int b) const {
    return transitions.empty() || transitions[a][b] != 0;
  }
};

// Throws UsageError naming the offending field.
void validate(const SystemSpec& s);

// Diameter implied by the structure (1, or 0 for a single point).
double structural_diameter(const SystemSpec& s);

}  // namespace mmdim
