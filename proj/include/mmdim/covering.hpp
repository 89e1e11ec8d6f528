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
#include <optional>
#include <string>
#include <vector>

#include "mmdim/lattice.hpp"
#include "mmdim/numeric.hpp"
#include "mmdim/point_set.hpp"

namespace mmdim {

enum class NetMethod { exact_oracle, greedy_span, greedy_separated };
std::string to_string(NetMethod m);

struct NetResult {
  double epsilon = 0.0;
  Window window = Window::interval(0, 0);
  NetMethod method = NetMethod::exact_oracle;
  std::vector<Point> centers;  // may be empty when too many to materialize
  Count cardinality = 0;
  Count lower_bound = 0;
  Count upper_bound = 0;
  std::vector<std::string> warnings;
};

struct NetOptions {
  // Box enumerated for greedy methods; defaults to the hull of the
  // constrained sites and the cylinder pins.
  std::optional<Window> enumeration;
  std::size_t enumeration_cap = std::size_t{1} << 20;
  // Exact results list centers only up to this many.
  std::size_t center_cap = 4096;
};

// Enumeration-order greedy cover: the first uncovered point becomes a center
// and covers every enumerated point within eps. lower_bound comes from a
// greedy (2 eps)-separated set.
NetResult greedy_spanning(const PointSet& k, const Window& w, double eps,
                          const NetOptions& opt = {});

// Keeps a point when it is farther than eps from every kept point. The
// result is maximal, hence eps-spanning for the enumerated points; the same
// construction at 2 eps gives the lower bound.
NetResult greedy_separated(const PointSet& k, const Window& w, double eps,
                           const NetOptions& opt = {});

// Exact #(K, d_w, eps) (see exact_count) with a representative per ball.
NetResult exact_covering_number(const PointSet& k, const Window& w, double eps,
                                const NetOptions& opt = {});

// Box used by default when enumerating K for the window w at scale eps.
Window default_enumeration_box(const PointSet& k, const Window& w, double eps);

// True iff d_w(x, y) <= eps, decided from the constrained sites only.
bool within(const SystemSpec& s, const Window& w, double eps, const Point& x,
            const Point& y);

// #(F, d_n, eps) <= prod_i #(T^{t_i} F, d_{t_{i+1} - t_i}, eps/2) for a
// one-dimensional system, and its window form
// #(F, d_Omega, eps) <= prod_n #(F, d_{Omega_n}, eps/2) for any cover of Omega
// by windows Omega_n.
struct CodingReport {
  Count lhs = 0;
  Count rhs = 0;
  std::vector<Count> factors;
  bool holds = false;
  std::string describe() const;
};
// Throws UsageError for bad cut points and PropertyViolation when the
// inequality fails.
CodingReport coding_bound_check(const PointSet& f, const std::vector<std::int64_t>& cuts,
                                double eps);
CodingReport coding_bound_check(const PointSet& f, const Window& omega,
                                const std::vector<Window>& pieces, double eps);

// #(X, d_w, eps) <= #(X, d_{ {0,1}^D }, eps/2)^e with e = prod_i (hi_i - lo_i + 2),
// the volume of the unit dilation of the real box spanned by w.
struct TrivialBoundReport {
  Count lhs = 0;
  Count base = 0;
  std::int64_t exponent = 0;
  Count rhs = 0;
  bool holds = false;
  std::string describe() const;
};
TrivialBoundReport trivial_bound_check(const SystemSpec& s, const Window& w, double eps);

}  // namespace mmdim
