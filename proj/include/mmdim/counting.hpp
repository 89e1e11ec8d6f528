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

#include <vector>

#include "mmdim/lattice.hpp"
#include "mmdim/numeric.hpp"
#include "mmdim/point_set.hpp"

namespace mmdim {

// Sites on which two points must be close for d_w(x, y) <= eps: the sites
// within distance constraint_radius(eps) of w. Empty when eps >= 1.
std::vector<Site> constrained_sites(const Window& w, double eps);

// True when exact_count can handle K: whole spaces and cylinders of every
// supported system, and explicit clouds of symbolic (ultrametric) systems.
bool oracle_eligible(const PointSet& k);

// Exact #(K, d_w, eps), centers taken anywhere in X.
//
// Balls of d_w are products over the constrained sites: agreement for
// symbolic channels, |x_n - y_n| <= eps 2^dist(n,w) for interval channels.
// Symbolic counts are the number of distinct restrictions to those sites
// (closed balls of an ultrametric partition the space). Interval counts
// factor over coordinates; per coordinate an interval of length len needs
// ceil(len / 2r) balls, or ceil(p / (floor(2r/h) + 1)) for p grid points of
// step h.
Count exact_count(const PointSet& k, const Window& w, double eps);

// Number of restrictions to `counted` of points of a one-dimensional
// one-step subshift of finite type lying in the cylinder. Positions are
// scanned left to right keeping, per partial word, the set of symbols the
// configuration may show at the current site.
Count sft_restriction_count(const SystemSpec& s, const Cylinder& c,
                            const std::vector<Site>& counted);

// Independent enclosure of the continuum count of an interval system from its
// grid discretization K_h: [#(K_h, eps + h), #(K_h, eps - h)]. Requires
// 0 < h < eps.
struct GridBracket {
  Count lo;
  Count hi;
};
GridBracket grid_bracket(const PointSet& k, const Window& w, double eps, double h);

}  // namespace mmdim
