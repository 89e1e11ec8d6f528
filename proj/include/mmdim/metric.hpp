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

#include <cstdint>

#include "mmdim/lattice.hpp"
#include "mmdim/point.hpp"
#include "mmdim/system.hpp"

namespace mmdim {

// d(x, y): dyadic sup metric for symbolic systems, weighted sup metric for
// interval products, max over factors for products.
double base_metric(const SystemSpec& s, const Point& x, const Point& y);

// T^a x, with (T^a x)_n = x_{n+a}.
Point act(const SystemSpec& s, const Site& a, const Point& x);

// d_w(x, y) = max over a in w of d(T^a x, T^a y), evaluated literally.
double orbit_metric(const SystemSpec& s, const Window& w, const Point& x,
                    const Point& y);

// When the represented points agree with the true configurations on
// [-radius, radius]^D, base_metric differs from the true distance by at most
// this amount (sites outside the ball carry weight <= 2^-(radius+1)).
double truncation_error_bound(std::int64_t radius);

// Radius t such that d_w(x, y) <= eps iff the constraint on sites within
// distance t of w holds; -1 when eps >= 1 and nothing is constrained.
// Symbolic: agreement on w.dilated(t). Interval: |x_n - y_n| <= eps 2^dist(n,w).
std::int64_t constraint_radius(double eps);

}  // namespace mmdim
