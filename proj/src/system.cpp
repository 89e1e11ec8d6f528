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

#include "mmdim/system.hpp"

#include <algorithm>
#include <cmath>

#include "mmdim/error.hpp"

namespace mmdim {

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::symbolic: return "symbolic";
    case PointKind::interval_product: return "interval_product";
    case PointKind::product_of_systems: return "product_of_systems";
  }
  return "?";
}

std::string to_string(MetricKind k) {
  return k == MetricKind::dyadic_sup ? "dyadic_sup" : "weighted_sup";
}

PointKind parse_point_kind(const std::string& s) {
  if (s == "symbolic") return PointKind::symbolic;
  if (s == "interval_product") return PointKind::interval_product;
  if (s == "product_of_systems") return PointKind::product_of_systems;
  throw UsageError("point_kind: unknown value '" + s + "'");
}

MetricKind parse_metric_kind(const std::string& s) {
  if (s == "dyadic_sup") return MetricKind::dyadic_sup;
  if (s == "weighted_sup") return MetricKind::weighted_sup;
  throw UsageError("metric_kind: unknown value '" + s + "'");
}

double structural_diameter(const SystemSpec& s) {
  switch (s.point_kind) {
    case PointKind::symbolic: return s.alphabet_size > 1 ? 1.0 : 0.0;
    case PointKind::interval_product: return 1.0;
    case PointKind::product_of_systems: {
      double d = 0.0;
      for (const auto& f : s.factors) d = std::max(d, structural_diameter(f));
      return d;
    }
  }
  return 1.0;
}

void validate(const SystemSpec& s) {
  const std::string where = "system '" + s.id + "': ";
  if (s.id.empty()) throw UsageError("system: id must be nonempty");
  if (s.lattice_dim < 1 || s.lattice_dim > 3)
    throw UsageError(where + "lattice_dim must be 1, 2 or 3");
  switch (s.point_kind) {
    case PointKind::symbolic: {
      if (s.metric_kind != MetricKind::dyadic_sup)
        throw UsageError(where + "metric_kind must be dyadic_sup for symbolic");
      if (s.alphabet_size < 1 || s.alphabet_size > 16)
        throw UsageError(where + "alphabet_size must be in 1..16");
      if (!s.transitions.empty()) {
        if (s.lattice_dim != 1)
          throw UsageError(where + "transitions are only supported for D = 1");
        const auto k = static_cast<std::size_t>(s.alphabet_size);
        if (s.transitions.size() != k)
          throw UsageError(where + "transitions must be alphabet_size square");
        for (std::size_t a = 0; a < k; ++a) {
          if (s.transitions[a].size() != k)
            throw UsageError(where + "transitions must be alphabet_size square");
          bool out = false, in = false;
          for (std::size_t b = 0; b < k; ++b) {
            out = out || s.transitions[a][b] != 0;
            in = in || s.transitions[b][a] != 0;
          }
          // Every admissible word must extend to a bi-infinite point.
          if (!out || !in)
            throw UsageError(where + "transitions must be essential (symbol " +
                             std::to_string(a) + " lacks a successor or predecessor)");
        }
      }
      break;
    }
    case PointKind::interval_product:
      if (s.metric_kind != MetricKind::weighted_sup)
        throw UsageError(where + "metric_kind must be weighted_sup for interval_product");
      if (s.coordinate_dim < 1 || s.coordinate_dim > 8)
        throw UsageError(where + "coordinate_dim must be in 1..8");
      break;
    case PointKind::product_of_systems:
      if (s.factors.empty()) throw UsageError(where + "factors must be nonempty");
      for (const auto& f : s.factors) {
        validate(f);
        if (f.lattice_dim != s.lattice_dim)
          throw UsageError(where + "factors must share lattice_dim");
      }
      break;
  }
  if (std::abs(s.diameter - structural_diameter(s)) > 0.0)
    throw UsageError(where + "diameter must equal the exact diameter " +
                     std::to_string(structural_diameter(s)));
}

}  // namespace mmdim
