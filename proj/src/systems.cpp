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

#include "mmdim/systems.hpp"

#include "mmdim/error.hpp"

namespace mmdim {

SystemSpec full_shift(int symbols, int lattice_dim) {
  SystemSpec s;
  s.id = "full-shift-" + std::to_string(symbols) + (lattice_dim > 1 ? "-z" + std::to_string(lattice_dim) : "");
  s.lattice_dim = lattice_dim;
  s.point_kind = PointKind::symbolic;
  s.alphabet_size = symbols;
  s.metric_kind = MetricKind::dyadic_sup;
  s.diameter = symbols > 1 ? 1.0 : 0.0;
  validate(s);
  return s;
}

SystemSpec golden_mean_shift() {
  SystemSpec s = full_shift(2);
  s.id = "golden-mean";
  s.transitions = {{1, 1}, {1, 0}};  // no two adjacent 1s
  validate(s);
  return s;
}

SystemSpec interval_product_shift(int coordinate_dim) {
  SystemSpec s;
  s.id = "interval-product-" + std::to_string(coordinate_dim);
  s.point_kind = PointKind::interval_product;
  s.coordinate_dim = coordinate_dim;
  s.metric_kind = MetricKind::weighted_sup;
  s.diameter = 1.0;
  validate(s);
  return s;
}

SystemSpec hilbert_cube_shift() {
  SystemSpec s = interval_product_shift(1);
  s.id = "hilbert-cube";
  return s;
}

SystemSpec one_point_system(int lattice_dim) {
  SystemSpec s = full_shift(1, lattice_dim);
  s.id = lattice_dim > 1 ? "one-point-z" + std::to_string(lattice_dim) : "one-point";
  return s;
}

const std::vector<SystemCatalogEntry>& catalog() {
  static const std::vector<SystemCatalogEntry> entries = [] {
    std::vector<SystemCatalogEntry> v;
    v.push_back({full_shift(2), "log 2 for all eps < 1", 0.0,
                 "S is constant, so S/log(1/eps) -> 0", 1.0, "cylinder"});
    v.push_back({full_shift(3), "log 3 for all eps < 1", 0.0,
                 "S is constant, so S/log(1/eps) -> 0", 1.0, "cylinder"});
    v.push_back({golden_mean_shift(), "log((1+sqrt 5)/2) for all eps < 1", 0.0,
                 "S is constant, so S/log(1/eps) -> 0", 1.0, "transfer_matrix"});
    v.push_back({hilbert_cube_shift(), "(m-1) log 2 at eps = 2^-m", 1.0,
                 "analytic covering count: ratio (m-1)/m", std::nullopt, "grid"});
    v.push_back({interval_product_shift(2), "2 (m-1) log 2 at eps = 2^-m", 2.0,
                 "analytic covering count: ratio 2(m-1)/m", std::nullopt, "grid"});
    SystemSpec z2 = full_shift(2, 2);
    v.push_back({z2, "log 2 for all eps < 1 (per site of Z^2)", 0.0,
                 "S is constant, so S/log(1/eps) -> 0", 1.0, "cylinder"});
    v.push_back({one_point_system(), "0", 0.0, "single orbit", std::nullopt, "cylinder"});
    return v;
  }();
  return entries;
}

const SystemCatalogEntry& find_system(const std::string& id) {
  for (const auto& e : catalog())
    if (e.spec.id == id) return e;
  std::string known;
  for (const auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.spec.id;
  throw UsageError("system: unknown id '" + id + "' (known: " + known + ")");
}

SystemCatalogEntry build_product(const std::vector<SystemCatalogEntry>& entries) {
  if (entries.empty()) throw UsageError("build_product needs at least one factor");
  SystemCatalogEntry p;
  p.spec.id = "";
  p.spec.point_kind = PointKind::product_of_systems;
  p.spec.lattice_dim = entries.front().spec.lattice_dim;
  p.spec.metric_kind = MetricKind::dyadic_sup;
  bool known = true;
  double mmdim = 0.0;
  p.oracle = "cylinder";
  for (const auto& e : entries) {
    if (e.spec.lattice_dim != p.spec.lattice_dim)
      throw UsageError("build_product: factors have lattice_dim " +
                       std::to_string(p.spec.lattice_dim) + " and " +
                       std::to_string(e.spec.lattice_dim));
    p.spec.id += (p.spec.id.empty() ? "" : "*") + e.spec.id;
    p.spec.factors.push_back(e.spec);
    if (e.spec.metric_kind == MetricKind::weighted_sup)
      p.spec.metric_kind = MetricKind::weighted_sup;
    p.known_S += (p.known_S.empty() ? "" : " + ") + (e.known_S.empty() ? "?" : e.known_S);
    if (e.known_mmdim) mmdim += *e.known_mmdim; else known = false;
    if (e.oracle == "grid") p.oracle = "grid";
    else if (e.oracle == "transfer_matrix" && p.oracle != "grid") p.oracle = "transfer_matrix";
  }
  p.spec.diameter = structural_diameter(p.spec);
  if (known) p.known_mmdim = mmdim;
  p.mmdim_note = "sum of the factor values";
  validate(p.spec);
  return p;
}

}  // namespace mmdim
