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

#include <optional>
#include <string>
#include <vector>

#include "mmdim/system.hpp"

namespace mmdim {

struct SystemCatalogEntry {
  SystemSpec spec;
  std::string known_S;  // closed form of S(X, eps), empty if unknown
  std::optional<double> known_mmdim;
  std::string mmdim_note;  // where the value comes from
  std::optional<double> expansivity_constant;
  std::string oracle;  // cylinder, transfer_matrix or grid
};

SystemSpec full_shift(int symbols, int lattice_dim = 1);
SystemSpec golden_mean_shift();
SystemSpec hilbert_cube_shift();
SystemSpec interval_product_shift(int coordinate_dim);
SystemSpec one_point_system(int lattice_dim = 1);

// full-shift-2, full-shift-3, golden-mean, hilbert-cube, interval-product-2,
// full-shift-2-z2, one-point.
const std::vector<SystemCatalogEntry>& catalog();

// Throws UsageError for unknown ids.
const SystemCatalogEntry& find_system(const std::string& id);

// Product with the max of the factor metrics. Throws UsageError when the
// lattice dimensions differ.
SystemCatalogEntry build_product(const std::vector<SystemCatalogEntry>& entries);

}  // namespace mmdim
