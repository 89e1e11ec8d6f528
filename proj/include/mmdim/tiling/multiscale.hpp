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
#include <utility>
#include <vector>

#include "mmdim/numeric.hpp"
#include "mmdim/tiling/cube.hpp"
#include "mmdim/tiling/region.hpp"
#include "mmdim/tiling/vitali.hpp"

namespace mmdim::tiling {

struct MultiscaleOptions {
  // Required ratio between consecutive scales in hypothesis (1); defaults to
  // the number of families.
  std::optional<std::int64_t> scale_ratio;
  OverlapRule rule = OverlapRule::interior;
};

// One round of the construction: cubes of family `family` (1-based) meeting
// int(Omega_k, r), r = ell_max of that family, thinned by vitali_select.
struct MultiscaleStep {
  std::size_t k = 0;
  std::size_t family = 0;
  Rational r = 0;
  Rational interior_volume = 0;
  std::size_t candidates = 0;
  std::size_t selected = 0;
  Rational selected_volume = 0;
  bool vitali_bound = false;  // 3^D vol(selected) >= vol(interior)
};

struct MultiscaleResult {
  std::int64_t families = 0;
  std::int64_t scale_ratio = 0;
  Rational eta = 0;
  // (family index, cube index) of every selected cube.
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  CubeFamily selection;
  std::vector<MultiscaleStep> steps;
  Rational omega_volume = 0;
  Rational residual_volume = 0;          // vol(Omega \ union A)
  Rational dilated_residual_volume = 0;  // vol(B_1(Omega \ union A))
  std::optional<std::size_t> claim_k;    // some k with vol(int) < eta/3 vol(Omega)
  bool disjoint = false;
  bool contained = false;
  bool residual_small = false;  // vol(B_1(residual)) < eta vol(Omega)
  bool all_hold() const {
    return disjoint && contained && residual_small && claim_k.has_value();
  }
  std::string describe() const;
};

// Throws PreconditionError naming the failed clause:
//   (1) ell_max(C_1) >= 1 and ell_min(C_{k+1}) >= ratio * ell_max(C_k);
//   (2) vol(boundary(Omega, ell_max(C_K))) < eta/3 vol(Omega);
//   (3) Omega is covered by every family.
void check_multiscale_hypotheses(const Region& omega, const std::vector<CubeFamily>& families,
                                 const Rational& eta, std::int64_t scale_ratio);

// Disjoint A from C_1 u ... u C_K with union A in Omega and
// vol(B_1(Omega \ union A)) < eta vol(Omega). Families are used from the
// largest scale down. Throws PropertyViolation when the inner claim or a
// conclusion fails.
// Cubes offset + side * (i + [0, 1]^D), i in Z^D, that meet the closure of
// Omega; satisfies hypothesis (3) for the returned family.
CubeFamily grid_cover(const Region& omega, const Rational& side,
                      const std::vector<Rational>& offset);

MultiscaleResult multiscale_select(const Region& omega, const std::vector<CubeFamily>& families,
                                   const Rational& eta, const MultiscaleOptions& opt = {});

}  // namespace mmdim::tiling
