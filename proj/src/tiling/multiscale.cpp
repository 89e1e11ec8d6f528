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

#include "mmdim/tiling/multiscale.hpp"

#include <set>

#include "mmdim/error.hpp"

namespace mmdim::tiling {

void check_multiscale_hypotheses(const Region& omega, const std::vector<CubeFamily>& families,
                                 const Rational& eta, std::int64_t scale_ratio) {
  if (families.empty()) throw UsageError("multiscale_select needs at least one family");
  if (!(eta > 0)) throw UsageError("eta must be positive");
  if (omega.empty()) throw PreconditionError("Omega must have positive volume");
  for (const auto& f : families) {
    if (f.empty()) throw UsageError("cube families must be nonempty");
    if (f.dim() != omega.dim()) throw UsageError("cube family dimension differs from Omega");
  }
  if (families.front().ell_max() < 1)
    throw PreconditionError("hypothesis (1): ell_max(C_1) = " +
                            to_string(families.front().ell_max()) + " < 1");
  for (std::size_t k = 0; k + 1 < families.size(); ++k)
    if (families[k + 1].ell_min() < families[k].ell_max() * scale_ratio)
      throw PreconditionError("hypothesis (1): ell_min(C_" + std::to_string(k + 2) + ") = " +
                              to_string(families[k + 1].ell_min()) + " < " +
                              std::to_string(scale_ratio) + " * ell_max(C_" +
                              std::to_string(k + 1) + ")");
  const Rational boundary = r_boundary(omega, families.back().ell_max()).volume();
  const Rational budget = eta / 3 * omega.volume();
  if (!(boundary < budget))
    throw PreconditionError("hypothesis (2): vol(boundary(Omega, " +
                            to_string(families.back().ell_max()) + ")) = " +
                            to_string(boundary) + " is not below eta/3 vol(Omega) = " +
                            to_string(budget));
  for (std::size_t k = 0; k < families.size(); ++k)
    if (!Region::from_cubes(families[k]).contains(omega))
      throw PreconditionError("hypothesis (3): Omega is not covered by C_" +
                              std::to_string(k + 1));
}

CubeFamily grid_cover(const Region& omega, const Rational& side,
                      const std::vector<Rational>& offset) {
  const int d = omega.dim();
  if (!(side > 0)) throw UsageError("grid_cover: side must be positive");
  if (static_cast<int>(offset.size()) != d) throw UsageError("grid_cover: offset dimension");
  if (omega.empty()) throw UsageError("grid_cover: Omega is empty");
  // Grid cube i meets the closed box [lo, hi] iff
  // ceil((lo - o) / side) - 1 <= i <= floor((hi - o) / side) on every axis.
  std::set<std::vector<Count>> keys;
  for (const Box& b : omega.boxes()) {
    std::vector<Count> first(d), last(d);
    for (int i = 0; i < d; ++i) {
      first[i] = -floor_of((offset[i] - b.lo[i]) / side) - 1;
      last[i] = floor_of((b.hi[i] - offset[i]) / side);
    }
    std::vector<Count> idx = first;
    while (true) {
      keys.insert(idx);
      int i = 0;
      for (; i < d; ++i) {
        if (idx[i] < last[i]) {
          ++idx[i];
          break;
        }
        idx[i] = first[i];
      }
      if (i == d) break;
    }
  }
  CubeFamily out;
  for (const auto& k : keys) {
    std::vector<Rational> u(d);
    for (int i = 0; i < d; ++i) u[i] = offset[i] + Rational(k[i]) * side;
    out.push_back(Cube(std::move(u), side));
  }
  return out;
}

MultiscaleResult multiscale_select(const Region& omega, const std::vector<CubeFamily>& families,
                                   const Rational& eta, const MultiscaleOptions& opt) {
  const auto count = static_cast<std::int64_t>(families.size());
  const std::int64_t ratio = opt.scale_ratio.value_or(count);
  check_multiscale_hypotheses(omega, families, eta, ratio);
  const int d = omega.dim();

  MultiscaleResult res;
  res.families = count;
  res.scale_ratio = ratio;
  res.eta = eta;
  res.omega_volume = omega.volume();
  const Rational budget = eta / 3 * res.omega_volume;
  const Rational three_d = pow(Rational(3), d);

  Region rest = omega;  // Omega_k
  for (std::size_t k = 0; k < families.size(); ++k) {
    const std::size_t fi = families.size() - 1 - k;  // C_{K-k}
    const CubeFamily& fam = families[fi];
    MultiscaleStep step;
    step.k = k;
    step.family = fi + 1;
    step.r = fam.ell_max();
    const Region inner = rest.empty() ? Region(d) : r_interior(rest, step.r);
    step.interior_volume = inner.volume();
    if (!res.claim_k && step.interior_volume < budget) res.claim_k = k;

    std::vector<std::size_t> ids;
    CubeFamily candidates;
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (!inner.empty() && inner.meets_closed(fam[i].box())) {
        ids.push_back(i);
        candidates.push_back(fam[i]);
      }
    step.candidates = ids.size();
    if (!candidates.empty()) {
      const VitaliResult v = vitali_select(candidates, opt.rule);
      if (!v.all_hold()) throw PropertyViolation("Vitali step failed: " + v.describe());
      step.selected = v.selected.size();
      step.selected_volume = v.selected_volume;
      for (std::size_t j : v.selected) {
        res.chosen.emplace_back(fi, ids[j]);
        res.selection.push_back(candidates[j]);
      }
      rest = rest.subtract(Region::from_cubes(v.family));
    }
    step.vitali_bound = step.selected_volume * three_d >= step.interior_volume;
    if (!step.vitali_bound)
      throw PropertyViolation("step " + std::to_string(k) +
                              ": selected volume below 3^-D vol(interior)");
    res.steps.push_back(step);
  }

  res.disjoint = pairwise_disjoint(res.selection.cubes(), opt.rule);
  const Region covered = res.selection.empty() ? Region(d) : Region::from_cubes(res.selection);
  res.contained = omega.contains(covered);
  const Region residual = omega.subtract(covered);
  res.residual_volume = residual.volume();
  res.dilated_residual_volume = b_r(residual, Rational(1)).volume();
  res.residual_small = res.dilated_residual_volume < eta * res.omega_volume;
  if (!res.claim_k)
    throw PropertyViolation("no step had vol(int(Omega_k, r)) < eta/3 vol(Omega): " +
                            res.describe());
  if (!res.all_hold()) throw PropertyViolation("multiscale conclusions fail: " + res.describe());
  return res;
}

std::string MultiscaleResult::describe() const {
  std::string s = std::to_string(selection.size()) + " cubes from " + std::to_string(families) +
                  " families (ratio " + std::to_string(scale_ratio) + "); disjoint=" +
                  (disjoint ? "yes" : "NO") + " contained=" + (contained ? "yes" : "NO") +
                  " vol(B_1(residual))=" + to_string(dilated_residual_volume) + " vs eta vol=" +
                  to_string(eta * omega_volume) + (residual_small ? "" : " (FAILS)");
  return s;
}

}  // namespace mmdim::tiling
