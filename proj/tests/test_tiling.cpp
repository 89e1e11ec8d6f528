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

#include <gtest/gtest.h>

#include <random>

#include "mmdim/error.hpp"
#include "mmdim/tiling/multiscale.hpp"
#include "mmdim/tiling/raster.hpp"
#include "mmdim/tiling/region.hpp"
#include "mmdim/tiling/vitali.hpp"

namespace mmdim::tiling {
namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

Box box2(long x0, long y0, long x1, long y1) { return Box{{q(x0), q(y0)}, {q(x1), q(y1)}}; }

// Random union of grid-aligned boxes inside [0, 12]^D.
std::vector<Box> random_boxes(int dim, int n, std::mt19937_64& rng) {
  std::vector<Box> out;
  for (int k = 0; k < n; ++k) {
    Box b;
    for (int i = 0; i < dim; ++i) {
      const long a = static_cast<long>(rng() % 10), len = static_cast<long>(rng() % 4 + 1);
      b.lo.push_back(q(a));
      b.hi.push_back(q(a + len));
    }
    out.push_back(b);
  }
  return out;
}

Raster raster_of(const SlabSet& s, int dim) {
  return Raster::rasterize(s, std::vector<Rational>(dim, q(-4)), q(1),
                           std::vector<std::int64_t>(dim, 24));
}

TEST(SlabSet, BooleanOpsMatchRaster) {
  std::mt19937_64 rng(3);
  for (int dim = 1; dim <= 3; ++dim)
    for (int t = 0; t < 40; ++t) {
      const SlabSet a = SlabSet::from_boxes(dim, random_boxes(dim, 5, rng));
      const SlabSet b = SlabSet::from_boxes(dim, random_boxes(dim, 5, rng));
      const Raster ra = raster_of(a, dim), rb = raster_of(b, dim);
      EXPECT_EQ(a.volume(), ra.volume());
      EXPECT_EQ(a.unite(b).volume(), ra.unite(rb).volume());
      EXPECT_EQ(a.intersect(b).volume(), ra.intersect(rb).volume());
      EXPECT_EQ(a.subtract(b).volume(), ra.subtract(rb).volume());
      EXPECT_EQ(a.unite(b).volume() + a.intersect(b).volume(), a.volume() + b.volume());
      EXPECT_EQ(raster_of(a.dilate(q(2)), dim), ra.dilate(2));
      EXPECT_EQ(ra.to_slab_set(), a);
      // Canonical form: the same set from its own boxes compares equal.
      EXPECT_EQ(SlabSet::from_boxes(dim, a.boxes()), a);
    }
}

TEST(Region, InteriorAndBoundaryOfSquare) {
  const Region sq = Region::from_box(box2(0, 0, 10, 10));
  EXPECT_EQ(r_interior(sq, q(1)).volume(), q(64));
  EXPECT_EQ(b_r(sq, q(1)).volume(), q(144));
  EXPECT_EQ(r_boundary(sq, q(1)).volume(), q(144 - 64));
  EXPECT_EQ(r_interior(sq, q(1, 2)).volume(), q(81));
  EXPECT_TRUE(r_interior(sq, q(5)).empty());
}

TEST(Region, RasterKindAgreesWithBoxUnion) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Region a = Region::from_boxes(2, random_boxes(2, 6, rng));
    const Region r = a.to_raster(q(1, 2), {q(0), q(0)}, 8);
    EXPECT_EQ(r.kind(), Region::Kind::raster);
    EXPECT_EQ(r.volume(), a.volume());
    for (long k : {1, 2}) {
      EXPECT_EQ(r_interior(r, q(k)).volume(), r_interior(a, q(k)).volume());
      EXPECT_EQ(b_r(r, q(k)).volume(), b_r(a, q(k)).volume());
      EXPECT_EQ(r_boundary(r, q(k)).volume(), r_boundary(a, q(k)).volume());
    }
  }
}

TEST(Region, RasterRoundsRadiusUpWithNote) {
  const Region a = Region::from_box(box2(0, 0, 4, 4)).to_raster(q(1), {q(0), q(0)}, 4);
  const Region d = b_r(a, q(1, 2));
  EXPECT_EQ(d.volume(), q(36));
  EXPECT_FALSE(d.notes().empty());
}

// Quarter-unit cells of [-2, 12)^D; random families have corners and sides on
// the 1/4 grid, so marking cells is exact.
std::vector<char> mark_cells(int d, const std::vector<Box>& boxes) {
  const long n = 56;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  std::vector<char> cells(static_cast<std::size_t>(total), 0);
  for (const auto& b : boxes) {
    std::vector<long> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = static_cast<long>(floor_of(b.lo[i] * 4).convert_to<long>()) + 8;
      hi[i] = static_cast<long>(floor_of(b.hi[i] * 4).convert_to<long>()) + 8;
    }
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      bool in = true;
      for (int i = 0; i < d; ++i, rest /= n) in = in && rest % n >= lo[i] && rest % n < hi[i];
      if (in) cells[static_cast<std::size_t>(idx)] = 1;
    }
  }
  return cells;
}

// Postconditions checked by brute force: pairwise interiors, coverage on the
// quarter grid, and the volume bound.
void brute_force_vitali(const CubeFamily& f, const VitaliResult& v) {
  const int d = f.dim();
  for (std::size_t i = 0; i < v.selected.size(); ++i)
    for (std::size_t j = i + 1; j < v.selected.size(); ++j)
      ASSERT_FALSE(interiors_meet(f[v.selected[i]].box(), f[v.selected[j]].box()));
  std::vector<Box> tripled;
  for (std::size_t i : v.selected) tripled.push_back(f[i].tripled().box());
  const auto in = mark_cells(d, f.boxes());
  const auto cover = mark_cells(d, tripled);
  long in_cells = 0;
  for (std::size_t k = 0; k < in.size(); ++k) {
    EXPECT_TRUE(!in[k] || cover[k]);
    in_cells += in[k];
  }
  Rational sel = 0;
  for (std::size_t i : v.selected) sel += f[i].volume();
  EXPECT_EQ(sel, v.selected_volume);
  EXPECT_EQ(Rational(in_cells) / pow(q(4), d), v.input_volume);
  EXPECT_GE(sel * pow(q(3), d), v.input_volume);
}

TEST(Vitali, RandomFamiliesAgainstBruteForce) {
  for (int d = 1; d <= 3; ++d)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const CubeFamily f = random_cube_family(d, 3 + seed % 20, seed + 100 * d);
      const VitaliResult v = vitali_select(f);
      EXPECT_TRUE(v.all_hold()) << v.describe();
      brute_force_vitali(f, v);
      // Every discarded cube meets a selected cube at least as large.
      for (std::size_t i = 0; i < f.size(); ++i) {
        const Cube& w = f[v.witness[i]];
        EXPECT_GE(w.side, f[i].side);
        EXPECT_TRUE(boxes_meet(w.box(), f[i].box()));
      }
    }
}

TEST(Vitali, ClosedRuleRejectsTouchingCubes) {
  const CubeFamily f({Cube({q(0)}, q(1)), Cube({q(1)}, q(1))});
  EXPECT_EQ(vitali_select(f, OverlapRule::interior).selected.size(), 2u);
  EXPECT_EQ(vitali_select(f, OverlapRule::closed).selected.size(), 1u);
  EXPECT_TRUE(vitali_select(f, OverlapRule::closed).all_hold());
}

TEST(Vitali, TiesKeepInputOrder) {
  const CubeFamily f({Cube({q(1, 2)}, q(1)), Cube({q(0)}, q(1)), Cube({q(0)}, q(2))});
  const VitaliResult v = vitali_select(f);
  ASSERT_EQ(v.selected.size(), 1u);
  EXPECT_EQ(v.selected.front(), 2u);
}

TEST(Tiling, KOfEta) {
  EXPECT_EQ(k_of_eta(q(3), 1), 5);
  EXPECT_EQ(k_of_eta(q(1, 2), 1), 25);
  EXPECT_EQ(k_of_eta(q(3, 10), 1), 41);
  EXPECT_EQ(k_of_eta(q(1, 2), 2), 55);
  EXPECT_EQ(k_of_eta(q(3, 10), 2), 91);
  // Defining inequalities at the returned K and their failure just below.
  for (int d = 1; d <= 2; ++d)
    for (const Rational& eta : {q(1, 2), q(3, 10)}) {
      const auto k = k_of_eta(eta, d);
      auto ok = [&](std::int64_t kk) {
        const Rational t(2, kk);
        return Rational(kk) * eta / 3 / pow(q(3), d) > 1 && pow(1 + t, d) - pow(1 - t, d) < eta / 3;
      };
      EXPECT_TRUE(ok(k));
      EXPECT_FALSE(ok(k - 1));
    }
}

TEST(Multiscale, IntervalWithTwoScales) {
  const Region omega = Region::from_box(Box{{q(0)}, {q(3000)}});
  const std::vector<CubeFamily> fams = {grid_cover(omega, q(1), {q(1, 3)}),
                                        grid_cover(omega, q(25), {q(7, 2)})};
  MultiscaleOptions opt;
  opt.scale_ratio = 25;
  const MultiscaleResult r = multiscale_select(omega, fams, q(1, 2), opt);
  EXPECT_TRUE(r.all_hold());
  EXPECT_LT(r.dilated_residual_volume, q(1500));
  EXPECT_TRUE(pairwise_disjoint(r.selection.cubes(), OverlapRule::interior));
  EXPECT_TRUE(omega.contains(Region::from_cubes(r.selection)));
}

TEST(Multiscale, HypothesisViolationsNameTheClause) {
  const Region omega = Region::from_box(Box{{q(0)}, {q(3000)}});
  const auto unit = grid_cover(omega, q(1), {q(0)});
  const auto big = grid_cover(omega, q(25), {q(0)});
  MultiscaleOptions opt;
  opt.scale_ratio = 25;
  try {
    multiscale_select(omega, {unit, grid_cover(omega, q(20), {q(0)})}, q(1, 2), opt);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("hypothesis (1)"), std::string::npos);
  }
  try {
    multiscale_select(Region::from_box(Box{{q(0)}, {q(300)}}), {unit, big}, q(1, 2), opt);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("hypothesis (2)"), std::string::npos);
  }
  CubeFamily partial;
  for (std::size_t i = 0; i < unit.size(); ++i)
    if (i != unit.size() / 2) partial.push_back(unit[i]);
  try {
    multiscale_select(omega, {partial, big}, q(1, 2), opt);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("hypothesis (3)"), std::string::npos);
  }
}

TEST(Multiscale, GridCoverCoversOmega) {
  const Region l = Region::from_boxes(2, {box2(0, 0, 10, 4), box2(0, 4, 4, 10)});
  const CubeFamily f = grid_cover(l, q(3, 2), {q(1, 5), q(-1, 3)});
  EXPECT_TRUE(Region::from_cubes(f).contains(l));
  for (const auto& c : f.cubes()) EXPECT_TRUE(l.meets_closed(c.box()));
}

}  // namespace
}  // namespace mmdim::tiling
