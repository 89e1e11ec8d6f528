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

#include "mmdim/local.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mmdim/counting.hpp"
#include "mmdim/error.hpp"
#include "mmdim/metric.hpp"
#include "mmdim/parallel.hpp"

namespace mmdim {
namespace {

Cylinder ball_cylinder(const SystemSpec& s, const Point& x, double delta, const Window& w) {
  Cylinder c;
  if (s.point_kind == PointKind::product_of_systems) {
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      c.factors.push_back(ball_cylinder(s.factors[i], x.components[i], delta, w));
    return c;
  }
  for (const Site& n : w.dilated_sites(constraint_radius(delta))) {
    std::vector<ChannelRange> ranges;
    if (s.point_kind == PointKind::symbolic) {
      ranges.push_back({x.at(n), x.at(n)});
    } else {
      const double half = std::ldexp(delta, static_cast<int>(w.distance(n)));
      for (int ch = 0; ch < s.channels(); ++ch) {
        const double v = x.at(n, ch);
        ranges.push_back({std::max(0.0, v - half), std::min(1.0, v + half)});
      }
    }
    c.pins.emplace(n, std::move(ranges));
  }
  return c;
}

Cylinder restricted(const Cylinder& c, const std::set<Site>& sites) {
  Cylinder out;
  for (const auto& [n, r] : c.pins)
    if (sites.count(n)) out.pins.emplace(n, r);
  for (const auto& f : c.factors) out.factors.push_back(restricted(f, sites));
  return out;
}

Window window_for_ball(const SystemSpec& s, std::int64_t m) {
  return Window::centered(m, s.lattice_dim);
}

std::vector<Site> visible_sites(int d, std::int64_t largest, double eps) {
  const Window cube = Window::cube(largest, d);
  return site_union(cube.sites(), constrained_sites(cube, eps));
}

void check_delta(double delta) {
  if (!(delta > 0)) throw UsageError("delta must be positive, got " + std::to_string(delta));
}

std::vector<std::int64_t> checked_sizes(const std::vector<std::int64_t>& sizes) {
  if (sizes.empty()) throw UsageError("window_sizes must be nonempty");
  return sizes;
}

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

double snap(double v, double h) {
  if (!(h > 0)) return v;
  return std::clamp(std::round(v / h) * h, 0.0, 1.0);
}

const std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

PointSet bowen_ball_on(const SystemSpec& s, const Point& x, double delta, const Window& w) {
  check_delta(delta);
  check_point(s, x);
  return PointSet::cylinder_set(s, ball_cylinder(s, x, delta, w));
}

PointSet bowen_ball(const SystemSpec& s, const BowenBallSpec& spec) {
  if (spec.M < 0) throw UsageError("truncation radius M must be nonnegative");
  return bowen_ball_on(s, spec.center, spec.delta, window_for_ball(s, spec.M));
}

std::pair<std::int64_t, bool> stable_radius(const SystemSpec& s, const Point& x,
                                            double delta, const std::vector<Site>& sites,
                                            std::int64_t start, std::int64_t max_M) {
  const std::set<Site> keep(sites.begin(), sites.end());
  std::vector<Cylinder> seen;
  for (std::int64_t m = start; m <= max_M; ++m) {
    seen.push_back(restricted(ball_cylinder(s, x, delta, window_for_ball(s, m)), keep));
    const std::size_t k = seen.size();
    if (k >= 3 && seen[k - 1] == seen[k - 2] && seen[k - 2] == seen[k - 3]) return {m, true};
  }
  return {max_M, false};
}

LocalEntropyReport local_entropy(const SystemSpec& s, const BowenBallSpec& spec, double eps,
                                 const std::vector<std::int64_t>& window_sizes,
                                 const LocalOptions& opt) {
  check_delta(spec.delta);
  const auto sizes = checked_sizes(window_sizes);
  LocalEntropyReport r;
  r.center = spec.center;
  r.delta = spec.delta;
  r.epsilon = eps;
  const auto [m, ok] = stable_radius(s, spec.center, spec.delta,
                                     visible_sites(s.lattice_dim, sizes.back(), eps), spec.M,
                                     std::max(spec.M, opt.max_M));
  r.M_used = m;
  r.converged = ok;
  for (std::int64_t k = spec.M; k <= m; ++k) {
    BowenBallSpec b = spec;
    b.M = k;
    EntropyCurve c = entropy_at_scale(bowen_ball(s, b), eps, sizes, opt.entropy);
    r.S_by_M.emplace_back(k, c.fitted_S);
    if (k == m) r.curve = std::move(c);
  }
  r.S_local = r.curve.fitted_S;
  return r;
}

LocalMmdimReport local_mmdim(const SystemSpec& s, double delta,
                             const std::vector<double>& eps_list,
                             const std::vector<Point>& centers,
                             const std::vector<std::int64_t>& window_sizes,
                             const LocalOptions& opt) {
  check_delta(delta);
  check_eps_list(eps_list);
  if (centers.empty()) throw UsageError("local_mmdim needs at least one center");
  const std::size_t nc = centers.size();
  LocalMmdimReport out;
  out.reports.assign(eps_list.size(), std::vector<LocalEntropyReport>(nc));
  parallel_for(eps_list.size() * nc, opt.threads, [&](std::size_t t) {
    const std::size_t e = t / nc, c = t % nc;
    BowenBallSpec b{centers[c], delta, 0, 0};
    LocalEntropyReport r = local_entropy(s, b, eps_list[e], window_sizes, opt);
    r.center_id = c;
    out.reports[e][c] = std::move(r);
  });
  std::vector<std::pair<double, double>> eps_s;
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    double best = 0.0;
    for (const auto& r : out.reports[e]) best = std::max(best, r.S_local);
    out.max_S.push_back(best);
    eps_s.emplace_back(eps_list[e], best);
  }
  out.estimate = extract_mmdim(s.id, eps_s, opt.entropy.tail_fraction);
  for (const auto& row : out.reports)
    for (const auto& r : row)
      if (!r.converged)
        out.estimate.warnings.push_back("center " + std::to_string(r.center_id) +
                                        " did not stabilize by M = " +
                                        std::to_string(r.M_used));
  return out;
}

MarginReport local_entropy_with_margin(const SystemSpec& s, const Point& x, double delta,
                                       std::int64_t R, std::int64_t L, double eps,
                                       const LocalOptions& opt) {
  if (R < 0) throw UsageError("margin R must be nonnegative");
  if (L < 1) throw UsageError("window side L must be positive");
  const Site lo(static_cast<std::size_t>(s.lattice_dim), -R);
  const Site hi(static_cast<std::size_t>(s.lattice_dim), L + R - 1);
  const PointSet ball = bowen_ball_on(s, x, delta, Window::box(lo, hi));
  const EntropySample c = count_cell(ball, Window::cube(L, s.lattice_dim), eps, opt.entropy);
  return {R, L, c.count, c.lo, c.hi};
}

GrowthReport bowen_growth_check(const SystemSpec& s, const std::vector<Point>& centers,
                                double delta, double eps,
                                const std::vector<std::int64_t>& n_list, double beta,
                                const std::vector<std::int64_t>& window_sizes,
                                const LocalOptions& opt) {
  check_delta(delta);
  if (centers.empty()) throw UsageError("growth check needs at least one center");
  if (n_list.empty()) throw UsageError("n_list must be nonempty");
  for (std::size_t i = 0; i < n_list.size(); ++i)
    if (n_list[i] < 1 || (i && n_list[i] <= n_list[i - 1]))
      throw UsageError("n_list must be positive and strictly increasing");
  GrowthReport g;
  g.delta = delta;
  g.epsilon = eps;
  g.beta = beta;
  const std::size_t nc = centers.size(), nn = n_list.size();
  std::vector<double> a(nc, 0.0);
  std::vector<GrowthRow> rows(nc * nn);
  parallel_for(nc, opt.threads, [&](std::size_t c) {
    a[c] = local_entropy(s, BowenBallSpec{centers[c], delta, 0, 0}, eps / 4, window_sizes, opt)
               .S_local;
    for (std::size_t j = 0; j < nn; ++j) {
      const Window w = Window::cube(n_list[j], s.lattice_dim);
      GrowthRow& row = rows[c * nn + j];
      row.center_id = c;
      row.n = n_list[j];
      row.count = count_cell(bowen_ball_on(s, centers[c], delta, w), w, eps, opt.entropy).count;
      row.g = log_count(row.count) / static_cast<double>(w.size());
    }
  });
  g.a = *std::max_element(a.begin(), a.end());
  g.g_max = 0.0;
  for (const auto& row : rows)
    if (row.n == n_list.back()) g.g_max = std::max(g.g_max, row.g);
  g.rows = std::move(rows);
  g.holds = g.g_max <= g.a + beta + 1e-12;
  return g;
}

HStarReport h_star_estimate(const SystemSpec& s, double delta,
                            const std::vector<double>& eps_list,
                            const std::vector<Point>& centers,
                            const std::vector<std::int64_t>& window_sizes,
                            double tolerance, const LocalOptions& opt) {
  const LocalMmdimReport l = local_mmdim(s, delta, eps_list, centers, window_sizes, opt);
  HStarReport h;
  h.delta = delta;
  h.tolerance = tolerance;
  for (std::size_t e = 0; e < eps_list.size(); ++e)
    h.max_S_by_eps.emplace_back(eps_list[e], l.max_S[e]);
  h.value = l.max_S.back();
  h.evidence = h.value <= tolerance;
  return h;
}

std::vector<Point> sample_centers(const SystemSpec& s, std::size_t n, std::uint64_t seed,
                                  double grid_step) {
  if (n == 0) throw UsageError("number of centers must be positive");
  const int d = s.lattice_dim;
  if (s.point_kind == PointKind::symbolic) {
    for (std::int64_t r = 0;; ++r) {
      std::vector<Point> pts =
          enumerate_points(PointSet::whole(s), Window::centered(r, d), std::size_t{1} << 16);
      if (pts.size() >= n || s.alphabet_size == 1) return pts;
    }
  }
  if (s.point_kind == PointKind::product_of_systems) {
    std::vector<std::vector<Point>> parts;
    for (const auto& f : s.factors) parts.push_back(sample_centers(f, n, seed, grid_step));
    std::size_t total = 0;
    for (const auto& p : parts) total = std::max(total, p.size());
    std::vector<Point> out;
    for (std::size_t i = 0; i < std::max(n, total); ++i) {
      std::vector<Point> comps;
      for (const auto& p : parts) comps.push_back(p[i % p.size()]);
      out.push_back(Point::product(s, std::move(comps)));
    }
    return out;
  }
  const int ch = s.channels();
  const Window box = Window::centered(2, d);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t level = i / 2 + 1 + seed;
    const double tail = snap(radical_inverse(level, 2), grid_step);
    if (i % 2 == 0) {
      out.push_back(Point::constant(s, tail));
      continue;
    }
    std::vector<double> vals;
    std::size_t dimension = 0;
    for (std::size_t k = 0; k < box.size(); ++k)
      for (int c = 0; c < ch; ++c, ++dimension)
        vals.push_back(snap(radical_inverse(level, kPrimes[dimension % std::size(kPrimes)]),
                            grid_step));
    out.push_back(Point::make(s, box.lo(), box.hi(), std::move(vals),
                              std::vector<double>(static_cast<std::size_t>(ch), tail)));
  }
  return out;
}

}  // namespace mmdim
