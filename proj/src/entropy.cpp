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

#include "mmdim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mmdim/counting.hpp"
#include "mmdim/error.hpp"

namespace mmdim {

std::string to_string(FitKind k) {
  return k == FitKind::tail_slope ? "tail_slope" : "linear_regression";
}

FitKind parse_fit_kind(const std::string& s) {
  if (s == "tail_slope") return FitKind::tail_slope;
  if (s == "linear_regression") return FitKind::linear_regression;
  throw UsageError("fit: unknown value '" + s + "'");
}

namespace {

bool has_interval(const SystemSpec& s) {
  if (s.point_kind == PointKind::interval_product) return true;
  return std::any_of(s.factors.begin(), s.factors.end(), has_interval);
}

std::size_t tail_length(std::size_t n, double fraction) {
  auto len = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * fraction));
  return std::min(n, std::max<std::size_t>(2, len));
}

double slope(const Count& a, const Count& b, std::int64_t dv) {
  return log_ratio(b, a) / static_cast<double>(dv);
}

}  // namespace

EntropySample count_cell(const PointSet& k, const Window& w, double eps,
                         const EntropyOptions& opt) {
  EntropySample s;
  if (oracle_eligible(k)) {
    s.method = NetMethod::exact_oracle;
    s.count = s.lo = s.hi = exact_count(k, w, eps);
    const double h = opt.grid_step;
    if (has_interval(k.system) && k.grid_step == 0 && h > 0 && h < eps) {
      const GridBracket b = grid_bracket(k, w, eps, h);
      if (b.lo > s.count || s.count > b.hi)
        throw PropertyViolation("grid bracket [" + to_string(b.lo) + ", " + to_string(b.hi) +
                                "] misses the exact count " + to_string(s.count));
      s.lo = b.lo;
      s.hi = b.hi;
    }
    return s;
  }
  const NetResult r = greedy_spanning(k, w, eps, opt.net);
  s.method = NetMethod::greedy_span;
  s.count = s.hi = r.upper_bound;
  s.lo = r.lower_bound;
  return s;
}

void fit_curve(EntropyCurve* c, FitKind fit, double tail_fraction) {
  const auto& sm = c->samples;
  const std::size_t n = sm.size();
  if (n < 2) throw UsageError("entropy fit needs at least two samples");
  if (!(tail_fraction > 0 && tail_fraction <= 1))
    throw UsageError("tail_fraction must be in (0, 1]");
  c->fit_kind = fit;
  c->tail_start = n - tail_length(n, tail_fraction);
  double best = -1e300, lo = -1e300, hi = -1e300;
  for (std::size_t i = c->tail_start; i + 1 < n; ++i) {
    const std::int64_t dv = sm[i + 1].volume - sm[i].volume;
    best = std::max(best, slope(sm[i].count, sm[i + 1].count, dv));
    lo = std::max(lo, slope(sm[i].hi, sm[i + 1].lo, dv));
    hi = std::max(hi, slope(sm[i].lo, sm[i + 1].hi, dv));
  }
  if (fit == FitKind::linear_regression) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n - c->tail_start);
    for (std::size_t i = c->tail_start; i < n; ++i) {
      const double x = static_cast<double>(sm[i].volume);
      const double y = log_count(sm[i].count);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    best = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  c->fitted_S = std::max(0.0, best);
  c->S_lo = std::max(0.0, lo);
  c->S_hi = std::max(0.0, hi);
}

EntropyCurve entropy_at_scale(const PointSet& k, double eps,
                              const std::vector<std::int64_t>& window_sizes,
                              const EntropyOptions& opt) {
  if (!(eps > 0)) throw UsageError("epsilon must be positive");
  if (window_sizes.size() < 3) throw UsageError("window_sizes needs at least three sizes");
  for (std::size_t i = 0; i < window_sizes.size(); ++i) {
    if (window_sizes[i] < 1) throw UsageError("window sizes must be positive");
    if (i && window_sizes[i] <= window_sizes[i - 1])
      throw UsageError("window sizes must be strictly increasing");
  }
  const int d = k.system.lattice_dim;
  EntropyCurve c;
  c.epsilon = eps;
  for (std::int64_t l : window_sizes) {
    EntropySample s;
    try {
      s = count_cell(k, Window::cube(l, d), eps, opt);
    } catch (const UnsupportedInstance& e) {
      c.warnings.push_back("window size " + std::to_string(l) + " skipped: " + e.what());
      continue;
    }
    s.size = l;
    s.volume = 1;
    for (int i = 0; i < d; ++i) s.volume *= l;
    c.samples.push_back(std::move(s));
  }
  if (c.samples.size() < 2)
    throw UnsupportedInstance("fewer than two window sizes could be counted at eps " +
                              std::to_string(eps));
  if (c.samples.size() < window_sizes.size())
    c.warnings.push_back("partial result: tail computed from " +
                         std::to_string(c.samples.size()) + " sizes");
  fit_curve(&c, opt.fit, opt.tail_fraction);
  return c;
}

void check_eps_list(const std::vector<double>& eps_list) {
  if (eps_list.size() < 3) throw UsageError("eps_list needs at least three values");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0 && eps_list[i] < 1))
      throw UsageError("eps values must lie in (0, 1)");
    if (i && !(eps_list[i] < eps_list[i - 1]))
      throw UsageError("eps_list must be strictly decreasing");
  }
}

MmdimEstimate extract_mmdim(const std::string& system_id,
                            const std::vector<std::pair<double, double>>& eps_s,
                            double tail_fraction) {
  std::vector<double> eps;
  for (const auto& p : eps_s) eps.push_back(p.first);
  check_eps_list(eps);
  if (!(tail_fraction > 0 && tail_fraction <= 1))
    throw UsageError("tail_fraction must be in (0, 1]");
  MmdimEstimate e;
  e.system_id = system_id;
  for (const auto& [ep, s] : eps_s) e.points.push_back({ep, s, s / std::log(1.0 / ep)});
  const std::size_t n = e.points.size();
  e.epsilon_range = {eps.front(), eps.back()};
  bool up = true, down = true;
  for (std::size_t i = 1; i < n; ++i) {
    const double a = e.points[i - 1].ratio, b = e.points[i].ratio;
    up = up && b >= a - 1e-12;
    down = down && b <= a + 1e-12;
  }
  e.monotone = up || down;
  if (e.monotone) {
    e.tail_start = n - 1;
    e.upper = e.lower = e.points.back().ratio;
    return e;
  }
  const auto len = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(static_cast<double>(n) * tail_fraction)));
  e.tail_start = n - std::min(n, len);
  e.upper = -1e300;
  e.lower = 1e300;
  for (std::size_t i = e.tail_start; i < n; ++i) {
    e.upper = std::max(e.upper, e.points[i].ratio);
    e.lower = std::min(e.lower, e.points[i].ratio);
  }
  return e;
}

MmdimEstimate mmdim_estimate(const SystemSpec& s, const std::vector<double>& eps_list,
                             const std::vector<std::int64_t>& window_sizes,
                             const EntropyOptions& opt) {
  check_eps_list(eps_list);
  const PointSet x = PointSet::whole(s);
  std::vector<std::pair<double, double>> eps_s;
  std::vector<EntropyCurve> curves;
  for (double eps : eps_list) {
    curves.push_back(entropy_at_scale(x, eps, window_sizes, opt));
    eps_s.emplace_back(eps, curves.back().fitted_S);
  }
  MmdimEstimate e = extract_mmdim(s.id, eps_s, opt.tail_fraction);
  for (const auto& c : curves)
    for (const auto& w : c.warnings) e.warnings.push_back(w);
  e.curves = std::move(curves);
  return e;
}

std::string mmdim_bound_report(const MmdimEstimate& e) {
  std::ostringstream os;
  os << "mdim <= " << e.lower << " <= " << e.upper;
  return os.str();
}

}  // namespace mmdim
