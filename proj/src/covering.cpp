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

#include "mmdim/covering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mmdim/counting.hpp"
#include "mmdim/error.hpp"
#include "mmdim/metric.hpp"

namespace mmdim {

std::string to_string(NetMethod m) {
  switch (m) {
    case NetMethod::exact_oracle: return "exact_oracle";
    case NetMethod::greedy_span: return "greedy_span";
    case NetMethod::greedy_separated: return "greedy_separated";
  }
  return "?";
}

namespace {

// Flattened view of the constrained coordinates: x and y are within eps iff
// |key_x[i] - key_y[i]| <= tol[i] for all i.
struct KeyLayout {
  std::vector<Site> sites;
  std::vector<double> tol;
  bool exact_match = true;  // all tolerances zero
};

void layout_append(const SystemSpec& s, const Window& w, double eps,
                   const std::vector<Site>& sites, KeyLayout* out) {
  if (s.point_kind == PointKind::product_of_systems) {
    for (const auto& f : s.factors) layout_append(f, w, eps, sites, out);
    return;
  }
  for (const Site& n : sites)
    for (int c = 0; c < s.channels(); ++c) {
      if (s.point_kind == PointKind::symbolic) {
        out->tol.push_back(0.0);
      } else {
        out->tol.push_back(std::ldexp(eps, static_cast<int>(w.distance(n))));
        out->exact_match = false;
      }
    }
}

KeyLayout make_layout(const SystemSpec& s, const Window& w, double eps) {
  KeyLayout l;
  l.sites = constrained_sites(w, eps);
  layout_append(s, w, eps, l.sites, &l);
  return l;
}

void key_append(const SystemSpec& s, const Point& x, const std::vector<Site>& sites,
                std::vector<double>* key) {
  if (s.point_kind == PointKind::product_of_systems) {
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      key_append(s.factors[i], x.components[i], sites, key);
    return;
  }
  for (const Site& n : sites)
    for (int c = 0; c < s.channels(); ++c) key->push_back(x.at(n, c));
}

std::vector<double> make_key(const SystemSpec& s, const KeyLayout& l, const Point& x) {
  std::vector<double> key;
  key.reserve(l.tol.size());
  key_append(s, x, l.sites, &key);
  return key;
}

bool keys_within(const KeyLayout& l, const std::vector<double>& a,
                 const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > l.tol[i]) return false;
  return true;
}

void collect_pin_sites(const Cylinder& c, std::vector<Site>* out) {
  for (const auto& [n, r] : c.pins) out->push_back(n);
  for (const auto& f : c.factors) collect_pin_sites(f, out);
}

bool has_interval(const SystemSpec& s) {
  if (s.point_kind == PointKind::interval_product) return true;
  return std::any_of(s.factors.begin(), s.factors.end(), has_interval);
}

void check_args(const PointSet& k, const Window& w, double eps) {
  if (!(eps > 0)) throw UsageError("epsilon must be positive, got " + std::to_string(eps));
  if (w.size() == 0) throw UsageError("window must be nonempty");
  if (w.dim() != k.system.lattice_dim)
    throw UsageError("window dimension " + std::to_string(w.dim()) +
                     " does not match lattice_dim " + std::to_string(k.system.lattice_dim));
}

struct Enumerated {
  std::vector<Point> points;
  std::vector<std::string> warnings;
};

Enumerated enumerate_for(const PointSet& k, const Window& w, double eps,
                         const NetOptions& opt) {
  Enumerated e;
  if (k.kind == PointSet::Kind::explicit_cloud) {
    e.points = k.points;
    return e;
  }
  const Window box = opt.enumeration ? *opt.enumeration
                     : k.enumeration ? *k.enumeration
                                     : default_enumeration_box(k, w, eps);
  for (const Site& n : constrained_sites(w, eps))
    if (!box.contains(n)) {
      e.warnings.push_back("enumeration box " + box.to_string() +
                           " misses constrained site " + to_string(n) +
                           "; counts bound the enumerated points only");
      break;
    }
  if (has_interval(k.system))
    e.warnings.push_back("interval coordinates enumerated on the grid of step " +
                         std::to_string(k.grid_step) +
                         "; counts refer to the grid points");
  e.points = enumerate_points(k, box, opt.enumeration_cap);
  if (e.points.empty()) throw UsageError("point set " + k.describe() + " is empty");
  return e;
}

// Indices of a greedy eps-separated subset, in enumeration order.
std::vector<std::size_t> separated_indices(const SystemSpec& s, const Window& w,
                                           double eps, const std::vector<Point>& pts) {
  const KeyLayout l = make_layout(s, w, eps);
  std::vector<std::vector<double>> keys;
  keys.reserve(pts.size());
  for (const auto& p : pts) keys.push_back(make_key(s, l, p));
  std::vector<std::size_t> kept;
  if (l.exact_match) {
    std::map<std::vector<double>, std::size_t> seen;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (seen.emplace(keys[i], i).second) kept.push_back(i);
    return kept;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool far = true;
    for (std::size_t j : kept)
      if (keys_within(l, keys[i], keys[j])) { far = false; break; }
    if (far) kept.push_back(i);
  }
  return kept;
}

std::vector<std::size_t> spanning_indices(const SystemSpec& s, const Window& w,
                                          double eps, const std::vector<Point>& pts) {
  const KeyLayout l = make_layout(s, w, eps);
  if (l.exact_match) return separated_indices(s, w, eps, pts);
  std::vector<std::vector<double>> keys;
  keys.reserve(pts.size());
  for (const auto& p : pts) keys.push_back(make_key(s, l, p));
  std::vector<char> covered(pts.size(), 0);
  std::vector<std::size_t> centers;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (covered[i]) continue;
    centers.push_back(i);
    for (std::size_t j = i; j < pts.size(); ++j)
      if (!covered[j] && keys_within(l, keys[i], keys[j])) covered[j] = 1;
  }
  return centers;
}

NetResult net_from(const PointSet& k, const Window& w, double eps, NetMethod method,
                   const std::vector<Point>& pts, const std::vector<std::size_t>& idx,
                   std::vector<std::string> warnings) {
  NetResult r;
  r.epsilon = eps;
  r.window = w;
  r.method = method;
  for (std::size_t i : idx) r.centers.push_back(pts[i]);
  r.cardinality = static_cast<long>(idx.size());
  r.upper_bound = r.cardinality;
  r.lower_bound = static_cast<long>(separated_indices(k.system, w, 2 * eps, pts).size());
  r.warnings = std::move(warnings);
  return r;
}

// Center positions covering one interval coordinate with balls of half-width
// `radius`.
std::vector<double> coordinate_centers(const ChannelRange& r, double radius, double h) {
  std::vector<double> out;
  if (h > 0) {
    auto a = static_cast<std::int64_t>(std::ceil(r.lo / h - 1e-9));
    if (static_cast<double>(a) * h < r.lo) ++a;
    const auto per_ball =
        static_cast<std::int64_t>(std::floor(2.0 * radius / h * (1.0 + 1e-12))) + 1;
    for (std::int64_t i = a; static_cast<double>(i) * h <= r.hi; i += per_ball)
      out.push_back(std::min(static_cast<double>(i) * h + radius, 1.0));
    return out;
  }
  const std::int64_t c = ceil_div_real(r.hi - r.lo, 2.0 * radius);
  for (std::int64_t i = 0; i < c; ++i)
    out.push_back(std::min(r.lo + radius * static_cast<double>(2 * i + 1), r.hi));
  return out;
}

std::vector<Point> interval_centers(const PointSet& k, const Window& w, double eps,
                                    std::size_t cap) {
  const SystemSpec& s = k.system;
  const std::vector<Site> a = constrained_sites(w, eps);
  if (a.empty()) return {Point::constant(s, 0.0)};
  Site lo = a.front(), hi = a.front();
  for (const Site& n : a) hull(lo, hi, n, n, &lo, &hi);
  const std::vector<Site> box = box_sites(lo, hi);
  const int ch = s.channels();
  // One list of choices per (site, channel) of the box.
  std::vector<std::vector<double>> choices;
  for (const Site& n : box) {
    const bool constrained = std::binary_search(a.begin(), a.end(), n);
    for (int c = 0; c < ch; ++c) {
      const ChannelRange r = allowed_range(s, k.cylinder, n, c);
      if (!constrained) {
        choices.push_back({std::max(r.lo, 0.0)});
        continue;
      }
      choices.push_back(coordinate_centers(
          r, std::ldexp(eps, static_cast<int>(w.distance(n))), k.grid_step));
    }
  }
  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return {};
    total *= c.size();
    if (total > cap) return {};
  }
  std::vector<Point> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<double> vals(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) vals[i] = choices[i][idx[i]];
    out.push_back(Point::make(s, lo, hi, std::move(vals),
                              std::vector<double>(static_cast<std::size_t>(ch), 0.0)));
    std::size_t i = choices.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) { done = false; break; }
      idx[i] = 0;
    }
    if (done) return out;
  }
}

// Representatives of the eps-balls needed for K, or empty if unavailable.
std::vector<Point> exact_centers(const PointSet& k, const Window& w, double eps,
                                 std::size_t cap) {
  const SystemSpec& s = k.system;
  if (k.kind == PointSet::Kind::explicit_cloud) {
    std::vector<Point> out;
    for (std::size_t i : separated_indices(s, w, eps, k.points)) out.push_back(k.points[i]);
    return out;
  }
  if (s.point_kind == PointKind::interval_product) return interval_centers(k, w, eps, cap);
  if (s.point_kind == PointKind::symbolic) {
    const std::vector<Point> pts =
        enumerate_points(k, default_enumeration_box(k, w, eps), std::size_t{1} << 20);
    std::vector<Point> out;
    for (std::size_t i : separated_indices(s, w, eps, pts)) out.push_back(pts[i]);
    return out;
  }
  std::vector<std::vector<Point>> parts;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    PointSet f = k.kind == PointSet::Kind::whole_space || k.cylinder.factors.empty()
                     ? PointSet::whole(s.factors[i])
                     : PointSet::cylinder_set(s.factors[i], k.cylinder.factors[i]);
    f.grid_step = k.grid_step;
    parts.push_back(exact_centers(f, w, eps, cap));
    if (parts.back().empty()) return {};
  }
  std::vector<Point> out;
  std::vector<std::size_t> idx(parts.size(), 0);
  while (true) {
    std::vector<Point> comps;
    for (std::size_t i = 0; i < parts.size(); ++i) comps.push_back(parts[i][idx[i]]);
    out.push_back(Point::product(s, std::move(comps)));
    if (out.size() > cap) return {};
    std::size_t i = parts.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] < parts[i].size()) { done = false; break; }
      idx[i] = 0;
    }
    if (done) return out;
  }
}

std::string join_counts(const std::vector<Count>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " * " : "") + to_string(v[i]);
  return out;
}

}  // namespace

Window default_enumeration_box(const PointSet& k, const Window& w, double eps) {
  std::vector<Site> sites = constrained_sites(w, eps);
  if (k.kind == PointSet::Kind::cylinder_enumeration) collect_pin_sites(k.cylinder, &sites);
  if (sites.empty()) sites = w.sites();
  Site lo = sites.front(), hi = sites.front();
  for (const Site& n : sites) hull(lo, hi, n, n, &lo, &hi);
  return Window::box(lo, hi);
}

bool within(const SystemSpec& s, const Window& w, double eps, const Point& x,
            const Point& y) {
  const KeyLayout l = make_layout(s, w, eps);
  return keys_within(l, make_key(s, l, x), make_key(s, l, y));
}

NetResult greedy_spanning(const PointSet& k, const Window& w, double eps,
                          const NetOptions& opt) {
  check_args(k, w, eps);
  Enumerated e = enumerate_for(k, w, eps, opt);
  const auto idx = spanning_indices(k.system, w, eps, e.points);
  return net_from(k, w, eps, NetMethod::greedy_span, e.points, idx, std::move(e.warnings));
}

NetResult greedy_separated(const PointSet& k, const Window& w, double eps,
                           const NetOptions& opt) {
  check_args(k, w, eps);
  Enumerated e = enumerate_for(k, w, eps, opt);
  const auto idx = separated_indices(k.system, w, eps, e.points);
  return net_from(k, w, eps, NetMethod::greedy_separated, e.points, idx,
                  std::move(e.warnings));
}

NetResult exact_covering_number(const PointSet& k, const Window& w, double eps,
                                const NetOptions& opt) {
  check_args(k, w, eps);
  NetResult r;
  r.epsilon = eps;
  r.window = w;
  r.method = NetMethod::exact_oracle;
  r.cardinality = exact_count(k, w, eps);
  r.lower_bound = r.upper_bound = r.cardinality;
  if (r.cardinality <= opt.center_cap) {
    try {
      r.centers = exact_centers(k, w, eps, opt.center_cap);
    } catch (const UnsupportedInstance&) {
      r.centers.clear();
    }
    if (Count(static_cast<long>(r.centers.size())) != r.cardinality) {
      r.centers.clear();
      r.warnings.push_back("centers not materialized");
    }
  } else {
    r.warnings.push_back("centers not materialized (more than " +
                         std::to_string(opt.center_cap) + ")");
  }
  return r;
}

std::string CodingReport::describe() const {
  return to_string(lhs) + " <= " + join_counts(factors) + " = " + to_string(rhs) +
         (holds ? " (holds)" : " (FAILS)");
}

CodingReport coding_bound_check(const PointSet& f, const std::vector<std::int64_t>& cuts,
                                double eps) {
  if (f.system.lattice_dim != 1)
    throw UsageError("cut-point form of the coding bound needs lattice_dim 1");
  if (cuts.size() < 2 || cuts.front() != 0)
    throw UsageError("cut points must start at 0 and contain at least two entries");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1]) throw UsageError("cut points must be strictly increasing");
  CodingReport r;
  r.lhs = exact_count(f, Window::interval(0, cuts.back() - 1), eps);
  r.rhs = 1;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Count c = exact_count(f.shifted({cuts[i]}),
                                Window::interval(0, cuts[i + 1] - cuts[i] - 1), eps / 2);
    r.factors.push_back(c);
    r.rhs *= c;
  }
  r.holds = r.lhs <= r.rhs;
  if (!r.holds) throw PropertyViolation("coding bound violated: " + r.describe());
  return r;
}

CodingReport coding_bound_check(const PointSet& f, const Window& omega,
                                const std::vector<Window>& pieces, double eps) {
  if (pieces.empty()) throw UsageError("coding bound needs at least one piece");
  for (const Site& n : omega.sites()) {
    bool covered = false;
    for (const auto& p : pieces) covered = covered || p.contains(n);
    if (!covered) throw UsageError("pieces do not cover site " + to_string(n));
  }
  CodingReport r;
  r.lhs = exact_count(f, omega, eps);
  r.rhs = 1;
  for (const auto& p : pieces) {
    const Count c = exact_count(f, p, eps / 2);
    r.factors.push_back(c);
    r.rhs *= c;
  }
  r.holds = r.lhs <= r.rhs;
  if (!r.holds) throw PropertyViolation("coding bound violated: " + r.describe());
  return r;
}

std::string TrivialBoundReport::describe() const {
  return to_string(lhs) + " <= " + to_string(base) + "^" + std::to_string(exponent) +
         (holds ? " (holds)" : " (FAILS)");
}

TrivialBoundReport trivial_bound_check(const SystemSpec& s, const Window& w, double eps) {
  if (w.kind() != Window::Kind::box) throw UsageError("trivial bound needs a box window");
  if (w.dim() != s.lattice_dim) throw UsageError("window dimension mismatch");
  const PointSet x = PointSet::whole(s);
  TrivialBoundReport r;
  r.lhs = exact_count(x, w, eps);
  const Site zero(static_cast<std::size_t>(s.lattice_dim), 0);
  const Site one(static_cast<std::size_t>(s.lattice_dim), 1);
  r.base = exact_count(x, Window::box(zero, one), eps / 2);
  r.exponent = 1;
  for (int i = 0; i < w.dim(); ++i) r.exponent *= w.hi()[i] - w.lo()[i] + 2;
  r.rhs = boost::multiprecision::pow(r.base, static_cast<unsigned>(r.exponent));
  r.holds = r.lhs <= r.rhs;
  if (!r.holds) throw PropertyViolation("trivial bound violated: " + r.describe());
  return r;
}

}  // namespace mmdim
