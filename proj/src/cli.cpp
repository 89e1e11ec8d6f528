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

#include "mmdim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mmdim/covering.hpp"
#include "mmdim/entropy.hpp"
#include "mmdim/error.hpp"
#include "mmdim/local.hpp"
#include "mmdim/parallel.hpp"
#include "mmdim/systems.hpp"
#include "mmdim/tiling/multiscale.hpp"
#include "mmdim/tiling/vitali.hpp"

namespace mmdim::cli {
namespace {

std::string fmt(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, end) : "nan";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string cube_corner(const tiling::Cube& c) {
  std::vector<std::string> parts;
  for (const auto& x : c.corner) parts.push_back(to_string(x));
  return join(parts, " ");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

struct Artifact {
  Json result;
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool failed = false;  // a checked property does not hold
};

// ---- option table ---------------------------------------------------------

struct OptionInfo {
  const char* name;
  const char* help;
  bool list;
};

const std::vector<OptionInfo>& option_table() {
  static const std::vector<OptionInfo> table = {
      {"system", "catalog id, product a*b, inline JSON or JSON file", false},
      {"eps", "scales, e.g. 2^-3,2^-4 or 0.125", true},
      {"windows", "window side lengths N (at least three, increasing)", true},
      {"delta", "Bowen ball radius (default diameter/4)", false},
      {"centers", "number of sampled centers", false},
      {"seed", "sampling seed", false},
      {"grid-step", "grid step h for interval systems", false},
      {"tail-fraction", "fraction of the curve used as its tail", false},
      {"fit", "tail_slope or linear_regression", false},
      {"beta", "slack of the Bowen growth check", false},
      {"n-list", "window sizes n of the Bowen growth check", true},
      {"tolerance", "h* evidence tolerance", false},
      {"input", "JSON input of the tiling subcommands", false},
      {"overlap", "interior or closed", false},
      {"vitali-families", "random families per dimension in check", false},
      {"growth", "include the Bowen growth diagnostic in check (true/false)", false},
      {"threads", "worker threads", false},
      {"output", "output file (default MMDIM_OUTPUT_DIR/<subcommand>.<ext> or stdout)", false},
      {"format", "csv or json", false},
  };
  return table;
}

std::string json_scalar_text(const Json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw UsageError("config field '" + field + "': expected a scalar");
}

std::int64_t parse_int(const std::string& text, const std::string& field) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw UsageError("--" + field + ": '" + text + "' is not an integer");
  return v;
}

double positive_real(const std::string& text, const std::string& field) {
  const double v = parse_real(text, field);
  if (!(v > 0)) throw UsageError("--" + field + ": must be positive");
  return v;
}

RunConfig build_config(const std::string& sub, std::map<std::string, std::vector<std::string>> raw) {
  RunConfig c;
  c.subcommand = sub;
  auto one = [&](const char* name) -> const std::string* {
    auto it = raw.find(name);
    if (it == raw.end() || it->second.empty()) return nullptr;
    if (it->second.size() > 1) throw UsageError(std::string("--") + name + ": expected one value");
    return &it->second.front();
  };
  if (auto v = one("system")) c.system = *v;
  if (auto it = raw.find("eps"); it != raw.end() && !it->second.empty()) {
    c.eps_text = it->second;
  } else if (sub == "check") {
    c.eps_text = {"2^-1", "2^-2"};
  } else {
    c.eps_text = {"2^-3", "2^-4", "2^-5", "2^-6", "2^-7"};
  }
  for (const auto& t : c.eps_text) {
    const double e = parse_real(t, "eps");
    if (!(e > 0 && e < 1)) throw UsageError("--eps: '" + t + "' must lie in (0, 1)");
    c.eps_list.push_back(e);
  }
  if (auto it = raw.find("windows"); it != raw.end() && !it->second.empty()) {
    for (const auto& t : it->second) c.window_sizes.push_back(parse_int(t, "windows"));
  } else {
    c.window_sizes = {2, 3, 4, 5, 6};
  }
  for (auto n : c.window_sizes)
    if (n < 1) throw UsageError("--windows: sizes must be positive");
  if (auto v = one("delta")) c.delta = positive_real(*v, "delta");
  if (auto v = one("centers")) {
    const auto n = parse_int(*v, "centers");
    if (n < 1) throw UsageError("--centers: must be positive");
    c.centers = static_cast<std::size_t>(n);
  }
  if (auto v = one("seed")) {
    const auto n = parse_int(*v, "seed");
    if (n < 0) throw UsageError("--seed: must be nonnegative");
    c.seed = static_cast<std::uint64_t>(n);
  }
  if (auto v = one("grid-step")) c.grid_step = positive_real(*v, "grid-step");
  if (auto v = one("tail-fraction")) {
    c.tail_fraction = positive_real(*v, "tail-fraction");
    if (c.tail_fraction > 1) throw UsageError("--tail-fraction: must be at most 1");
  }
  if (auto v = one("fit")) {
    parse_fit_kind(*v);
    c.fit = *v;
  }
  if (auto v = one("beta")) c.beta = positive_real(*v, "beta");
  if (auto it = raw.find("n-list"); it != raw.end() && !it->second.empty()) {
    for (const auto& t : it->second) c.n_list.push_back(parse_int(t, "n-list"));
  } else {
    c.n_list = {4, 8, 16, 32};
  }
  if (auto v = one("tolerance")) c.tolerance = positive_real(*v, "tolerance");
  if (auto v = one("input")) c.input = *v;
  if (auto v = one("overlap")) {
    tiling::parse_overlap_rule(*v);
    c.overlap = *v;
  }
  if (auto v = one("vitali-families")) {
    const auto n = parse_int(*v, "vitali-families");
    if (n < 0) throw UsageError("--vitali-families: must be nonnegative");
    c.vitali_families = static_cast<std::size_t>(n);
  }
  if (auto v = one("growth")) {
    if (*v != "true" && *v != "false") throw UsageError("--growth: expected true or false");
    c.growth = *v == "true";
  }
  if (auto v = one("threads")) {
    const auto n = parse_int(*v, "threads");
    if (n < 1 || n > 256) throw UsageError("--threads: must be in 1..256");
    c.threads = static_cast<int>(n);
  }
  if (auto v = one("output")) c.output = *v;
  if (auto v = one("format")) {
    if (*v == "csv") c.format = Format::csv;
    else if (*v == "json") c.format = Format::json;
    else throw UsageError("--format: expected csv or json");
  }
  return c;
}

// ---- shared pieces ----------------------------------------------------------

struct Context {
  const RunConfig& cfg;
  SystemSpec system;
  EntropyOptions entropy;
  LocalOptions local;
  double delta = 0;
  std::vector<Point> centers;
};

Context make_context(const RunConfig& cfg, bool need_centers) {
  if (cfg.system.empty()) throw UsageError("--system: required for '" + cfg.subcommand + "'");
  Context ctx{cfg, resolve_system(cfg.system), {}, {}, 0, {}};
  check_eps_list(cfg.eps_list);
  if (cfg.window_sizes.size() < 3) throw UsageError("--windows: need at least three sizes");
  for (std::size_t i = 1; i < cfg.window_sizes.size(); ++i)
    if (cfg.window_sizes[i] <= cfg.window_sizes[i - 1])
      throw UsageError("--windows: sizes must be strictly increasing");
  ctx.entropy.fit = parse_fit_kind(cfg.fit);
  ctx.entropy.tail_fraction = cfg.tail_fraction;
  ctx.entropy.grid_step = cfg.grid_step;
  ctx.local.entropy = ctx.entropy;
  ctx.local.threads = cfg.threads;
  ctx.delta = cfg.delta.value_or(ctx.system.diameter / 4);
  if (need_centers) ctx.centers = sample_centers(ctx.system, cfg.centers, cfg.seed, cfg.grid_step);
  return ctx;
}

void add_estimate_comments(Artifact* a, const std::string& label, const MmdimEstimate& e) {
  a->comments.push_back(label + " upper=" + fmt(e.upper) + " lower=" + fmt(e.lower) +
                        " monotone=" + (e.monotone ? "true" : "false"));
  a->comments.push_back(label + " bound: " + mmdim_bound_report(e));
  for (const auto& w : e.warnings) a->comments.push_back(label + " warning: " + w);
}

// ---- subcommands ------------------------------------------------------------

Artifact cmd_systems(const RunConfig&) {
  Artifact a;
  a.result = Json::array();
  a.header = {"id", "lattice_dim", "point_kind", "alphabet_size", "coordinate_dim",
              "metric_kind", "diameter", "known_S", "known_mmdim", "oracle"};
  for (const auto& e : catalog()) {
    a.result.push_back(to_json(e));
    const auto& s = e.spec;
    a.rows.push_back({s.id, std::to_string(s.lattice_dim), to_string(s.point_kind),
                      std::to_string(s.alphabet_size), std::to_string(s.coordinate_dim),
                      to_string(s.metric_kind), fmt(s.diameter), e.known_S,
                      e.known_mmdim ? fmt(*e.known_mmdim) : "", e.oracle});
  }
  return a;
}

Artifact cmd_entropy(const RunConfig& cfg) {
  Context ctx = make_context(cfg, false);
  Artifact a;
  a.result = {{"system", to_json(ctx.system)}, {"curves", Json::array()}};
  a.header = {"epsilon", "N", "volume", "method", "log_count", "log_count_lo", "log_count_hi",
              "S_fit"};
  const PointSet x = PointSet::whole(ctx.system);
  std::vector<EntropyCurve> curves(cfg.eps_list.size());
  parallel_for(curves.size(), cfg.threads, [&](std::size_t i) {
    curves[i] = entropy_at_scale(x, cfg.eps_list[i], cfg.window_sizes, ctx.entropy);
  });
  for (const auto& c : curves) {
    a.result["curves"].push_back(to_json(c));
    for (const auto& s : c.samples)
      a.rows.push_back({fmt(c.epsilon), std::to_string(s.size), std::to_string(s.volume),
                        to_string(s.method), fmt(log_count(s.count)), fmt(log_count(s.lo)),
                        fmt(log_count(s.hi)), fmt(c.fitted_S)});
    for (const auto& w : c.warnings) a.comments.push_back("eps=" + fmt(c.epsilon) + " " + w);
  }
  return a;
}

Artifact cmd_mmdim(const RunConfig& cfg) {
  Context ctx = make_context(cfg, false);
  const MmdimEstimate e = mmdim_estimate(ctx.system, cfg.eps_list, cfg.window_sizes, ctx.entropy);
  Artifact a;
  a.result = to_json(e);
  add_estimate_comments(&a, "global", e);
  a.header = {"epsilon", "S", "ratio"};
  for (const auto& p : e.points) a.rows.push_back({fmt(p.epsilon), fmt(p.S), fmt(p.ratio)});
  return a;
}

Artifact cmd_local(const RunConfig& cfg) {
  Context ctx = make_context(cfg, true);
  const LocalMmdimReport r =
      local_mmdim(ctx.system, ctx.delta, cfg.eps_list, ctx.centers, cfg.window_sizes, ctx.local);
  Artifact a;
  a.result = {{"delta", ctx.delta}, {"estimate", to_json(r.estimate)}, {"reports", Json::array()}};
  add_estimate_comments(&a, "local", r.estimate);
  a.header = {"center_id", "delta", "epsilon", "S_local", "M_used", "converged"};
  for (const auto& per_eps : r.reports)
    for (const auto& rep : per_eps) {
      a.result["reports"].push_back(to_json(rep));
      a.rows.push_back({std::to_string(rep.center_id), fmt(rep.delta), fmt(rep.epsilon),
                        fmt(rep.S_local), std::to_string(rep.M_used),
                        rep.converged ? "true" : "false"});
    }
  return a;
}

Artifact cmd_compare(const RunConfig& cfg) {
  Context ctx = make_context(cfg, true);
  const MmdimEstimate g = mmdim_estimate(ctx.system, cfg.eps_list, cfg.window_sizes, ctx.entropy);
  const LocalMmdimReport l =
      local_mmdim(ctx.system, ctx.delta, cfg.eps_list, ctx.centers, cfg.window_sizes, ctx.local);
  const double gap_upper = std::abs(l.estimate.upper - g.upper);
  const double gap_lower = std::abs(l.estimate.lower - g.lower);
  Artifact a;
  a.result = {{"delta", ctx.delta},
              {"global", to_json(g)},
              {"local", to_json(l.estimate)},
              {"gap_upper", gap_upper},
              {"gap_lower", gap_lower}};
  add_estimate_comments(&a, "global", g);
  add_estimate_comments(&a, "local", l.estimate);
  a.comments.push_back("gap upper=" + fmt(gap_upper) + " lower=" + fmt(gap_lower));
  a.header = {"epsilon", "S_global", "max_S_local", "ratio_global", "ratio_local"};
  for (std::size_t i = 0; i < g.points.size(); ++i)
    a.rows.push_back({fmt(g.points[i].epsilon), fmt(g.points[i].S), fmt(l.max_S[i]),
                      fmt(g.points[i].ratio), fmt(l.estimate.points[i].ratio)});
  return a;
}

Artifact cmd_hstar(const RunConfig& cfg) {
  Context ctx = make_context(cfg, true);
  const HStarReport h = h_star_estimate(ctx.system, ctx.delta, cfg.eps_list, ctx.centers,
                                        cfg.window_sizes, cfg.tolerance, ctx.local);
  Artifact a;
  a.result = to_json(h);
  a.comments.push_back("h* value=" + fmt(h.value) + " tolerance=" + fmt(h.tolerance) +
                       " h_expansive_evidence=" + (h.evidence ? "true" : "false"));
  a.header = {"epsilon", "max_S_local"};
  for (const auto& [e, s] : h.max_S_by_eps) a.rows.push_back({fmt(e), fmt(s)});
  return a;
}

Json read_json_file(const std::string& path, const std::string& field) {
  if (path.empty()) throw UsageError("--" + field + ": required");
  std::ifstream in(path);
  if (!in) throw UsageError("--" + field + ": cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("--" + field + ": '" + path + "' is not valid JSON: " + e.what());
  }
}

void add_vitali_rows(Artifact* a, const tiling::CubeFamily& input, const tiling::VitaliResult& v) {
  a->header = {"order", "input_index", "corner", "side"};
  for (std::size_t k = 0; k < v.selected.size(); ++k) {
    const auto& c = input[v.selected[k]];
    a->rows.push_back({std::to_string(k), std::to_string(v.selected[k]), cube_corner(c),
                       to_string(c.side)});
  }
}

Artifact cmd_tile_vitali(const RunConfig& cfg) {
  const Json j = read_json_file(cfg.input, "input");
  const tiling::CubeFamily family = tiling::family_from_json(j);
  const tiling::VitaliResult v =
      tiling::vitali_select(family, tiling::parse_overlap_rule(cfg.overlap));
  Artifact a;
  a.result = tiling::to_json(v);
  a.comments.push_back("vitali " + v.describe());
  a.failed = !v.all_hold();
  add_vitali_rows(&a, family, v);
  return a;
}

struct MultiscaleInput {
  tiling::Region omega;
  std::vector<tiling::CubeFamily> families;
  Rational eta;
  std::optional<std::int64_t> scale_ratio;
};

MultiscaleInput multiscale_input(const Json& j) {
  if (!j.is_object()) throw UsageError("--input: expected an object with omega, families, eta");
  for (const char* k : {"omega", "families", "eta"})
    if (!j.contains(k)) throw UsageError(std::string("--input: missing field '") + k + "'");
  MultiscaleInput in;
  in.omega = tiling::region_from_json(j["omega"]);
  if (!j["families"].is_array() || j["families"].empty())
    throw UsageError("--input: field 'families' must be a nonempty list");
  for (const auto& f : j["families"]) in.families.push_back(tiling::family_from_json(f));
  in.eta = rational_from_json(j["eta"]);
  if (j.contains("scale_ratio")) {
    if (!j["scale_ratio"].is_number_integer())
      throw UsageError("--input: field 'scale_ratio' must be an integer");
    in.scale_ratio = j["scale_ratio"].get<std::int64_t>();
  }
  return in;
}

Artifact cmd_tile_multiscale(const RunConfig& cfg) {
  const MultiscaleInput in = multiscale_input(read_json_file(cfg.input, "input"));
  tiling::MultiscaleOptions opt;
  opt.scale_ratio = in.scale_ratio;
  opt.rule = tiling::parse_overlap_rule(cfg.overlap);
  const tiling::MultiscaleResult r = tiling::multiscale_select(in.omega, in.families, in.eta, opt);
  Artifact a;
  a.result = tiling::to_json(r);
  a.comments.push_back("multiscale " + r.describe());
  a.header = {"order", "family", "cube_index", "corner", "side"};
  for (std::size_t k = 0; k < r.chosen.size(); ++k) {
    const auto& [f, i] = r.chosen[k];
    const auto& c = in.families[f][i];
    a.rows.push_back({std::to_string(k), std::to_string(f + 1), std::to_string(i),
                      cube_corner(c), to_string(c.side)});
  }
  return a;
}

// Exact inequalities: coding bound (cut and window forms), trivial bound,
// Vitali postconditions on random families, and the multiscale conclusions
// for --input. The Bowen growth diagnostic is reported but not asserted.
Artifact cmd_check(const RunConfig& cfg) {
  RunConfig c = cfg;
  if (c.system.empty()) c.system = "full-shift-2";
  const SystemSpec s = resolve_system(c.system);
  Artifact a;
  a.result = Json::array();
  a.header = {"check", "parameters", "lhs", "rhs", "holds"};
  auto record = [&](const std::string& name, const std::string& params,
                    const std::function<std::pair<std::string, std::string>()>& fn) {
    std::string lhs, rhs;
    bool holds = true;
    try {
      std::tie(lhs, rhs) = fn();
    } catch (const PropertyViolation& e) {
      holds = false;
      lhs = e.what();
    }
    a.failed = a.failed || !holds;
    a.rows.push_back({name, params, lhs, rhs, holds ? "true" : "false"});
    a.result.push_back({{"check", name}, {"parameters", params}, {"lhs", lhs}, {"rhs", rhs},
                        {"holds", holds}});
  };

  const PointSet x = PointSet::whole(s);
  const std::int64_t n_max = c.window_sizes.back();
  for (double eps : c.eps_list) {
    if (s.lattice_dim == 1) {
      for (std::int64_t n = 1; n <= n_max; ++n)
        for (std::int64_t t1 = 0; t1 < n; ++t1)
          for (std::int64_t t2 = t1; t2 < n; ++t2) {
            if (t1 == 0 && t2 > 0) continue;  // blocks are listed once
            std::vector<std::int64_t> cuts = {0};
            if (t1 > 0) cuts.push_back(t1);
            if (t2 > t1) cuts.push_back(t2);
            cuts.push_back(n);
            std::vector<std::string> t;
            for (auto v : cuts) t.push_back(std::to_string(v));
            record("coding_cuts", "eps=" + fmt(eps) + " cuts=" + join(t, " "), [&] {
              const CodingReport r = coding_bound_check(x, cuts, eps);
              return std::pair(to_string(r.lhs), to_string(r.rhs));
            });
          }
    } else if (s.lattice_dim == 2) {
      const std::int64_t side = std::min<std::int64_t>(n_max, 4);
      const Window omega = Window::cube(side, 2);
      for (std::int64_t cx = 1; cx < side; ++cx)
        for (std::int64_t cy = 1; cy < side; ++cy) {
          const std::vector<Window> pieces = {
              Window::box({0, 0}, {cx - 1, cy - 1}), Window::box({cx, 0}, {side - 1, cy - 1}),
              Window::box({0, cy}, {cx - 1, side - 1}),
              Window::box({cx, cy}, {side - 1, side - 1})};
          record("coding_window",
                 "eps=" + fmt(eps) + " omega=" + omega.to_string() + " cut=" +
                     std::to_string(cx) + "," + std::to_string(cy),
                 [&] {
                   const CodingReport r = coding_bound_check(x, omega, pieces, eps);
                   return std::pair(to_string(r.lhs), to_string(r.rhs));
                 });
        }
    }
    const std::int64_t box_max = std::min<std::int64_t>(n_max, s.lattice_dim == 1 ? 8 : 4) - 1;
    std::vector<Site> his;
    if (s.lattice_dim == 1) {
      for (std::int64_t a1 = 0; a1 <= box_max; ++a1) his.push_back({a1});
    } else if (s.lattice_dim == 2) {
      for (std::int64_t a1 = 0; a1 <= box_max; ++a1)
        for (std::int64_t a2 = 0; a2 <= box_max; ++a2) his.push_back({a1, a2});
    }
    for (const Site& hi : his) {
      const Window w = Window::box(Site(hi.size(), 0), hi);
      record("trivial_bound", "eps=" + fmt(eps) + " window=" + w.to_string(), [&] {
        const TrivialBoundReport r = trivial_bound_check(s, w, eps);
        return std::pair(to_string(r.lhs),
                         to_string(r.base) + "^" + std::to_string(r.exponent));
      });
    }
  }

  const auto rule = tiling::parse_overlap_rule(c.overlap);
  std::size_t failures = 0;
  for (int d = 1; d <= 3; ++d)
    for (std::size_t i = 0; i < c.vitali_families; ++i) {
      const auto fam = tiling::random_cube_family(d, 4 + (c.seed + i) % 29, c.seed * 1000 + i);
      const auto v = tiling::vitali_select(fam, rule);
      if (!v.all_hold()) {
        ++failures;
        record("vitali", "dim=" + std::to_string(d) + " family=" + std::to_string(i),
               [&]() -> std::pair<std::string, std::string> {
                 throw PropertyViolation(v.describe());
               });
      }
    }
  if (c.vitali_families > 0)
    record("vitali_random", std::to_string(3 * c.vitali_families) + " families",
           [&] { return std::pair(std::to_string(failures) + " failures", std::string("0")); });

  if (!c.input.empty()) {
    const MultiscaleInput in = multiscale_input(read_json_file(c.input, "input"));
    tiling::MultiscaleOptions opt;
    opt.scale_ratio = in.scale_ratio;
    opt.rule = rule;
    record("multiscale", c.input, [&] {
      const auto r = tiling::multiscale_select(in.omega, in.families, in.eta, opt);
      return std::pair(to_string(r.dilated_residual_volume), to_string(r.eta * r.omega_volume));
    });
  }

  if (c.growth) {
    Context ctx = make_context(c, true);
    for (double eps : c.eps_list) {
      const GrowthReport g = bowen_growth_check(s, ctx.centers, ctx.delta, eps, c.n_list,
                                                c.beta, c.window_sizes, ctx.local);
      // Asymptotic statement: reported, not asserted.
      const std::string params = "eps=" + fmt(eps) + " delta=" + fmt(ctx.delta) +
                                 " beta=" + fmt(c.beta);
      a.rows.push_back({"bowen_growth", params, fmt(g.g_max), fmt(g.a + g.beta),
                        g.holds ? "true" : "false"});
      a.result.push_back({{"check", "bowen_growth"}, {"parameters", params},
                          {"report", to_json(g)}});
    }
  }
  return a;
}

// ---- emission ---------------------------------------------------------------

std::string render(const RunConfig& cfg, const Artifact& a) {
  if (cfg.format == Format::json) {
    Json j;
    j["tool"] = "mmdim";
    j["version"] = kVersion;
    j["config"] = cfg.to_json();
    j["comments"] = a.comments;
    j["result"] = a.result;
    return j.dump(2) + "\n";
  }
  std::string s = std::string("# tool=mmdim version=") + kVersion + "\n";
  s += "# config=" + cfg.to_json().dump() + "\n";
  for (const auto& c : a.comments) s += "# " + c + "\n";
  std::vector<std::string> cells;
  for (const auto& h : a.header) cells.push_back(csv_field(h));
  s += join(cells, ",") + "\n";
  for (const auto& row : a.rows) {
    cells.clear();
    for (const auto& f : row) cells.push_back(csv_field(f));
    s += join(cells, ",") + "\n";
  }
  return s;
}

void emit(const RunConfig& cfg, const Artifact& a, std::ostream& out) {
  const std::string text = render(cfg, a);
  std::string path = cfg.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("MMDIM_OUTPUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) /
              (cfg.subcommand + (cfg.format == Format::json ? ".json" : ".csv")))
                 .string();
  }
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("--output: cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("--output: write to '" + path + "' failed");
  out << "wrote " << path << "\n";
  for (const auto& c : a.comments) out << c << "\n";
}

const std::map<std::string, std::function<Artifact(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Artifact(const RunConfig&)>> m = {
      {"systems", cmd_systems},         {"entropy", cmd_entropy},
      {"mmdim", cmd_mmdim},             {"local", cmd_local},
      {"compare", cmd_compare},         {"hstar", cmd_hstar},
      {"tile-vitali", cmd_tile_vitali}, {"tile-multiscale", cmd_tile_multiscale},
      {"check", cmd_check},
  };
  return m;
}

const char* command_help(const std::string& name) {
  static const std::map<std::string, const char*> help = {
      {"systems", "dump the system catalog"},
      {"entropy", "S(X, eps) curves from exact or bracketed covering counts"},
      {"mmdim", "upper and lower metric mean dimension estimates"},
      {"local", "local entropy of Bowen balls at sampled centers"},
      {"compare", "local against global estimates and their gap"},
      {"hstar", "h*(X, delta) estimate"},
      {"tile-vitali", "greedy Vitali selection of a cube family (--input)"},
      {"tile-multiscale", "multi-scale disjoint selection (--input)"},
      {"check", "exact inequality diagnostics; exit 3 if any fails"},
  };
  return help.at(name);
}

}  // namespace

Json RunConfig::to_json() const {
  Json j;
  j["subcommand"] = subcommand;
  j["system"] = system;
  j["eps"] = eps_text;
  j["windows"] = window_sizes;
  j["delta"] = delta ? Json(*delta) : Json(nullptr);
  j["centers"] = centers;
  j["seed"] = seed;
  j["grid_step"] = grid_step;
  j["tail_fraction"] = tail_fraction;
  j["fit"] = fit;
  j["beta"] = beta;
  j["n_list"] = n_list;
  j["tolerance"] = tolerance;
  j["input"] = input;
  j["overlap"] = overlap;
  j["vitali_families"] = vitali_families;
  j["growth"] = growth;
  j["format"] = format == Format::csv ? "csv" : "json";
  return j;
}

double parse_real(const std::string& text, const std::string& field) {
  auto bad = [&] { return UsageError("--" + field + ": '" + text + "' is not a number"); };
  auto number = [&](const std::string& t) {
    double v = 0;
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || end != t.data() + t.size()) throw bad();
    return v;
  };
  if (auto p = text.find('^'); p != std::string::npos)
    return std::pow(number(text.substr(0, p)), number(text.substr(p + 1)));
  if (auto p = text.find('/'); p != std::string::npos) {
    const double den = number(text.substr(p + 1));
    if (den == 0) throw bad();
    return number(text.substr(0, p)) / den;
  }
  return number(text);
}

SystemSpec resolve_system(const std::string& text) {
  if (text.empty()) throw UsageError("--system: empty");
  if (text.front() == '{') {
    try {
      return system_from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--system: malformed JSON: ") + e.what());
    }
  }
  for (const auto& e : catalog())
    if (e.spec.id == text) return e.spec;
  if (text.find('*') != std::string::npos) {
    std::vector<SystemCatalogEntry> parts;
    std::stringstream ss(text);
    for (std::string id; std::getline(ss, id, '*');) parts.push_back(find_system(id));
    return build_product(parts).spec;
  }
  if (std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    try {
      return system_from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("--system: '" + text + "' is not valid JSON: " + e.what());
    }
  }
  throw UsageError("--system: unknown system '" + text + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric mean dimension estimates and tiling checks", "mmdim"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::map<std::string, std::vector<std::string>> raw;
  std::map<std::string, CLI::Option*> opts;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config; command-line flags take precedence");
  for (const auto& o : option_table()) {
    auto* opt = app.add_option(std::string("--") + o.name, raw[o.name], o.help);
    if (o.list) opt->delimiter(',');
    else opt->expected(1);
    opts[o.name] = opt;
  }
  for (const auto& [name, fn] : commands()) app.add_subcommand(name, command_help(name))->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mmdim: " << e.what() << "\n";
    return 2;
  }
  const std::string sub = app.get_subcommands().front()->get_name();

  try {
    if (!config_path.empty()) {
      const Json j = read_json_file(config_path, "config");
      if (!j.is_object()) throw UsageError("--config: expected a JSON object");
      for (const auto& [key, value] : j.items()) {
        std::string name = key;
        std::replace(name.begin(), name.end(), '_', '-');
        if (!opts.count(name)) throw UsageError("config field '" + key + "': unknown");
        if (opts[name]->count() > 0) continue;
        auto& dst = raw[name];
        if (value.is_array()) {
          for (const auto& v : value) dst.push_back(json_scalar_text(v, key));
        } else if (name == "system" && value.is_object()) {
          dst.push_back(value.dump());
        } else {
          dst.push_back(json_scalar_text(value, key));
        }
      }
    }
    const RunConfig cfg = build_config(sub, raw);
    const Artifact a = commands().at(sub)(cfg);
    emit(cfg, a, out);
    if (a.failed) {
      err << "mmdim: a checked property failed\n";
      return 3;
    }
    return 0;
  } catch (const PropertyViolation& e) {
    err << "mmdim: property violated: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "mmdim: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mmdim::cli
