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

#include "mmdim/json_io.hpp"

#include "mmdim/error.hpp"

namespace mmdim {
namespace {

template <typename T>
T field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name))
    throw UsageError(where + ": missing field '" + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(where + ": field '" + name + "' has the wrong type");
  }
}

template <typename T>
T field_or(const Json& j, const char* name, T fallback, const std::string& where) {
  if (!j.contains(name)) return fallback;
  return field<T>(j, name, where);
}

}  // namespace

Json to_json(const SystemSpec& s) {
  Json j;
  j["id"] = s.id;
  j["lattice_dim"] = s.lattice_dim;
  j["point_kind"] = to_string(s.point_kind);
  j["alphabet_size"] = s.alphabet_size;
  j["coordinate_dim"] = s.coordinate_dim;
  j["metric_kind"] = to_string(s.metric_kind);
  j["diameter"] = s.diameter;
  if (!s.transitions.empty()) j["transitions"] = s.transitions;
  if (!s.factors.empty()) {
    j["factors"] = Json::array();
    for (const auto& f : s.factors) j["factors"].push_back(to_json(f));
  }
  return j;
}

SystemSpec system_from_json(const Json& j) {
  const std::string where = "system";
  if (!j.is_object()) throw UsageError("system: expected a JSON object");
  SystemSpec s;
  s.id = field<std::string>(j, "id", where);
  s.lattice_dim = field<int>(j, "lattice_dim", where);
  s.point_kind = parse_point_kind(field<std::string>(j, "point_kind", where));
  s.alphabet_size = field_or<int>(j, "alphabet_size", 2, where);
  s.coordinate_dim = field_or<int>(j, "coordinate_dim", 1, where);
  s.metric_kind = parse_metric_kind(field_or<std::string>(
      j, "metric_kind",
      s.point_kind == PointKind::interval_product ? "weighted_sup" : "dyadic_sup", where));
  s.transitions = field_or<std::vector<std::vector<int>>>(j, "transitions", {}, where);
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) throw UsageError("system: field 'factors' must be a list");
    for (const auto& f : j["factors"]) s.factors.push_back(system_from_json(f));
  }
  s.diameter = field_or<double>(j, "diameter", structural_diameter(s), where);
  validate(s);
  return s;
}

Json to_json(const SystemCatalogEntry& e) {
  Json j;
  j["spec"] = to_json(e.spec);
  j["known_S"] = e.known_S;
  j["known_mmdim"] = e.known_mmdim ? Json(*e.known_mmdim) : Json(nullptr);
  j["mmdim_note"] = e.mmdim_note;
  j["expansivity_constant"] =
      e.expansivity_constant ? Json(*e.expansivity_constant) : Json(nullptr);
  j["oracle"] = e.oracle;
  return j;
}

Json to_json(const Window& w) {
  Json j;
  if (w.kind() == Window::Kind::box) {
    j["kind"] = "box";
    j["lo"] = w.lo();
    j["hi"] = w.hi();
  } else {
    j["kind"] = "explicit";
    j["sites"] = w.sites();
  }
  return j;
}

Window window_from_json(const Json& j) {
  const std::string kind = field<std::string>(j, "kind", "window");
  if (kind == "box")
    return Window::box(field<Site>(j, "lo", "window"), field<Site>(j, "hi", "window"));
  if (kind == "explicit") return Window::from_sites(field<std::vector<Site>>(j, "sites", "window"));
  throw UsageError("window: unknown kind '" + kind + "'");
}

Json to_json(const Point& p) {
  Json j;
  j["system_id"] = p.system_id;
  if (!p.components.empty()) {
    j["components"] = Json::array();
    for (const auto& c : p.components) j["components"].push_back(to_json(c));
    return j;
  }
  j["window"] = {{"lo", p.lo}, {"hi", p.hi}};
  j["values"] = p.values;
  j["tail"] = p.tail;
  return j;
}

Point point_from_json(const SystemSpec& s, const Json& j) {
  if (s.point_kind == PointKind::product_of_systems) {
    if (!j.contains("components") || !j["components"].is_array())
      throw UsageError("point: field 'components' required for product systems");
    std::vector<Point> comps;
    for (std::size_t i = 0; i < j["components"].size() && i < s.factors.size(); ++i)
      comps.push_back(point_from_json(s.factors[i], j["components"][i]));
    return Point::product(s, std::move(comps));
  }
  const Json w = j.contains("window") ? j["window"] : Json();
  return Point::make(s, field<Site>(w, "lo", "point.window"), field<Site>(w, "hi", "point.window"),
                     field<std::vector<double>>(j, "values", "point"),
                     field<std::vector<double>>(j, "tail", "point"));
}

Json to_json(const Count& c) {
  if (auto v = to_u64(c); v && *v < (std::uint64_t{1} << 53)) return Json(*v);
  return Json(c.str());
}

Json to_json(const NetResult& r) {
  Json j;
  j["epsilon"] = r.epsilon;
  j["window"] = to_json(r.window);
  j["method"] = to_string(r.method);
  j["cardinality"] = to_json(r.cardinality);
  j["lower_bound"] = to_json(r.lower_bound);
  j["upper_bound"] = to_json(r.upper_bound);
  j["centers"] = Json::array();
  for (const auto& c : r.centers) j["centers"].push_back(to_json(c));
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const EntropyCurve& c) {
  Json j;
  j["epsilon"] = c.epsilon;
  j["fit_kind"] = to_string(c.fit_kind);
  j["fitted_S"] = c.fitted_S;
  j["S_bracket"] = {c.S_lo, c.S_hi};
  j["tail_start"] = c.tail_start;
  j["samples"] = Json::array();
  for (const auto& s : c.samples)
    j["samples"].push_back({{"window_size", s.size},
                            {"volume", s.volume},
                            {"method", to_string(s.method)},
                            {"count", to_json(s.count)},
                            {"log_count", log_count(s.count)},
                            {"bracket", {log_count(s.lo), log_count(s.hi)}}});
  j["warnings"] = c.warnings;
  return j;
}

Json to_json(const MmdimEstimate& e) {
  Json j;
  j["system_id"] = e.system_id;
  j["points"] = Json::array();
  for (const auto& p : e.points)
    j["points"].push_back({{"epsilon", p.epsilon}, {"S", p.S}, {"ratio", p.ratio}});
  j["upper"] = e.upper;
  j["lower"] = e.lower;
  j["epsilon_range"] = {e.epsilon_range.first, e.epsilon_range.second};
  j["monotone"] = e.monotone;
  j["bound"] = mmdim_bound_report(e);
  j["warnings"] = e.warnings;
  return j;
}

Json to_json(const LocalEntropyReport& r) {
  Json j;
  j["center_id"] = r.center_id;
  j["center"] = to_json(r.center);
  j["delta"] = r.delta;
  j["epsilon"] = r.epsilon;
  j["S_local"] = r.S_local;
  j["M_used"] = r.M_used;
  j["converged"] = r.converged;
  j["S_by_M"] = Json::array();
  for (const auto& [m, s] : r.S_by_M) j["S_by_M"].push_back({m, s});
  return j;
}

Json to_json(const CodingReport& r) {
  Json j;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["factors"] = Json::array();
  for (const auto& f : r.factors) j["factors"].push_back(to_json(f));
  j["holds"] = r.holds;
  return j;
}

Json to_json(const TrivialBoundReport& r) {
  return {{"lhs", to_json(r.lhs)}, {"base", to_json(r.base)}, {"exponent", r.exponent},
          {"rhs", to_json(r.rhs)}, {"holds", r.holds}};
}

Json to_json(const GrowthReport& r) {
  Json j;
  j["delta"] = r.delta;
  j["epsilon"] = r.epsilon;
  j["a"] = r.a;
  j["beta"] = r.beta;
  j["g_max"] = r.g_max;
  j["holds"] = r.holds;
  j["rows"] = Json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"center_id", row.center_id}, {"n", row.n},
                         {"count", to_json(row.count)}, {"g", row.g}});
  return j;
}

Json to_json(const HStarReport& r) {
  Json j;
  j["delta"] = r.delta;
  j["value"] = r.value;
  j["tolerance"] = r.tolerance;
  j["h_expansive_evidence"] = r.evidence;
  j["max_S_by_eps"] = Json::array();
  for (const auto& [e, s] : r.max_S_by_eps) j["max_S_by_eps"].push_back({e, s});
  return j;
}

Json to_json(const Rational& q) {
  return Json::array({to_json(Count(numerator(q))), to_json(Count(denominator(q)))});
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
      auto part = [](const Json& x) {
        return x.is_string() ? Count(x.get<std::string>()) : Count(x.get<long long>());
      };
      const Count den = part(j[1]);
      if (den == 0) throw UsageError("rational: zero denominator");
      return Rational(part(j[0]), den);
    }
  } catch (const nlohmann::json::exception&) {
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
  }
  throw UsageError("rational: expected [num, den], an integer or \"p/q\", got " + j.dump());
}

namespace tiling {

Json to_json(const Cube& c) {
  Json u = Json::array();
  for (const auto& x : c.corner) u.push_back(mmdim::to_json(x));
  return {{"corner", u}, {"side", mmdim::to_json(c.side)}};
}

Cube cube_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("corner") || !j.contains("side"))
    throw UsageError("cube: fields 'corner' and 'side' are required");
  std::vector<Rational> u;
  for (const auto& x : j["corner"]) u.push_back(rational_from_json(x));
  return Cube(std::move(u), rational_from_json(j["side"]));
}

Json to_json(const CubeFamily& f) {
  Json j;
  j["cubes"] = Json::array();
  for (const auto& c : f.cubes()) j["cubes"].push_back(to_json(c));
  j["ell_max"] = mmdim::to_json(f.ell_max());
  j["ell_min"] = mmdim::to_json(f.ell_min());
  return j;
}

CubeFamily family_from_json(const Json& j) {
  const Json& list = j.is_object() && j.contains("cubes") ? j["cubes"] : j;
  if (!list.is_array()) throw UsageError("cube family: expected a list of cubes");
  std::vector<Cube> cubes;
  for (const auto& c : list) cubes.push_back(cube_from_json(c));
  if (cubes.empty()) throw UsageError("cube family: must be nonempty");
  return CubeFamily(std::move(cubes));
}

Json to_json(const Box& b) {
  Json lo = Json::array(), hi = Json::array();
  for (const auto& x : b.lo) lo.push_back(mmdim::to_json(x));
  for (const auto& x : b.hi) hi.push_back(mmdim::to_json(x));
  return {{"lo", lo}, {"hi", hi}};
}

Box box_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    throw UsageError("box: fields 'lo' and 'hi' are required");
  Box b;
  for (const auto& x : j["lo"]) b.lo.push_back(rational_from_json(x));
  for (const auto& x : j["hi"]) b.hi.push_back(rational_from_json(x));
  if (b.lo.size() != b.hi.size() || b.lo.empty())
    throw UsageError("box: 'lo' and 'hi' must have the same positive length");
  return b;
}

Json to_json(const Region& r) {
  Json j;
  j["kind"] = to_string(r.kind());
  j["dim"] = r.dim();
  j["volume"] = mmdim::to_json(r.volume());
  j["boxes"] = Json::array();
  for (const auto& b : r.boxes()) j["boxes"].push_back(to_json(b));
  if (!r.notes().empty()) j["notes"] = r.notes();
  return j;
}

Region region_from_json(const Json& j) {
  const Json& list = j.is_object() ? (j.contains("boxes") ? j["boxes"] : Json()) : j;
  if (!list.is_array() || list.empty()) throw UsageError("region: expected a nonempty list of boxes");
  std::vector<Box> boxes;
  for (const auto& b : list) boxes.push_back(box_from_json(b));
  const int d = boxes.front().dim();
  for (const auto& b : boxes)
    if (b.dim() != d) throw UsageError("region: boxes of different dimensions");
  return Region::from_boxes(d, boxes);
}

Json to_json(const VitaliResult& r) {
  Json j;
  j["selected"] = r.selected;
  j["family"] = to_json(r.family);
  j["selected_volume"] = mmdim::to_json(r.selected_volume);
  j["input_volume"] = mmdim::to_json(r.input_volume);
  j["disjoint"] = r.disjoint;
  j["covered_by_tripled"] = r.covered;
  j["witnesses_ok"] = r.witnesses_ok;
  j["volume_bound"] = r.volume_bound;
  j["holds"] = r.all_hold();
  return j;
}

Json to_json(const MultiscaleResult& r) {
  Json j;
  j["families"] = r.families;
  j["scale_ratio"] = r.scale_ratio;
  j["eta"] = mmdim::to_json(r.eta);
  j["chosen"] = Json::array();
  for (const auto& [f, i] : r.chosen) j["chosen"].push_back({f + 1, i});
  j["steps"] = Json::array();
  for (const auto& s : r.steps)
    j["steps"].push_back({{"k", s.k},
                          {"family", s.family},
                          {"r", mmdim::to_json(s.r)},
                          {"interior_volume", mmdim::to_json(s.interior_volume)},
                          {"candidates", s.candidates},
                          {"selected", s.selected},
                          {"selected_volume", mmdim::to_json(s.selected_volume)}});
  j["omega_volume"] = mmdim::to_json(r.omega_volume);
  j["residual_volume"] = mmdim::to_json(r.residual_volume);
  j["dilated_residual_volume"] = mmdim::to_json(r.dilated_residual_volume);
  j["claim_k"] = r.claim_k ? Json(*r.claim_k) : Json(nullptr);
  j["disjoint"] = r.disjoint;
  j["contained"] = r.contained;
  j["residual_small"] = r.residual_small;
  j["holds"] = r.all_hold();
  return j;
}

}  // namespace tiling
}  // namespace mmdim
