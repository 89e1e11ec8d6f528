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

#include "json.hpp"

#include "mmdim/covering.hpp"
#include "mmdim/entropy.hpp"
#include "mmdim/lattice.hpp"
#include "mmdim/local.hpp"
#include "mmdim/numeric.hpp"
#include "mmdim/point.hpp"
#include "mmdim/system.hpp"
#include "mmdim/systems.hpp"
#include "mmdim/tiling/cube.hpp"
#include "mmdim/tiling/multiscale.hpp"
#include "mmdim/tiling/region.hpp"
#include "mmdim/tiling/vitali.hpp"

namespace mmdim {

using Json = nlohmann::ordered_json;

// Parsing functions throw UsageError naming the offending field.
Json to_json(const SystemSpec& s);
SystemSpec system_from_json(const Json& j);
Json to_json(const SystemCatalogEntry& e);

Json to_json(const Window& w);
Window window_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const SystemSpec& s, const Json& j);

// Big counts are written as decimal strings.
Json to_json(const Count& c);
Json to_json(const NetResult& r);
Json to_json(const EntropyCurve& c);
Json to_json(const MmdimEstimate& e);
Json to_json(const LocalEntropyReport& r);
Json to_json(const CodingReport& r);
Json to_json(const TrivialBoundReport& r);
Json to_json(const GrowthReport& r);
Json to_json(const HStarReport& r);

// Rationals as [numerator, denominator]; integers and "p/q" strings are
// accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

namespace tiling {
Json to_json(const Cube& c);
Cube cube_from_json(const Json& j);
Json to_json(const CubeFamily& f);
CubeFamily family_from_json(const Json& j);
Json to_json(const Box& b);
Box box_from_json(const Json& j);
Json to_json(const Region& r);
// {"dim": D, "boxes": [...]} or a list of boxes.
Region region_from_json(const Json& j);
Json to_json(const VitaliResult& r);
Json to_json(const MultiscaleResult& r);
}  // namespace tiling

}  // namespace mmdim
