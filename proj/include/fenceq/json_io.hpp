#pragma once

#include "json.hpp"

#include "fenceq/cluster.hpp"
#include "fenceq/poly.hpp"
#include "fenceq/poset.hpp"
#include "fenceq/scan.hpp"
#include "fenceq/surface.hpp"

namespace fenceq {

// Ascending coefficients; values beyond 64 bits fall back to decimal strings.
nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const SeqReport& r);
nlohmann::json to_json(const PolygonTriangulation& t);
nlohmann::json to_json(const LamCurve& c);
nlohmann::json to_json(const FinitePoset& p);
nlohmann::json to_json(const ScanReport& r);

PolygonTriangulation triangulation_from_json(const nlohmann::json& j);
LamCurve curve_from_json(const nlohmann::json& j);
MultiLamination multilamination_from_json(const nlohmann::json& j);
Arc arc_from_json(const nlohmann::json& j);
Composition composition_from_json(const nlohmann::json& j);

}  // namespace fenceq
