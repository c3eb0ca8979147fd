#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "plc/chambers.hpp"
#include "plc/lusztig_cone.hpp"
#include "plc/polyhedra.hpp"
#include "plc/quivers.hpp"
#include "plc/rectangles.hpp"
#include "plc/regions.hpp"
#include "plc/weyl_words.hpp"

/// JSON forms of the library's objects. Exact numbers are written as decimal
/// strings ("3", "-1/2") so that no reader rounds them.
namespace plc::json {

using nlohmann::json;

json to_json(const Rational& x);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const HCone& cone);
json to_json(const VCone& cone);
json to_json(const PositiveRoot& root);
json to_json(const ChamberSet& set);
json to_json(const LusztigCone& cone);
json to_json(const RectangleConfiguration& config, const PartialQuiver& quiver);
json to_json(const Region& region);
json to_json(const RegionAtlas& atlas);
json to_json(const std::map<std::size_t, std::size_t>& histogram);
json to_json(const BijectionReport& report, const RegionAtlas& atlas);
json to_json(const std::vector<OrthantRestriction>& analysis, const RegionAtlas& atlas);
json to_json(const ClassGraph& graph);

/// Throw DomainError on malformed input.
Rational rational_from_json(const json& j);
Vector vector_from_json(const json& j);
HCone hcone_from_json(const json& j);
VCone vcone_from_json(const json& j);

}  // namespace plc::json
