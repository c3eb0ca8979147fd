#include "plc/json_io.hpp"

#include <regex>
#include <string>

#include "plc/errors.hpp"

namespace plc::json {

json to_json(const Rational& x) { return x.str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

json to_json(const HCone& cone) { return json{{"dim", cone.dim}, {"ineqs", to_json(cone.ineqs)}}; }

json to_json(const VCone& cone) { return json{{"dim", cone.dim}, {"rays", to_json(cone.rays)}}; }

json to_json(const PositiveRoot& root) {
  return json{{"first", root.first}, {"last", root.last}, {"name", root.to_string()}};
}

json to_json(const ChamberSet& set) {
  return json{{"gap", set.gap}, {"open", set.open + 1}, {"close", set.close + 1}, {"members", set.members}};
}

json to_json(const LusztigCone& cone) {
  json ineqs = json::array();
  for (const auto& i : cone.inequalities()) ineqs.push_back(to_json(i.normal));
  return json{{"word", cone.word().to_string()},
              {"cone", to_json(cone.cone())},
              {"defining", json{{"dim", cone.dim()}, {"ineqs", ineqs}}},
              {"readable", cone.describe()}};
}

namespace {

json box_json(const Box& b) {
  return json{{"u", {b.u_lo, b.u_hi}}, {"w", {b.w_lo, b.w_hi}}};
}

json rectangle_json(const Rectangle& r) { return json::array({r.i, r.j, r.k, r.l}); }

json roots_json(const std::vector<PositiveRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

}  // namespace

json to_json(const RectangleConfiguration& cfg, const PartialQuiver& quiver) {
  json comps = json::array();
  json rects = json::array();
  for (const auto& p : cfg.placed) {
    comps.push_back(json{{"type", std::string(1, static_cast<char>(p.component.type))},
                         {"a", p.component.a},
                         {"b", p.component.b}});
    rects.push_back(json{{"levels", rectangle_json(p.rectangle)}, {"box", box_json(p.box)}});
  }
  json corners = json::array();
  std::vector<PositiveRoot> all;
  for (const auto& c : cfg.corners) {
    corners.push_back(json{{"label", std::string(1, c.label)},
                           {"side", c.is_left ? "left" : "right"},
                           {"x", to_json(c.x())},
                           {"level", to_json(c.level())},
                           {"maximal", rectangle_json(rectangle_of_box(c.maximal))},
                           {"phi", roots_json(c.phi)}});
    all.insert(all.end(), c.phi.begin(), c.phi.end());
  }
  std::sort(all.begin(), all.end());
  return json{{"quiver", quiver.to_string()},
              {"rank", cfg.rank},
              {"components", comps},
              {"rectangles", rects},
              {"diagonal_counts", json{{"nw_se", cfg.u_counts}, {"ne_sw", cfg.w_counts}}},
              {"centre", json{{"u", to_json(cfg.u0)},
                              {"w", to_json(cfg.w0)},
                              {"x", to_json(cfg.central_x())},
                              {"level", to_json(cfg.centre_level())},
                              {"single_band", cfg.centre_fallback}}},
              {"corners", corners},
              {"phi_plus", roots_json(all)},
              {"v_P", to_json(v_P(quiver))}};
}

json to_json(const Region& region) {
  return json{{"matrix", to_json(region.map)}, {"ineqs", to_json(region.cone.ineqs)}, {"facets", region.facet_count()}};
}

json to_json(const RegionAtlas& atlas) {
  json regions = json::array();
  for (const auto& r : atlas.regions) regions.push_back(to_json(r));
  return regions;
}

json to_json(const std::map<std::size_t, std::size_t>& histogram) {
  json out = json::object();
  for (const auto& [facets, count] : histogram) out[std::to_string(facets)] = count;
  return out;
}

json to_json(const BijectionReport& report, const RegionAtlas& atlas) {
  json rows = json::array();
  for (const auto& m : report.matches) {
    json row{{"class", m.representative.to_string()}, {"generators", to_json(m.generators)}};
    if (m.region) {
      row["region"] = *m.region;
      row["facets"] = atlas.regions[*m.region].facet_count();
    } else {
      row["region"] = nullptr;
      if (m.nearest) row["nearest"] = *m.nearest;
    }
    rows.push_back(std::move(row));
  }
  return json{{"rank", report.rank},
              {"minimal_facets", report.minimal_facets},
              {"minimal_regions", report.minimal_regions.size()},
              {"matched", report.matched()},
              {"bijection", report.is_bijection()},
              {"matches", rows}};
}

json to_json(const std::vector<OrthantRestriction>& analysis, const RegionAtlas& atlas) {
  json out = json::array();
  for (const auto& o : analysis) {
    out.push_back(json{{"region", o.region},
                       {"facets", o.facets},
                       {"orthant_facets", o.restricted_facets},
                       {"matrix", to_json(atlas.regions[o.region].map)}});
  }
  return out;
}

json to_json(const ClassGraph& graph) {
  json vertices = json::array();
  for (const auto& v : graph.vertices) vertices.push_back(json{{"representative", v.representative.to_string()}, {"size", v.size}});
  json edges = json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back(json::array({a, b}));
  return json{{"vertices", vertices}, {"edges", edges}, {"connected", graph.connected()}};
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) {
      static const std::regex form("-?[0-9]+(/0*[1-9][0-9]*)?");
      const auto text = j.get<std::string>();
      if (!std::regex_match(text, form)) throw DomainError("malformed rational: \"" + text + "\"");
      return Rational(text);
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw DomainError(std::string("malformed rational: ") + e.what());
  }
  throw DomainError("malformed rational: expected a decimal string");
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("malformed vector: expected an array");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

namespace {

std::vector<Vector> rows_from_json(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw DomainError(std::string("malformed cone: ") + what + " must be an array");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != dim) throw DomainError(std::string("malformed cone: ") + what + " of wrong dimension");
  }
  return rows;
}

std::size_t dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned()) {
    throw DomainError("malformed cone: missing dim");
  }
  return j["dim"].get<std::size_t>();
}

}  // namespace

HCone hcone_from_json(const json& j) {
  const std::size_t dim = dim_from_json(j);
  if (!j.contains("ineqs")) throw DomainError("malformed cone: missing ineqs");
  return HCone{dim, rows_from_json(j["ineqs"], dim, "ineqs"), false};
}

VCone vcone_from_json(const json& j) {
  const std::size_t dim = dim_from_json(j);
  if (!j.contains("rays")) throw DomainError("malformed cone: missing rays");
  return VCone{dim, rows_from_json(j["rays"], dim, "rays")};
}

}  // namespace plc::json
