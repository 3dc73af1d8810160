#include "chowtree/io.hpp"

#include <nlohmann/json.hpp>

#include "chowtree/errors.hpp"

namespace chowtree {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw MalformedInput(std::string("missing field '") + field + "'");
  }
  return j.at(field);
}

int require_int(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number_integer()) {
    throw MalformedInput(std::string("field '") + field + "' must be an integer");
  }
  return v.get<int>();
}

Rational rational_from(const json& j, const char* context) {
  if (!j.is_string()) {
    throw MalformedInput(std::string(context) + ": rationals must be \"a/b\" strings");
  }
  return Rational::parse(j.get<std::string>());
}

json coords_to_json(const std::vector<Rational>& coords) {
  json out = json::array();
  for (const auto& c : coords) out.push_back(c.str());
  return out;
}

std::vector<Rational> coords_from_json(const json& j, const char* context) {
  if (!j.is_array()) throw MalformedInput(std::string(context) + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from(e, context));
  return out;
}

json configuration_to_obj(const Configuration& c) {
  json points = json::array();
  for (const auto& p : c.points) {
    json entry;
    if (p.is_affine()) {
      entry["affine"] = coords_to_json(p.affine_point().coords());
    } else {
      entry["infinity"] = coords_to_json(p.direction().coords());
    }
    points.push_back(std::move(entry));
  }
  return json{{"d", c.dimension}, {"points", std::move(points)}};
}

Configuration configuration_from_obj(const json& j) {
  Configuration c;
  c.dimension = require_int(j, "d");
  const json& points = require(j, "points");
  if (!points.is_array()) throw MalformedInput("configuration: 'points' must be an array");
  for (const auto& e : points) {
    if (e.is_object() && e.contains("affine")) {
      c.points.push_back(ConfigPoint::affine(AffinePoint(coords_from_json(e.at("affine"), "point"))));
    } else if (e.is_object() && e.contains("infinity")) {
      c.points.push_back(
          ConfigPoint::at_infinity(HyperplaneDirection(coords_from_json(e.at("infinity"), "point"))));
    } else {
      throw MalformedInput("configuration: each point needs 'affine' or 'infinity'");
    }
  }
  for (const auto& p : c.points) {
    if (p.dim() != c.dimension) {
      throw MalformedInput("configuration: point dimension disagrees with 'd'");
    }
  }
  if (c.n() < 2) throw MalformedInput("configuration: at least two points required");
  return c;
}

}  // namespace

std::string tree_to_json(const StableTree& tree) {
  json vertices = json::array();
  for (const auto& v : tree.vertices) {
    json marks = json::array();
    for (const auto& m : v.marks) {
      marks.push_back(json{{"label", m.label}, {"at", coords_to_json(m.position.coords())}});
    }
    json children = json::array();
    for (const auto& link : v.children) {
      children.push_back(json{{"id", link.child}, {"at", coords_to_json(link.attachment.coords())}});
    }
    json vj{{"id", v.id}, {"marks", std::move(marks)}, {"children", std::move(children)}};
    vj["parent"] = v.parent ? json(*v.parent) : json(nullptr);
    vertices.push_back(std::move(vj));
  }
  const json out{
      {"d", tree.dimension}, {"n", tree.num_marks}, {"root", tree.root}, {"vertices", vertices}};
  return out.dump(2);
}

StableTree tree_from_json(const std::string& text) {
  const json j = parse_text(text);
  StableTree tree;
  tree.dimension = require_int(j, "d");
  tree.num_marks = require_int(j, "n");
  tree.root = require_int(j, "root");
  const json& vertices = require(j, "vertices");
  if (!vertices.is_array()) throw MalformedInput("tree: 'vertices' must be an array");
  for (const auto& vj : vertices) {
    TreeVertex v;
    v.id = require_int(vj, "id");
    const json& parent = require(vj, "parent");
    if (!parent.is_null()) {
      if (!parent.is_number_integer()) throw MalformedInput("tree: 'parent' must be an id or null");
      v.parent = parent.get<int>();
    }
    const json& marks = require(vj, "marks");
    if (!marks.is_array()) throw MalformedInput("tree: 'marks' must be an array");
    for (const auto& mj : marks) {
      v.marks.push_back({require_int(mj, "label"), AffinePoint(coords_from_json(require(mj, "at"), "mark"))});
    }
    const json& children = require(vj, "children");
    if (!children.is_array()) throw MalformedInput("tree: 'children' must be an array");
    for (const auto& cj : children) {
      v.children.push_back(
          {require_int(cj, "id"), AffinePoint(coords_from_json(require(cj, "at"), "attachment"))});
    }
    tree.vertices.push_back(std::move(v));
  }
  return tree;
}

std::string configuration_to_json(const Configuration& c) {
  return configuration_to_obj(c).dump(2);
}

Configuration configuration_from_json(const std::string& text) {
  return configuration_from_obj(parse_text(text));
}

std::string group_element_to_json(const GroupElement& g) {
  const json out{{"w", g.w.str()}, {"u", coords_to_json(g.u.coords())}};
  return out.dump(2);
}

GroupElement group_element_from_json(const std::string& text) {
  const json j = parse_text(text);
  GroupElement g{rational_from(require(j, "w"), "group element"),
                 AffinePoint(coords_from_json(require(j, "u"), "group element"))};
  if (g.w.is_zero()) throw MalformedInput("group element: w must be nonzero");
  return g;
}

std::string cycle_to_json(const ConfigurationCycle& z) {
  json out = json::array();
  for (const auto& member : z) {
    json obj = configuration_to_obj(member.config);
    obj["vertex"] = member.vertex;
    out.push_back(std::move(obj));
  }
  return out.dump(2);
}

ConfigurationCycle cycle_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array()) throw MalformedInput("cycle: expected an array of configurations");
  ConfigurationCycle z;
  for (const auto& e : j) {
    ComponentConfiguration cc;
    cc.vertex = require_int(e, "vertex");
    cc.config = configuration_from_obj(e);
    z.push_back(std::move(cc));
  }
  return z;
}

std::string kunneth_to_json(const KunnethClass& k) {
  json out = json::array();
  for (const auto& [m, coeff] : k.coefficients()) {
    out.push_back(json{{"m", m}, {"coeff", coeff}});
  }
  return out.dump(2);
}

std::string family_to_json(const FamilyConfiguration& f) {
  json points = json::array();
  for (const auto& p : f.points) {
    json coords = json::array();
    for (const auto& poly : p) {
      if (poly.is_zero()) {
        coords.push_back(json::array({"0"}));
      } else {
        coords.push_back(coords_to_json(poly.coefficients()));
      }
    }
    points.push_back(std::move(coords));
  }
  const json out{{"d", f.dimension}, {"points", std::move(points)}};
  return out.dump(2);
}

FamilyConfiguration family_from_json(const std::string& text) {
  const json j = parse_text(text);
  FamilyConfiguration f;
  f.dimension = require_int(j, "d");
  const json& points = require(j, "points");
  if (!points.is_array()) throw MalformedInput("family: 'points' must be an array");
  for (const auto& pj : points) {
    if (!pj.is_array()) throw MalformedInput("family: each point must be an array of polynomials");
    std::vector<RationalPoly> coords;
    for (const auto& poly : pj) {
      coords.emplace_back(coords_from_json(poly, "polynomial"));
    }
    if (static_cast<int>(coords.size()) != f.dimension) {
      throw MalformedInput("family: point with " + std::to_string(coords.size()) +
                           " coordinates in dimension " + std::to_string(f.dimension));
    }
    f.points.push_back(std::move(coords));
  }
  return f;
}

std::string form_to_json(const MultilinearForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(c.str());
  const json out{{"multidegree", f.multidegree}, {"coeffs", std::move(coeffs)}};
  return out.dump(2);
}

}  // namespace chowtree
