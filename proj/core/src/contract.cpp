#include "chowtree/contract.hpp"

#include <algorithm>
#include <map>

#include "chowtree/errors.hpp"

namespace chowtree {

namespace {

// Deepest common ancestor in the rooted tree.
int meet(const StableTree& tree, int v, int w) {
  std::vector<int> up;
  int cur = v;
  up.push_back(cur);
  while (tree.vertex(cur).parent) {
    cur = *tree.vertex(cur).parent;
    up.push_back(cur);
  }
  cur = w;
  while (true) {
    if (std::find(up.begin(), up.end(), cur) != up.end()) return cur;
    cur = *tree.vertex(cur).parent;
  }
}

}  // namespace

ComponentConfiguration contract(const StableTree& tree, int v) {
  if (!tree.has_vertex(v)) throw InvalidVertex("contract: no vertex with id " + std::to_string(v));

  std::map<int, ConfigPoint> image;  // label -> image point
  for (const auto& vert : tree.vertices) {
    for (const auto& mark : vert.marks) {
      const int w = vert.id;
      if (w == v) {
        image.emplace(mark.label, ConfigPoint::affine(mark.position));
        continue;
      }
      const int a = meet(tree, v, w);
      if (a == v) {
        // w > v: the whole branch collapses to the point determined by w.
        image.emplace(mark.label, ConfigPoint::affine(determined_attachment(tree, v, w)));
        continue;
      }
      // a < v: collapse into the a-component, then project from the
      // attachment determined by v.
      const AffinePoint x = (w == a) ? mark.position : determined_attachment(tree, a, w);
      const AffinePoint p = determined_attachment(tree, a, v);
      if (x == p) {
        throw ContractionDegenerate("projection center coincides with a collapsed mark");
      }
      image.emplace(mark.label, ConfigPoint::at_infinity(HyperplaneDirection(displacement(x, p))));
    }
  }

  ComponentConfiguration out;
  out.vertex = v;
  out.config.dimension = tree.dimension;
  out.config.points.reserve(image.size());
  for (int label = 1; label <= tree.num_marks; ++label) {
    auto it = image.find(label);
    if (it == image.end()) throw InvalidVertex("contract: tree is missing mark labels");
    out.config.points.push_back(it->second);
  }
  return out;
}

ConfigurationCycle configuration_cycle(const StableTree& tree) {
  ConfigurationCycle cycle;
  for (int v : canonical_vertex_order(tree)) {
    ComponentConfiguration cc = contract(tree, v);
    cc.config = canonicalize(cc.config).canonical;
    cycle.push_back(std::move(cc));
  }
  return cycle;
}

SupportProfile support_profile(const ComponentConfiguration& cc) {
  SupportProfile profile;
  for (int i = 0; i < cc.config.n(); ++i) {
    const int label = i + 1;
    const ConfigPoint& p = cc.config.points[static_cast<size_t>(i)];
    if (!p.is_affine()) {
      profile.infinity_labels.push_back(label);
      continue;
    }
    bool placed = false;
    for (auto& [point, labels] : profile.affine_groups) {
      if (point == p.affine_point()) {
        labels.push_back(label);
        placed = true;
        break;
      }
    }
    if (!placed) profile.affine_groups.push_back({p.affine_point(), {label}});
  }
  return profile;
}

}  // namespace chowtree
