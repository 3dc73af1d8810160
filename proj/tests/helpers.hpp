#pragma once

#include <initializer_list>
#include <vector>

#include "chowtree/group.hpp"
#include "chowtree/points.hpp"
#include "chowtree/rational.hpp"
#include "chowtree/rng.hpp"
#include "chowtree/tree.hpp"

namespace testutil {

using chowtree::AffinePoint;
using chowtree::ConfigPoint;
using chowtree::Configuration;
using chowtree::HyperplaneDirection;
using chowtree::Rational;
using chowtree::StableTree;

inline Rational q(long n, long d = 1) {
  return Rational(n, d);
}

inline AffinePoint ap(std::initializer_list<long> coords) {
  std::vector<Rational> v;
  for (long c : coords) v.emplace_back(c);
  return AffinePoint(std::move(v));
}

inline AffinePoint apq(std::initializer_list<Rational> coords) {
  return AffinePoint(std::vector<Rational>(coords));
}

inline ConfigPoint aff(std::initializer_list<long> coords) {
  return ConfigPoint::affine(ap(coords));
}

inline ConfigPoint inf(std::initializer_list<long> coords) {
  std::vector<Rational> v;
  for (long c : coords) v.emplace_back(c);
  return ConfigPoint::at_infinity(HyperplaneDirection(std::move(v)));
}

inline Configuration config(int d, std::vector<ConfigPoint> points) {
  Configuration c;
  c.dimension = d;
  c.points = std::move(points);
  return c;
}

inline chowtree::GroupElement g1(Rational w, Rational u) {
  return {std::move(w), AffinePoint({std::move(u)})};
}

// n distinct random affine points in d-space.
inline Configuration random_interior(chowtree::Rng& rng, int d, int n) {
  Configuration c;
  c.dimension = d;
  while (c.n() < n) {
    std::vector<Rational> coords(d);
    for (auto& x : coords) x = rng.small_rational(15, 4);
    ConfigPoint p = ConfigPoint::affine(AffinePoint(std::move(coords)));
    bool dup = false;
    for (const auto& other : c.points) {
      if (other == p) dup = true;
    }
    if (!dup) c.points.push_back(std::move(p));
  }
  return c;
}

inline chowtree::GroupElement random_group_element(chowtree::Rng& rng, int d) {
  Rational w(0);
  while (w.is_zero()) w = rng.small_rational(9, 4);
  std::vector<Rational> u(d);
  for (auto& x : u) x = rng.small_rational(9, 4);
  return {std::move(w), AffinePoint(std::move(u))};
}

// d=1 tree: root carries mark 3 at 1 and a child attached at 0; the child
// carries marks 1 at 0 and 2 at 1.
inline StableTree two_vertex_d1_tree() {
  StableTree t;
  t.dimension = 1;
  t.num_marks = 3;
  t.root = 0;
  chowtree::TreeVertex root;
  root.id = 0;
  root.marks = {{3, ap({1})}};
  root.children = {{1, ap({0})}};
  chowtree::TreeVertex child;
  child.id = 1;
  child.parent = 0;
  child.marks = {{1, ap({0})}, {2, ap({1})}};
  t.vertices = {root, child};
  return t;
}

// Maximally degenerate 5-marked tree of surfaces, four components: the root
// has two daughters; one daughter carries marks 4 and 5; the other carries
// mark 3 and a further daughter with marks 1 and 2.
inline StableTree max_degenerate_t25_tree() {
  StableTree t;
  t.dimension = 2;
  t.num_marks = 5;
  t.root = 0;
  chowtree::TreeVertex v0;
  v0.id = 0;
  v0.children = {{1, ap({0, 0})}, {2, ap({1, 0})}};
  chowtree::TreeVertex v1;
  v1.id = 1;
  v1.parent = 0;
  v1.marks = {{4, ap({0, 0})}, {5, ap({1, 1})}};
  chowtree::TreeVertex v2;
  v2.id = 2;
  v2.parent = 0;
  v2.marks = {{3, ap({2, 1})}};
  v2.children = {{3, ap({0, 1})}};
  chowtree::TreeVertex v3;
  v3.id = 3;
  v3.parent = 2;
  v3.marks = {{1, ap({3, 2})}, {2, ap({5, 7})}};
  t.vertices = {v0, v1, v2, v3};
  return t;
}

// Interior d=1 tree on n marks at the given coordinates.
inline StableTree interior_d1_tree(std::initializer_list<long> coords) {
  StableTree t;
  t.dimension = 1;
  t.num_marks = static_cast<int>(coords.size());
  t.root = 0;
  chowtree::TreeVertex v;
  v.id = 0;
  int label = 1;
  for (long c : coords) v.marks.push_back({label++, ap({c})});
  t.vertices = {v};
  return t;
}

}  // namespace testutil
