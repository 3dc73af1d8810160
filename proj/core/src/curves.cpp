#include "chowtree/curves.hpp"

#include <algorithm>
#include <set>

#include "chowtree/errors.hpp"

namespace chowtree {

const Rational& CrossRatioValue::value() const {
  if (!finite_) throw Error("CrossRatioValue: infinite value");
  return v_;
}

std::string CrossRatioValue::str() const {
  return finite_ ? v_.str() : std::string("inf");
}

namespace {

size_t special_count(const TreeVertex& v) {
  return v.marks.size() + v.children.size();
}

TreeVertex& vertex_ref(StableTree& tree, int id) {
  for (auto& v : tree.vertices) {
    if (v.id == id) return v;
  }
  throw UnknownVertex("no vertex with id " + std::to_string(id));
}

void erase_vertex(StableTree& tree, int id) {
  tree.vertices.erase(std::remove_if(tree.vertices.begin(), tree.vertices.end(),
                                     [&](const TreeVertex& v) { return v.id == id; }),
                      tree.vertices.end());
}

}  // namespace

StableTree stabilize_to_triple(const StableTree& tree, const std::array<int, 3>& labels) {
  if (tree.dimension != 1) throw ShapeMismatch("stabilize_to_triple: requires d = 1");
  std::set<int> keep(labels.begin(), labels.end());
  if (keep.size() != 3) throw BadLabels("stabilize_to_triple: labels must be distinct");
  for (int label : labels) {
    if (label < 1 || label > tree.num_marks) {
      throw BadLabels("stabilize_to_triple: label " + std::to_string(label) + " out of range");
    }
  }

  StableTree t = tree;
  // Forget all other marks, relabeling a -> 1, b -> 2, c -> 3.
  for (auto& v : t.vertices) {
    std::vector<Mark> kept;
    for (const auto& m : v.marks) {
      for (int i = 0; i < 3; ++i) {
        if (m.label == labels[static_cast<size_t>(i)]) kept.push_back({i + 1, m.position});
      }
    }
    v.marks = std::move(kept);
  }
  t.num_marks = 3;

  // Contract unstable components until every vertex has >= 2 special points.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : t.vertices) {
      if (special_count(v) >= 2) continue;
      const int id = v.id;
      if (id == t.root) {
        if (v.marks.empty() && v.children.size() == 1) {
          // The root component became unstable; its single daughter carries
          // the root hyperplane from now on.
          const int child = v.children[0].child;
          erase_vertex(t, id);
          vertex_ref(t, child).parent.reset();
          t.root = child;
          changed = true;
          break;
        }
        throw Error("stabilize_to_triple: root degenerated below a T_{1,3} point");
      }
      const int parent = *v.parent;
      TreeVertex& p = vertex_ref(t, parent);
      const auto link = std::find_if(p.children.begin(), p.children.end(),
                                     [&](const ChildLink& l) { return l.child == id; });
      if (v.marks.empty() && v.children.empty()) {
        p.children.erase(link);
        erase_vertex(t, id);
      } else if (v.marks.size() == 1 && v.children.empty()) {
        // A component with one remaining mark contracts; the mark lands at
        // the former attachment point.
        const Mark landed{v.marks[0].label, link->attachment};
        p.children.erase(link);
        p.marks.push_back(landed);
        erase_vertex(t, id);
      } else if (v.marks.empty() && v.children.size() == 1) {
        // Splice out a two-node chain component.
        const int child = v.children[0].child;
        link->child = child;
        vertex_ref(t, child).parent = parent;
        erase_vertex(t, id);
      } else {
        throw Error("stabilize_to_triple: unexpected unstable vertex");
      }
      changed = true;
      break;
    }
  }
  return t;
}

CrossRatioValue triple_invariant(const StableTree& tree, const std::array<int, 3>& labels) {
  const StableTree t = stabilize_to_triple(tree, labels);

  if (t.vertices.size() == 1) {
    // Interior point of T_{1,3}: cross-ratio of the three positions.
    std::array<Rational, 3> p;
    for (const auto& m : t.vertices[0].marks) {
      p[static_cast<size_t>(m.label - 1)] = m.position[0];
    }
    return CrossRatioValue::finite((p[2] - p[0]) / (p[1] - p[0]));
  }

  // Boundary point: exactly one pair of labels collided onto the non-root
  // component. Normalization: {a,c} -> 0, {b,c} -> 1, {a,b} -> infinity.
  for (const auto& v : t.vertices) {
    if (v.id == t.root) continue;
    std::set<int> pair;
    for (const auto& m : v.marks) pair.insert(m.label);
    if (pair == std::set<int>{1, 3}) return CrossRatioValue::finite(Rational(0));
    if (pair == std::set<int>{2, 3}) return CrossRatioValue::finite(Rational(1));
    if (pair == std::set<int>{1, 2}) return CrossRatioValue::infinity();
  }
  throw Error("triple_invariant: stabilization produced an unrecognized T_{1,3} point");
}

bool separates(const StableTree& t1, const StableTree& t2) {
  if (t1.dimension != 1 || t2.dimension != 1) throw ShapeMismatch("separates: requires d = 1");
  if (t1.num_marks != t2.num_marks) throw ShapeMismatch("separates: trees have different n");
  const int n = t1.num_marks;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        const std::array<int, 3> triple{a, b, c};
        if (triple_invariant(t1, triple) != triple_invariant(t2, triple)) return true;
      }
    }
  }
  return false;
}

namespace {

std::vector<int> degree_slots(const MultilinearForm& f) {
  std::vector<int> slots;
  for (int s = 0; s < 3; ++s) {
    if (f.multidegree[static_cast<size_t>(s)] == 1) slots.push_back(s);
  }
  return slots;
}

}  // namespace

MultilinearForm normalized(MultilinearForm f) {
  for (const auto& c : f.coeffs) {
    if (!c.is_zero()) {
      const Rational inv = c.reciprocal();
      for (auto& x : f.coeffs) x *= inv;
      return f;
    }
  }
  throw Error("MultilinearForm: zero form");
}

MultilinearForm multiply(const MultilinearForm& a, const MultilinearForm& b) {
  MultilinearForm out;
  for (int s = 0; s < 3; ++s) {
    const int deg = a.multidegree[static_cast<size_t>(s)] + b.multidegree[static_cast<size_t>(s)];
    if (deg > 1) {
      throw ClassMismatch("multiply: slot " + std::to_string(s + 1) + " would exceed degree 1");
    }
    out.multidegree[static_cast<size_t>(s)] = deg;
  }
  const auto slots_a = degree_slots(a);
  const auto slots_b = degree_slots(b);
  const auto slots_out = degree_slots(out);
  out.coeffs.assign(size_t{1} << slots_out.size(), Rational(0));
  for (size_t ia = 0; ia < a.coeffs.size(); ++ia) {
    if (a.coeffs[ia].is_zero()) continue;
    for (size_t ib = 0; ib < b.coeffs.size(); ++ib) {
      if (b.coeffs[ib].is_zero()) continue;
      size_t idx = 0;
      for (size_t k = 0; k < slots_out.size(); ++k) {
        const int slot = slots_out[k];
        int bit = 0;
        for (size_t ka = 0; ka < slots_a.size(); ++ka) {
          if (slots_a[ka] == slot) bit = (ia >> (slots_a.size() - 1 - ka)) & 1;
        }
        for (size_t kb = 0; kb < slots_b.size(); ++kb) {
          if (slots_b[kb] == slot) bit = (ib >> (slots_b.size() - 1 - kb)) & 1;
        }
        idx = (idx << 1) | static_cast<size_t>(bit);
      }
      out.coeffs[idx] += a.coeffs[ia] * b.coeffs[ib];
    }
  }
  return out;
}

Rational evaluate(const MultilinearForm& f, const std::array<ProjectivePoint, 3>& pts) {
  const auto slots = degree_slots(f);
  Rational total(0);
  for (size_t idx = 0; idx < f.coeffs.size(); ++idx) {
    if (f.coeffs[idx].is_zero()) continue;
    Rational term = f.coeffs[idx];
    for (size_t k = 0; k < slots.size(); ++k) {
      const auto& h = pts[static_cast<size_t>(slots[k])].coords();
      const int bit = static_cast<int>((idx >> (slots.size() - 1 - k)) & 1);
      // Coordinates (x : z) with an affine point p at (p : 1): x is the
      // second homogeneous coordinate, z the first.
      term *= (bit == 0) ? h[1] : h[0];
    }
    total += term;
  }
  return total;
}

std::array<Rational, 3> interior_form_coefficients(const Rational& p1, const Rational& p2,
                                                   const Rational& p3) {
  return {p2 - p3, p3 - p1, p1 - p2};
}

MultilinearForm chow_form_111(const Configuration& c) {
  if (c.dimension != 1 || c.n() != 3) throw ShapeMismatch("chow_form_111: requires d = 1, n = 3");
  if (stabilizer_dimension(c) != 0) {
    throw NotFullDimensional("chow_form_111: positive-dimensional stabilizer");
  }

  std::vector<int> infinity_slots;
  std::vector<std::pair<AffinePoint, std::vector<int>>> groups;
  for (int i = 0; i < 3; ++i) {
    const ConfigPoint& p = c.points[static_cast<size_t>(i)];
    if (!p.is_affine()) {
      infinity_slots.push_back(i);
      continue;
    }
    bool placed = false;
    for (auto& [point, members] : groups) {
      if (point == p.affine_point()) {
        members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({p.affine_point(), {i}});
  }

  MultilinearForm f;
  if (infinity_slots.size() == 1) {
    // Orbit closure is P^1 x P^1 x {infinity slot}: the form z_k.
    f.multidegree[static_cast<size_t>(infinity_slots[0])] = 1;
    f.coeffs = {Rational(0), Rational(1)};
    return f;
  }
  if (groups.size() == 2) {
    // A doubled point: the diagonal in its two slots.
    const auto& doubled =
        groups[0].second.size() == 2 ? groups[0].second : groups[1].second;
    f.multidegree[static_cast<size_t>(doubled[0])] = 1;
    f.multidegree[static_cast<size_t>(doubled[1])] = 1;
    f.coeffs = {Rational(0), Rational(1), Rational(-1), Rational(0)};  // x_i z_j - z_i x_j
    return f;
  }

  // Interior triple.
  const auto coeffs = interior_form_coefficients(c.points[0].affine_point()[0],
                                                 c.points[1].affine_point()[0],
                                                 c.points[2].affine_point()[0]);
  f.multidegree = {1, 1, 1};
  f.coeffs.assign(8, Rational(0));
  f.coeffs[3] = coeffs[0];  // x1 z2 z3
  f.coeffs[5] = coeffs[1];  // z1 x2 z3
  f.coeffs[6] = coeffs[2];  // z1 z2 x3
  return normalized(std::move(f));
}

MultilinearForm chow_form_of_cycle(const ConfigurationCycle& z) {
  if (z.empty()) throw ClassMismatch("chow_form_of_cycle: empty cycle");
  MultilinearForm product;
  product.multidegree = {0, 0, 0};
  product.coeffs = {Rational(1)};
  for (const auto& member : z) {
    product = multiply(product, chow_form_111(member.config));
  }
  if (product.multidegree != std::array<int, 3>{1, 1, 1}) {
    throw ClassMismatch("chow_form_of_cycle: total multidegree is not (1,1,1)");
  }
  return normalized(std::move(product));
}

}  // namespace chowtree
