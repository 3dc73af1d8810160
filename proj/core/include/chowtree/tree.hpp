#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chowtree/group.hpp"
#include "chowtree/points.hpp"

namespace chowtree {

struct Mark {
  int label = 0;  // in 1..n
  AffinePoint position;

  friend bool operator==(const Mark& a, const Mark& b) {
    return a.label == b.label && a.position == b.position;
  }
};

struct ChildLink {
  int child = 0;
  AffinePoint attachment;  // the blown-up point of the blow-down determined by the child

  friend bool operator==(const ChildLink& a, const ChildLink& b) {
    return a.child == b.child && a.attachment == b.attachment;
  }
};

struct TreeVertex {
  int id = 0;
  std::optional<int> parent;
  std::vector<Mark> marks;
  std::vector<ChildLink> children;

  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return a.id == b.id && a.parent == b.parent && a.marks == b.marks && a.children == b.children;
  }
};

/// n-pointed stable rooted tree of d-dimensional projective spaces: one
/// vertex per component, each carrying its marks and child attachment points
/// in the affine chart of the blown-down component (the per-vertex hyperplane
/// sits at infinity, so special points are affine by construction). The
/// gluing at an attachment point p identifies the direction vector y with the
/// child's hyperplane point (0 : y).
struct StableTree {
  int dimension = 0;
  int num_marks = 0;
  int root = 0;
  std::vector<TreeVertex> vertices;

  bool has_vertex(int id) const;
  const TreeVertex& vertex(int id) const;  // throws UnknownVertex

  friend bool operator==(const StableTree& a, const StableTree& b) {
    return a.dimension == b.dimension && a.num_marks == b.num_marks && a.root == b.root &&
           a.vertices == b.vertices;
  }
};

/// Checks every stable-tree invariant; empty list means the tree is valid.
std::vector<std::string> validate(const StableTree& tree);
bool is_valid(const StableTree& tree);

enum class TreeOrder { kEqual, kAncestor, kDescendant, kIncomparable };

/// Rooted-tree order with the root minimal. kAncestor means v < w.
TreeOrder partial_order(const StableTree& tree, int v, int w);

/// For v < w: the attachment point at v of the unique child of v lying on
/// the path toward w. Throws NotAncestor otherwise.
AffinePoint determined_attachment(const StableTree& tree, int v, int w);

/// Labels carried at or below vertex v.
std::set<int> subtree_labels(const StableTree& tree, int v);

/// One entry per edge, in canonical traversal order: the mark labels at or
/// below the child endpoint. Each entry I satisfies 2 <= |I| <= n-1; the
/// tree lies on exactly one boundary divisor per entry.
std::vector<std::set<int>> boundary_decomposition(const StableTree& tree);

/// True iff every blown-down component has exactly two special points.
bool is_maximally_degenerate(const StableTree& tree);

/// Rooted tree shape together with the mark-label partition, no coordinates.
struct StratumSignature {
  std::vector<int> marks;
  std::vector<StratumSignature> children;

  friend bool operator==(const StratumSignature& a, const StratumSignature& b) {
    return a.marks == b.marks && a.children == b.children;
  }
};

std::vector<std::string> validate_shape(const StratumSignature& shape, int n);

/// The shape of a valid tree (marks sorted, children ordered by least label).
StratumSignature signature_of(const StableTree& tree);

/// All stratum shapes for n marks. Deterministic order.
std::vector<StratumSignature> enumerate_shapes(int n);

/// Fills a shape with distinct random affine coordinates; deterministic for
/// a given seed. Throws InvalidShape when the shape is not combinatorially
/// valid for n marks.
StableTree random_tree(int d, int n, const StratumSignature& shape, uint64_t seed);

/// Vertex ids in canonical traversal order: root first, children ordered by
/// attachment point lexicographically.
std::vector<int> canonical_vertex_order(const StableTree& tree);

/// Canonical representative of a tree modulo the per-vertex coordinate
/// freedom (the group acting independently on each blown-down component) and
/// modulo vertex relabeling. Two valid trees present the same moduli point
/// iff their canonical forms are structurally equal.
StableTree canonical_form(const StableTree& tree);
bool canonically_equal(const StableTree& a, const StableTree& b);

}  // namespace chowtree
