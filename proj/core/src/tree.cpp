#include "chowtree/tree.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "chowtree/errors.hpp"
#include "chowtree/rng.hpp"

namespace chowtree {

namespace {

std::unordered_map<int, size_t> index_by_id(const StableTree& tree) {
  std::unordered_map<int, size_t> idx;
  idx.reserve(tree.vertices.size());
  for (size_t i = 0; i < tree.vertices.size(); ++i) idx.emplace(tree.vertices[i].id, i);
  return idx;
}

std::vector<AffinePoint> special_points(const TreeVertex& v) {
  std::vector<AffinePoint> pts;
  pts.reserve(v.marks.size() + v.children.size());
  for (const auto& m : v.marks) pts.push_back(m.position);
  for (const auto& c : v.children) pts.push_back(c.attachment);
  return pts;
}

}  // namespace

bool StableTree::has_vertex(int id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return true;
  }
  return false;
}

const TreeVertex& StableTree::vertex(int id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return v;
  }
  throw UnknownVertex("no vertex with id " + std::to_string(id));
}

std::vector<std::string> validate(const StableTree& tree) {
  std::vector<std::string> bad;
  if (tree.dimension < 1) bad.push_back("dimension must be at least 1");
  if (tree.num_marks < 2) bad.push_back("a stable tree carries at least two marks");
  if (tree.vertices.empty()) {
    bad.push_back("tree has no vertices");
    return bad;
  }

  std::unordered_set<int> ids;
  for (const auto& v : tree.vertices) {
    if (!ids.insert(v.id).second) {
      bad.push_back("duplicate vertex id " + std::to_string(v.id));
    }
  }
  if (!ids.count(tree.root)) {
    bad.push_back("root id " + std::to_string(tree.root) + " is not a vertex");
    return bad;
  }

  const auto idx = index_by_id(tree);
  for (const auto& v : tree.vertices) {
    if (v.id == tree.root) {
      if (v.parent) bad.push_back("root vertex has a parent");
    } else if (!v.parent) {
      bad.push_back("non-root vertex " + std::to_string(v.id) + " has no parent");
    } else if (!ids.count(*v.parent)) {
      bad.push_back("vertex " + std::to_string(v.id) + " has unknown parent");
    }
    for (const auto& link : v.children) {
      auto it = idx.find(link.child);
      if (it == idx.end()) {
        bad.push_back("vertex " + std::to_string(v.id) + " links to unknown child " +
                      std::to_string(link.child));
        continue;
      }
      const TreeVertex& child = tree.vertices[it->second];
      if (!child.parent || *child.parent != v.id) {
        bad.push_back("child " + std::to_string(link.child) + " does not point back to parent " +
                      std::to_string(v.id));
      }
    }
  }
  if (!bad.empty()) return bad;

  // Connectivity: every vertex reachable from the root, exactly once.
  std::unordered_set<int> seen;
  std::vector<int> stack{tree.root};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) {
      bad.push_back("cycle through vertex " + std::to_string(id));
      return bad;
    }
    for (const auto& link : tree.vertex(id).children) stack.push_back(link.child);
  }
  if (seen.size() != tree.vertices.size()) {
    bad.push_back("dual graph is not a tree: unreachable vertices exist");
    return bad;
  }

  // Mark labels partition {1..n}.
  std::map<int, int> label_count;
  for (const auto& v : tree.vertices) {
    for (const auto& m : v.marks) ++label_count[m.label];
  }
  for (int label = 1; label <= tree.num_marks; ++label) {
    const auto it = label_count.find(label);
    if (it == label_count.end()) {
      bad.push_back("mark label " + std::to_string(label) + " is missing");
    } else if (it->second > 1) {
      bad.push_back("mark label " + std::to_string(label) + " appears more than once");
    }
  }
  for (const auto& [label, count] : label_count) {
    (void)count;
    if (label < 1 || label > tree.num_marks) {
      bad.push_back("mark label " + std::to_string(label) + " out of range");
    }
  }

  // Per-component geometry.
  for (const auto& v : tree.vertices) {
    for (const auto& m : v.marks) {
      if (m.position.dim() != tree.dimension) {
        bad.push_back("mark " + std::to_string(m.label) + " has wrong dimension");
      }
    }
    for (const auto& link : v.children) {
      if (link.attachment.dim() != tree.dimension) {
        bad.push_back("attachment at vertex " + std::to_string(v.id) + " has wrong dimension");
      }
    }
    const auto pts = special_points(v);
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = i + 1; j < pts.size(); ++j) {
        if (pts[i] == pts[j]) {
          bad.push_back("vertex " + std::to_string(v.id) + " has coincident special points");
        }
      }
    }
    if (pts.size() < 2) {
      bad.push_back("vertex " + std::to_string(v.id) + " has fewer than two special points");
    }
  }
  return bad;
}

bool is_valid(const StableTree& tree) {
  return validate(tree).empty();
}

namespace {

// Chain of ids from v up to the root, inclusive.
std::vector<int> path_to_root(const StableTree& tree, int v) {
  std::vector<int> path;
  int cur = v;
  path.push_back(cur);
  while (true) {
    const TreeVertex& vert = tree.vertex(cur);
    if (!vert.parent) break;
    cur = *vert.parent;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

TreeOrder partial_order(const StableTree& tree, int v, int w) {
  if (!tree.has_vertex(v)) throw UnknownVertex("no vertex with id " + std::to_string(v));
  if (!tree.has_vertex(w)) throw UnknownVertex("no vertex with id " + std::to_string(w));
  if (v == w) return TreeOrder::kEqual;
  const auto up_from_w = path_to_root(tree, w);
  if (std::find(up_from_w.begin(), up_from_w.end(), v) != up_from_w.end()) {
    return TreeOrder::kAncestor;
  }
  const auto up_from_v = path_to_root(tree, v);
  if (std::find(up_from_v.begin(), up_from_v.end(), w) != up_from_v.end()) {
    return TreeOrder::kDescendant;
  }
  return TreeOrder::kIncomparable;
}

AffinePoint determined_attachment(const StableTree& tree, int v, int w) {
  if (partial_order(tree, v, w) != TreeOrder::kAncestor) {
    throw NotAncestor("vertex " + std::to_string(v) + " is not a strict ancestor of " +
                      std::to_string(w));
  }
  // Walk up from w until the parent is v; that child is the one determined by w.
  int cur = w;
  while (*tree.vertex(cur).parent != v) cur = *tree.vertex(cur).parent;
  for (const auto& link : tree.vertex(v).children) {
    if (link.child == cur) return link.attachment;
  }
  throw NotAncestor("inconsistent parent/child links");  // unreachable on valid trees
}

std::set<int> subtree_labels(const StableTree& tree, int v) {
  std::set<int> labels;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const TreeVertex& vert = tree.vertex(stack.back());
    stack.pop_back();
    for (const auto& m : vert.marks) labels.insert(m.label);
    for (const auto& link : vert.children) stack.push_back(link.child);
  }
  return labels;
}

std::vector<int> canonical_vertex_order(const StableTree& tree) {
  std::vector<int> order;
  order.reserve(tree.vertices.size());
  std::vector<int> stack{tree.root};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    auto links = tree.vertex(id).children;
    std::sort(links.begin(), links.end(), [](const ChildLink& a, const ChildLink& b) {
      return b.attachment < a.attachment;  // reversed: stack pops smallest first
    });
    for (const auto& link : links) stack.push_back(link.child);
  }
  return order;
}

std::vector<std::set<int>> boundary_decomposition(const StableTree& tree) {
  std::vector<std::set<int>> divisors;
  for (int id : canonical_vertex_order(tree)) {
    auto links = tree.vertex(id).children;
    std::sort(links.begin(), links.end(), [](const ChildLink& a, const ChildLink& b) {
      return a.attachment < b.attachment;
    });
    for (const auto& link : links) divisors.push_back(subtree_labels(tree, link.child));
  }
  return divisors;
}

bool is_maximally_degenerate(const StableTree& tree) {
  for (const auto& v : tree.vertices) {
    if (v.marks.size() + v.children.size() != 2) return false;
  }
  return true;
}

std::vector<std::string> validate_shape(const StratumSignature& shape, int n) {
  std::vector<std::string> bad;
  std::map<int, int> label_count;
  // Walk the shape, checking the combinatorial stability condition.
  std::vector<const StratumSignature*> stack{&shape};
  while (!stack.empty()) {
    const StratumSignature* s = stack.back();
    stack.pop_back();
    if (s->marks.size() + s->children.size() < 2) {
      bad.push_back("shape vertex with fewer than two special points");
    }
    for (int label : s->marks) ++label_count[label];
    for (const auto& c : s->children) stack.push_back(&c);
  }
  for (int label = 1; label <= n; ++label) {
    const auto it = label_count.find(label);
    if (it == label_count.end()) {
      bad.push_back("label " + std::to_string(label) + " missing from shape");
    } else if (it->second > 1) {
      bad.push_back("label " + std::to_string(label) + " repeated in shape");
    }
  }
  for (const auto& [label, count] : label_count) {
    (void)count;
    if (label < 1 || label > n) bad.push_back("label " + std::to_string(label) + " out of range");
  }
  return bad;
}

namespace {

StratumSignature signature_below(const StableTree& tree, int v) {
  const TreeVertex& vert = tree.vertex(v);
  StratumSignature sig;
  for (const auto& m : vert.marks) sig.marks.push_back(m.label);
  std::sort(sig.marks.begin(), sig.marks.end());
  for (const auto& link : vert.children) sig.children.push_back(signature_below(tree, link.child));
  std::sort(sig.children.begin(), sig.children.end(),
            [](const StratumSignature& a, const StratumSignature& b) {
              auto least = [](const StratumSignature& s) {
                int best = INT_MAX;
                std::vector<const StratumSignature*> stack{&s};
                while (!stack.empty()) {
                  const StratumSignature* cur = stack.back();
                  stack.pop_back();
                  for (int m : cur->marks) best = std::min(best, m);
                  for (const auto& c : cur->children) stack.push_back(&c);
                }
                return best;
              };
              return least(a) < least(b);
            });
  return sig;
}

// All set partitions of `elems` into blocks of size >= 2 (blocks ordered by
// their least element, which is the recursion anchor).
void partitions_ge2(const std::vector<int>& elems, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (elems.empty()) {
    out.push_back(current);
    return;
  }
  const int anchor = elems[0];
  const std::vector<int> rest(elems.begin() + 1, elems.end());
  const size_t r = rest.size();
  // Choose the anchor's block mates: any nonempty subset of the rest.
  for (uint64_t mask = 1; mask < (uint64_t{1} << r); ++mask) {
    std::vector<int> block{anchor};
    std::vector<int> remaining;
    for (size_t i = 0; i < r; ++i) {
      if (mask & (uint64_t{1} << i)) {
        block.push_back(rest[i]);
      } else {
        remaining.push_back(rest[i]);
      }
    }
    current.push_back(std::move(block));
    partitions_ge2(remaining, current, out);
    current.pop_back();
  }
}

std::vector<StratumSignature> shapes_for(const std::vector<int>& labels) {
  std::vector<StratumSignature> shapes;
  const size_t k = labels.size();
  // Choose the subset of labels marked at this vertex; the rest split into
  // blocks of size >= 2, one child subtree per block.
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    std::vector<int> marks;
    std::vector<int> rest;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (uint64_t{1} << i)) {
        marks.push_back(labels[i]);
      } else {
        rest.push_back(labels[i]);
      }
    }
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<std::vector<int>> scratch;
    partitions_ge2(rest, scratch, partitions);
    for (const auto& blocks : partitions) {
      if (marks.size() + blocks.size() < 2) continue;
      // Cartesian product of the children's shape lists.
      std::vector<std::vector<StratumSignature>> options;
      options.reserve(blocks.size());
      for (const auto& block : blocks) options.push_back(shapes_for(block));
      std::vector<size_t> pick(blocks.size(), 0);
      while (true) {
        StratumSignature sig;
        sig.marks = marks;
        for (size_t b = 0; b < blocks.size(); ++b) sig.children.push_back(options[b][pick[b]]);
        shapes.push_back(std::move(sig));
        size_t carry = 0;
        while (carry < pick.size()) {
          if (++pick[carry] < options[carry].size()) break;
          pick[carry] = 0;
          ++carry;
        }
        if (carry == pick.size()) break;
      }
    }
  }
  return shapes;
}

}  // namespace

StratumSignature signature_of(const StableTree& tree) {
  return signature_below(tree, tree.root);
}

std::vector<StratumSignature> enumerate_shapes(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return shapes_for(labels);
}

namespace {

int fill_vertex(StableTree& tree, const StratumSignature& shape, std::optional<int> parent,
                int d, Rng& rng, int& next_id) {
  TreeVertex vertex;
  vertex.id = next_id++;
  vertex.parent = parent;

  // Sample pairwise distinct special points for this component.
  const size_t needed = shape.marks.size() + shape.children.size();
  std::vector<AffinePoint> pts;
  while (pts.size() < needed) {
    std::vector<Rational> coords(d);
    for (auto& c : coords) c = rng.small_rational(12, 4);
    AffinePoint p(std::move(coords));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }

  size_t slot = 0;
  for (int label : shape.marks) vertex.marks.push_back({label, pts[slot++]});
  const int my_id = vertex.id;
  tree.vertices.push_back(std::move(vertex));
  for (const auto& child_shape : shape.children) {
    const AffinePoint at = pts[slot++];
    const int child_id = fill_vertex(tree, child_shape, my_id, d, rng, next_id);
    // vertices vector may have reallocated; re-find our own entry
    for (auto& v : tree.vertices) {
      if (v.id == my_id) {
        v.children.push_back({child_id, at});
        break;
      }
    }
  }
  return my_id;
}

}  // namespace

StableTree random_tree(int d, int n, const StratumSignature& shape, uint64_t seed) {
  const auto problems = validate_shape(shape, n);
  if (!problems.empty()) throw InvalidShape("random_tree: " + problems.front());
  if (d < 1) throw InvalidShape("random_tree: dimension must be at least 1");
  StableTree tree;
  tree.dimension = d;
  tree.num_marks = n;
  tree.root = 0;
  Rng rng(seed);
  int next_id = 0;
  fill_vertex(tree, shape, std::nullopt, d, rng, next_id);
  return tree;
}

StableTree canonical_form(const StableTree& tree) {
  StableTree gauged = tree;

  // Per-vertex gauge fixing: canonicalize the configuration of special
  // points, listed marks-by-label then attachments-by-least-subtree-label so
  // that the listing itself is gauge independent.
  for (auto& v : gauged.vertices) {
    std::vector<Mark> marks = v.marks;
    std::sort(marks.begin(), marks.end(),
              [](const Mark& a, const Mark& b) { return a.label < b.label; });
    std::vector<ChildLink> links = v.children;
    std::sort(links.begin(), links.end(), [&](const ChildLink& a, const ChildLink& b) {
      return *subtree_labels(tree, a.child).begin() < *subtree_labels(tree, b.child).begin();
    });
    Configuration special;
    special.dimension = gauged.dimension;
    for (const auto& m : marks) special.points.push_back(ConfigPoint::affine(m.position));
    for (const auto& l : links) special.points.push_back(ConfigPoint::affine(l.attachment));
    const GroupElement g = canonicalize(special).transform;
    for (auto& m : v.marks) m.position = act(g, m.position);
    for (auto& l : v.children) l.attachment = act(g, l.attachment);
  }

  // Renumber vertices in canonical traversal order of the gauged tree.
  const std::vector<int> order = canonical_vertex_order(gauged);
  std::unordered_map<int, int> renumber;
  for (size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<int>(i);

  StableTree out;
  out.dimension = gauged.dimension;
  out.num_marks = gauged.num_marks;
  out.root = 0;
  for (int old_id : order) {
    const TreeVertex& v = gauged.vertex(old_id);
    TreeVertex nv;
    nv.id = renumber[old_id];
    if (v.parent) nv.parent = renumber[*v.parent];
    nv.marks = v.marks;
    std::sort(nv.marks.begin(), nv.marks.end(),
              [](const Mark& a, const Mark& b) { return a.label < b.label; });
    nv.children.reserve(v.children.size());
    for (const auto& l : v.children) nv.children.push_back({renumber[l.child], l.attachment});
    std::sort(nv.children.begin(), nv.children.end(),
              [](const ChildLink& a, const ChildLink& b) { return a.attachment < b.attachment; });
    out.vertices.push_back(std::move(nv));
  }
  return out;
}

bool canonically_equal(const StableTree& a, const StableTree& b) {
  if (a.dimension != b.dimension || a.num_marks != b.num_marks) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace chowtree
