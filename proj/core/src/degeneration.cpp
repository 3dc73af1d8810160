#include "chowtree/degeneration.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "chowtree/contract.hpp"
#include "chowtree/errors.hpp"

namespace chowtree {

namespace {

void check_family(const FamilyConfiguration& f) {
  if (f.dimension < 1) throw Error("family: dimension must be at least 1");
  if (f.n() < 2) throw Error("family: at least two points required");
  for (const auto& p : f.points) {
    if (static_cast<int>(p.size()) != f.dimension) {
      throw DimensionMismatch("family: point with wrong number of coordinates");
    }
  }
  for (size_t i = 0; i < f.points.size(); ++i) {
    for (size_t j = i + 1; j < f.points.size(); ++j) {
      if (f.points[i] == f.points[j]) {
        throw NotGenericallyDistinct("family: points " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " coincide identically");
      }
    }
  }
}

std::vector<RationalPoly> vec_sub(const std::vector<RationalPoly>& a,
                                  const std::vector<RationalPoly>& b) {
  std::vector<RationalPoly> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

long vec_valuation(const std::vector<RationalPoly>& v) {
  long val = kInfiniteValuation;
  for (const auto& c : v) val = std::min(val, c.valuation());
  return val;
}

// Value at t = 0 of v / t^k; every coordinate must have valuation >= k.
AffinePoint shifted_value(const std::vector<RationalPoly>& v, long k) {
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = shift_eval(v[i], k).second;
  return AffinePoint(std::move(out));
}

// Leading coefficient vector of v at its valuation.
HyperplaneDirection leading_direction(const std::vector<RationalPoly>& v) {
  const long val = vec_valuation(v);
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].coefficient(val);
  return HyperplaneDirection(std::move(out));
}

struct NodeInfo {
  std::vector<int> labels;         // cluster, 1-based, ascending
  std::vector<RationalPoly> base;  // coordinates of the lowest-indexed member
  long exponent = 0;
};

struct LimitBuild {
  StableTree tree;
  std::map<int, NodeInfo> nodes;  // by vertex id
};

int build_node(const FamilyConfiguration& f, const std::vector<int>& labels,
               std::optional<int> parent, LimitBuild& lb, int& next_id) {
  const std::vector<RationalPoly>& base = f.points[static_cast<size_t>(labels[0] - 1)];

  long k = kInfiniteValuation;
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = i + 1; j < labels.size(); ++j) {
      const auto diff = vec_sub(f.points[static_cast<size_t>(labels[i] - 1)],
                                f.points[static_cast<size_t>(labels[j] - 1)]);
      k = std::min(k, vec_valuation(diff));
    }
  }

  // Rescaled positions; finite by minimality of k, not all equal because
  // some pair separates at exactly t^k.
  std::vector<std::pair<int, AffinePoint>> rescaled;
  rescaled.reserve(labels.size());
  for (int label : labels) {
    const auto diff = vec_sub(f.points[static_cast<size_t>(label - 1)], base);
    rescaled.push_back({label, shifted_value(diff, k)});
  }

  // Cluster by equal position, in order of first appearance.
  std::vector<std::pair<AffinePoint, std::vector<int>>> clusters;
  for (const auto& [label, q] : rescaled) {
    bool placed = false;
    for (auto& [point, members] : clusters) {
      if (point == q) {
        members.push_back(label);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({q, {label}});
  }

  TreeVertex vertex;
  vertex.id = next_id++;
  vertex.parent = parent;
  const int my_id = vertex.id;
  lb.tree.vertices.push_back(std::move(vertex));
  lb.nodes.emplace(my_id, NodeInfo{labels, base, k});

  for (const auto& [q, members] : clusters) {
    if (members.size() == 1) {
      for (auto& v : lb.tree.vertices) {
        if (v.id == my_id) {
          v.marks.push_back({members[0], q});
          break;
        }
      }
    } else {
      const int child_id = build_node(f, members, my_id, lb, next_id);
      for (auto& v : lb.tree.vertices) {
        if (v.id == my_id) {
          v.children.push_back({child_id, q});
          break;
        }
      }
    }
  }
  return my_id;
}

LimitBuild build_limit(const FamilyConfiguration& f) {
  check_family(f);
  LimitBuild lb;
  lb.tree.dimension = f.dimension;
  lb.tree.num_marks = f.n();
  lb.tree.root = 0;
  std::vector<int> all(static_cast<size_t>(f.n()));
  for (int i = 0; i < f.n(); ++i) all[static_cast<size_t>(i)] = i + 1;
  int next_id = 0;
  build_node(f, all, std::nullopt, lb, next_id);
  return lb;
}

ScaledLimit scaled_limit_from(const FamilyConfiguration& f, const LimitBuild& lb, int vertex) {
  const auto it = lb.nodes.find(vertex);
  if (it == lb.nodes.end()) {
    throw UnknownVertex("scaled_limit: no vertex with id " + std::to_string(vertex));
  }
  const NodeInfo& node = it->second;

  ScaledLimit out;
  out.vertex = vertex;
  out.base = node.base;
  out.exponent = node.exponent;
  out.limit.dimension = f.dimension;
  out.limit.points.reserve(static_cast<size_t>(f.n()));
  for (int label = 1; label <= f.n(); ++label) {
    const auto diff = vec_sub(f.points[static_cast<size_t>(label - 1)], node.base);
    if (vec_valuation(diff) >= node.exponent) {
      out.limit.points.push_back(ConfigPoint::affine(shifted_value(diff, node.exponent)));
    } else {
      out.limit.points.push_back(ConfigPoint::at_infinity(leading_direction(diff)));
    }
  }
  return out;
}

}  // namespace

StableTree limit_tree(const FamilyConfiguration& f) {
  return build_limit(f).tree;
}

ScaledLimit scaled_limit(const FamilyConfiguration& f, int vertex) {
  return scaled_limit_from(f, build_limit(f), vertex);
}

bool check_limit_compatibility(const FamilyConfiguration& f) {
  const LimitBuild lb = build_limit(f);
  for (const auto& v : lb.tree.vertices) {
    const Configuration from_family = scaled_limit_from(f, lb, v.id).limit;
    const Configuration from_tree = contract(lb.tree, v.id).config;
    if (canonicalize(from_family).canonical != canonicalize(from_tree).canonical) return false;
  }
  return true;
}

FamilyConfiguration clear_denominators(int dimension,
                                       const std::vector<std::vector<RationalPoly>>& num,
                                       const std::vector<std::vector<RationalPoly>>& den) {
  if (num.size() != den.size()) throw DimensionMismatch("clear_denominators: shape mismatch");
  for (size_t i = 0; i < den.size(); ++i) {
    if (den[i].size() != num[i].size()) {
      throw DimensionMismatch("clear_denominators: shape mismatch");
    }
    for (const auto& q : den[i]) {
      if (q.is_zero()) throw Error("clear_denominators: zero denominator");
    }
  }
  // One global rescaling is a homothety over the fraction field, so the
  // family stays in the same orbit and the limit tree is unchanged.
  FamilyConfiguration out;
  out.dimension = dimension;
  out.points.resize(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    out.points[i].reserve(num[i].size());
    for (size_t j = 0; j < num[i].size(); ++j) {
      RationalPoly cleared = num[i][j];
      for (size_t a = 0; a < den.size(); ++a) {
        for (size_t b = 0; b < den[a].size(); ++b) {
          if (a == i && b == j) continue;
          cleared = cleared * den[a][b];
        }
      }
      out.points[i].push_back(std::move(cleared));
    }
  }
  return out;
}

}  // namespace chowtree
