#pragma once

#include <vector>

#include "chowtree/group.hpp"
#include "chowtree/poly.hpp"
#include "chowtree/tree.hpp"

namespace chowtree {

/// 1-parameter polynomial family of n affine configurations in d-space:
/// point i has coordinates p_i(t), pairwise distinct as polynomial vectors.
struct FamilyConfiguration {
  int dimension = 0;
  std::vector<std::vector<RationalPoly>> points;

  int n() const { return static_cast<int>(points.size()); }
};

/// Rescaled view of the family at one vertex of its limit tree: the group
/// element x |-> (x - base(t)) / t^exponent over the fraction field, applied
/// to all n points and evaluated at t = 0. Points whose difference from the
/// base has valuation below the exponent diverge and are recorded on H in
/// their leading-term direction.
struct ScaledLimit {
  int vertex = 0;
  std::vector<RationalPoly> base;
  long exponent = 0;
  Configuration limit;
};

/// Limiting stable tree of the family as t -> 0, by recursive clustering:
/// at each node, rescale by the minimal pairwise valuation so the points
/// stay finite and at least two separate; equal limits spawn child nodes.
/// Throws NotGenericallyDistinct when two point polynomials coincide.
StableTree limit_tree(const FamilyConfiguration& f);

/// The vertex-v rescaled limit of all n labels; v must be a vertex id of
/// limit_tree(f). Throws UnknownVertex otherwise.
ScaledLimit scaled_limit(const FamilyConfiguration& f, int vertex);

/// True iff for every vertex v of T = limit_tree(f) the canonical form of
/// scaled_limit(f, v) equals the canonical form of contract(T, v): each
/// component configuration of the limit tree arises as a rescaled limit of
/// the family.
bool check_limit_compatibility(const FamilyConfiguration& f);

/// Clears rational-function coordinates num/den into a polynomial family by
/// a single global rescaling (a homothety over the fraction field, so the
/// limit tree is unchanged). Shapes of num and den must match; den entries
/// must be nonzero.
FamilyConfiguration clear_denominators(int dimension,
                                       const std::vector<std::vector<RationalPoly>>& num,
                                       const std::vector<std::vector<RationalPoly>>& den);

}  // namespace chowtree
