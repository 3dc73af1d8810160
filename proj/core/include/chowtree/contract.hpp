#pragma once

#include <utility>
#include <vector>

#include "chowtree/group.hpp"
#include "chowtree/tree.hpp"

namespace chowtree {

/// The n marks of a tree pushed down onto one component's blow-down: the
/// image of label i is affine when its vertex sits at or below v, and lands
/// on H otherwise.
struct ComponentConfiguration {
  int vertex = 0;
  Configuration config;
};

/// One component configuration per vertex, each in canonical orbit form,
/// ordered by the canonical vertex traversal.
using ConfigurationCycle = std::vector<ComponentConfiguration>;

/// Pushes every mark onto the blow-down of component v. For a mark at q on
/// vertex w, with a the deepest common ancestor of w and v:
///   (i)   w == v:          the mark keeps its coordinates q;
///   (ii)  a == v, w > v:   the attachment point at v determined by w;
///   (iii) a < v:           collapse into the a-component (q when w == a,
///         else the attachment determined by w), then project from the
///         attachment p determined by v: the direction x - p on H. Points
///         on H stay fixed under the remaining chain of projections.
ComponentConfiguration contract(const StableTree& tree, int v);

/// Contracts at every vertex and canonicalizes each image configuration.
ConfigurationCycle configuration_cycle(const StableTree& tree);

/// Labels grouped by coincident image points; all labels on H form one group.
struct SupportProfile {
  std::vector<std::pair<AffinePoint, std::vector<int>>> affine_groups;  // by least label
  std::vector<int> infinity_labels;
};

SupportProfile support_profile(const ComponentConfiguration& cc);

}  // namespace chowtree
