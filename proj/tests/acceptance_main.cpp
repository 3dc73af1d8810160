// Acceptance suite: runs the seven exact acceptance criteria end to end and
// prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chowtree/contract.hpp"
#include "chowtree/curves.hpp"
#include "chowtree/degeneration.hpp"
#include "chowtree/errors.hpp"
#include "chowtree/kunneth.hpp"
#include "chowtree/linalg.hpp"
#include "chowtree/rng.hpp"
#include "chowtree/tree.hpp"

using namespace chowtree;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Configuration random_interior(Rng& rng, int d, int n) {
  Configuration c;
  c.dimension = d;
  while (c.n() < n) {
    std::vector<Rational> coords(static_cast<size_t>(d));
    for (auto& x : coords) x = rng.small_rational(15, 4);
    ConfigPoint p = ConfigPoint::affine(AffinePoint(std::move(coords)));
    if (std::find(c.points.begin(), c.points.end(), p) == c.points.end()) {
      c.points.push_back(std::move(p));
    }
  }
  return c;
}

GroupElement random_group_element(Rng& rng, int d) {
  Rational w(0);
  while (w.is_zero()) w = rng.small_rational(9, 4);
  std::vector<Rational> u(static_cast<size_t>(d));
  for (auto& x : u) x = rng.small_rational(9, 4);
  return {std::move(w), AffinePoint(std::move(u))};
}

// ---------------------------------------------------------------------------
// 1. ALL-ONES: every coefficient of the cycle class of every tree equals 1.

Criterion criterion_all_ones() {
  Criterion crit;
  Rng rng(0xA11);
  int trees = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& shape : enumerate_shapes(n)) {
        const StableTree tree = random_tree(d, n, shape, rng.next());
        if (!validate(tree).empty()) {
          crit.fail("random tree failed validation at d=" + std::to_string(d) +
                    ", n=" + std::to_string(n));
          continue;
        }
        const KunnethClass cls = cycle_class(configuration_cycle(tree), 3, rng.next());
        if (!cls.all_coefficients_are(1)) {
          crit.fail("cycle class not all ones at d=" + std::to_string(d) +
                    ", n=" + std::to_string(n));
        }
        ++trees;
      }
    }
  }
  if (trees < 200) crit.fail("only " + std::to_string(trees) + " trees sampled");
  if (crit.pass) {
    crit.detail = std::to_string(trees) +
                  " trees covering every stratum shape, d=1..3, n=2..6, exact";
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 2. Maximally degenerate criterion: deterministic classifier == randomized
//    oracle on every component configuration, with no escalations.

bool shape_is_maximally_degenerate(const StratumSignature& s) {
  if (s.marks.size() + s.children.size() != 2) return false;
  for (const auto& c : s.children) {
    if (!shape_is_maximally_degenerate(c)) return false;
  }
  return true;
}

Criterion criterion_maxdegen() {
  Criterion crit;
  Rng rng(0xDE6E);
  int trees = 0;
  int members = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& shape : enumerate_shapes(n)) {
        if (!shape_is_maximally_degenerate(shape)) continue;
        const StableTree tree = random_tree(d, n, shape, rng.next());
        if (!is_maximally_degenerate(tree)) {
          crit.fail("sampled tree not maximally degenerate");
          continue;
        }
        for (const auto& member : configuration_cycle(tree)) {
          const OrbitClassReport report = orbit_class_report(member.config, 3, rng.next());
          if (report.escalations != 0) {
            crit.fail("escalation triggered at d=" + std::to_string(d) +
                      ", n=" + std::to_string(n));
          }
          if (report.cls != orbit_class_deterministic(member.config)) {
            crit.fail("classifier disagrees with oracle at d=" + std::to_string(d) +
                      ", n=" + std::to_string(n));
          }
          ++members;
        }
        ++trees;
      }
    }
  }
  if (crit.pass) {
    crit.detail = "oracle == classifier on " + std::to_string(members) +
                  " component configurations of " + std::to_string(trees) +
                  " maximally degenerate trees, no escalations";
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 3. Limit compatibility: Z of the limit tree arises from rescaled limits.

FamilyConfiguration random_clustered_family(Rng& rng, int d, int n, int max_degree) {
  FamilyConfiguration f;
  f.dimension = d;
  while (f.n() < n) {
    std::vector<RationalPoly> coords;
    for (int j = 0; j < d; ++j) {
      // Small constant-term pool so that points collide at t = 0 and the
      // limit tree acquires genuine boundary structure.
      std::vector<Rational> cs(static_cast<size_t>(max_degree) + 1, Rational(0));
      cs[0] = Rational(rng.uniform_int(0, 1));
      for (size_t k = 1; k < cs.size(); ++k) {
        if (rng.uniform_int(0, 2) == 0) cs[k] = rng.small_rational(4, 2);
      }
      coords.emplace_back(std::move(cs));
    }
    bool dup = false;
    for (const auto& other : f.points) dup = dup || other == coords;
    if (!dup) f.points.push_back(std::move(coords));
  }
  return f;
}

FamilyConfiguration nested_family(int d) {
  const RationalPoly t = RationalPoly::t();
  const RationalPoly t2 = t * t;
  const RationalPoly t3 = t2 * t;
  const RationalPoly one = RationalPoly::constant(Rational(1));
  const RationalPoly zero;
  FamilyConfiguration f;
  f.dimension = d;
  if (d == 1) {
    // (0, t, t + t^2, t + t^2 + t^3, 1): a four-level chain.
    f.points = {{zero}, {t}, {t + t2}, {t + t2 + t3}, {one}};
  } else if (d == 2) {
    f.points = {{zero, zero}, {t, zero}, {t, t2}, {one, one}, {one + t3, one}};
  } else {
    f.points = {{zero, zero, zero}, {t, zero, zero}, {t, zero, t2},
                {one, one, one},    {one, one, one + t}};
  }
  return f;
}

int tree_depth(const StableTree& tree) {
  int deepest = 0;
  for (const auto& v : tree.vertices) {
    int depth = 0;
    int cur = v.id;
    while (tree.vertex(cur).parent) {
      cur = *tree.vertex(cur).parent;
      ++depth;
    }
    deepest = std::max(deepest, depth);
  }
  return deepest + 1;  // levels
}

Criterion criterion_limit_compatibility() {
  Criterion crit;
  Rng rng(0x11817);
  int families = 0;
  for (int d = 1; d <= 3; ++d) {
    const FamilyConfiguration f = nested_family(d);
    if (tree_depth(limit_tree(f)) < 3) {
      crit.fail("hand-built family is not nested three levels deep");
    }
    if (!check_limit_compatibility(f)) crit.fail("nested family incompatible");
    ++families;
  }
  for (int iter = 0; iter < 110; ++iter) {
    const int d = 1 + iter % 3;
    const int n = 2 + iter % 5;
    const FamilyConfiguration f = random_clustered_family(rng, d, n, 4);
    if (!check_limit_compatibility(f)) {
      crit.fail("random family incompatible at d=" + std::to_string(d) +
                ", n=" + std::to_string(n));
    }
    ++families;
  }
  if (crit.pass) {
    crit.detail = std::to_string(families) +
                  " families (degrees <= 4, d <= 3, n <= 6, nested chains included), exact";
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 4. Separation for d = 1 plus the K'/L' quadruple existence check.

using InvariantVector = std::vector<CrossRatioValue>;

std::vector<std::array<int, 3>> sorted_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

// Boundary value of the quadruple {a,b,c,root} lying on the divisor that
// splits the pair {k1,k2} of the sorted triple away from the other label and
// the root: {a,b} collides to infinity, {a,c} to 0, {b,c} to 1.
CrossRatioValue split_value(const std::array<int, 3>& sorted, int k1, int k2) {
  const std::set<int> pair{k1, k2};
  if (pair == std::set<int>{sorted[0], sorted[1]}) return CrossRatioValue::infinity();
  if (pair == std::set<int>{sorted[0], sorted[2]}) return CrossRatioValue::finite(Rational(0));
  return CrossRatioValue::finite(Rational(1));
}

// For every boundary divisor (K, L) of the (n+1)-pointed picture that the
// tree does not lie on, some quadruple K' u L' through the root stabilizes
// off the divisor D_{K',L'} of the 4-pointed space. (This is the conclusion
// the lemma's proof establishes: the minimal subtrees of K' and L' meet, so
// the stabilized point avoids that particular boundary point; it can still
// land on one of the other two.)
bool kl_existence(const StableTree& tree, const std::vector<std::array<int, 3>>& triples,
                  const InvariantVector& values) {
  const int n = tree.num_marks;
  auto invariant_at = [&](std::array<int, 3> key) {
    std::sort(key.begin(), key.end());
    const auto it = std::find(triples.begin(), triples.end(), key);
    return values[static_cast<size_t>(it - triples.begin())];
  };

  std::set<std::set<int>> divisors;
  for (const auto& part : boundary_decomposition(tree)) divisors.insert(part);

  // K runs over the label side (the root sits in L).
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    std::set<int> k_side;
    for (int i = 0; i < n; ++i) {
      if (mask & (uint64_t{1} << i)) k_side.insert(i + 1);
    }
    const size_t ksize = k_side.size();
    if (ksize < 2 || ksize > static_cast<size_t>(n) - 1) continue;
    if (divisors.count(k_side)) continue;  // the tree lies on this divisor

    bool found = false;
    for (auto it1 = k_side.begin(); it1 != k_side.end() && !found; ++it1) {
      for (auto it2 = std::next(it1); it2 != k_side.end() && !found; ++it2) {
        for (int ell = 1; ell <= n && !found; ++ell) {
          if (k_side.count(ell)) continue;
          std::array<int, 3> key{*it1, *it2, ell};
          std::sort(key.begin(), key.end());
          found = invariant_at(key) != split_value(key, *it1, *it2);
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

Criterion criterion_separation() {
  Criterion crit;
  Rng rng(0x5EB);
  int total_trees = 0;
  long pairs = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto shapes = enumerate_shapes(n);
    std::vector<StableTree> trees;
    for (const auto& shape : shapes) {
      trees.push_back(random_tree(1, n, shape, rng.next()));
      if (n <= 4) trees.push_back(random_tree(1, n, shape, rng.next()));  // extra moduli
    }

    const auto triples = sorted_triples(n);
    std::vector<InvariantVector> values;
    values.reserve(trees.size());
    for (const auto& t : trees) {
      InvariantVector v;
      v.reserve(triples.size());
      for (const auto& triple : triples) v.push_back(triple_invariant(t, triple));
      values.push_back(std::move(v));
    }

    for (size_t i = 0; i < trees.size(); ++i) {
      for (size_t j = i + 1; j < trees.size(); ++j) {
        if (values[i] != values[j]) {
          ++pairs;
          continue;
        }
        // Equal invariant vectors are only allowed for equal moduli points.
        if (!canonically_equal(trees[i], trees[j])) {
          crit.fail("distinct trees share every triple invariant at n=" + std::to_string(n));
        }
      }
    }

    for (size_t i = 0; i < trees.size(); ++i) {
      if (!kl_existence(trees[i], triples, values[i])) {
        crit.fail("K'/L' existence fails at n=" + std::to_string(n));
      }
    }
    total_trees += static_cast<int>(trees.size());
  }
  if (total_trees < 100) crit.fail("too few trees sampled");
  if (crit.pass) {
    std::ostringstream os;
    os << total_trees << " trees over all strata shapes, " << pairs
       << " separated pairs, K'/L' check on every tree, n <= 6";
    crit.detail = os.str();
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 5. Chow-form coherence: linearity, limit/cycle agreement, vanishing.

Criterion criterion_chow_forms() {
  Criterion crit;
  Rng rng(0xC404);

  // (a) linearity of the raw coefficient vector.
  for (int iter = 0; iter < 100; ++iter) {
    const Rational a1 = rng.small_rational(20, 5), a2 = rng.small_rational(20, 5),
                   a3 = rng.small_rational(20, 5);
    const Rational b1 = rng.small_rational(20, 5), b2 = rng.small_rational(20, 5),
                   b3 = rng.small_rational(20, 5);
    const Rational s = rng.small_rational(20, 5);
    const auto fa = interior_form_coefficients(a1, a2, a3);
    const auto fb = interior_form_coefficients(b1, b2, b3);
    const auto fsum = interior_form_coefficients(a1 + b1, a2 + b2, a3 + b3);
    const auto fscl = interior_form_coefficients(s * a1, s * a2, s * a3);
    for (size_t i = 0; i < 3; ++i) {
      if (fsum[i] != fa[i] + fb[i] || fscl[i] != s * fa[i]) crit.fail("linearity violated");
    }
  }

  // (b) the cleared t -> 0 limit of the family's forms equals the form of
  // the limit tree's cycle, on 50 families (half with forced collisions).
  for (int iter = 0; iter < 50; ++iter) {
    FamilyConfiguration f;
    f.dimension = 1;
    while (f.n() < 3) {
      std::vector<Rational> cs(static_cast<size_t>(rng.uniform_int(1, 4)), Rational(0));
      if (iter % 2 == 0) {
        cs[0] = Rational(rng.uniform_int(0, 1));  // collide at t = 0
        for (size_t k = 1; k < cs.size(); ++k) cs[k] = rng.small_rational(5, 2);
      } else {
        for (size_t k = 0; k < cs.size(); ++k) cs[k] = rng.small_rational(5, 2);
      }
      std::vector<RationalPoly> point{RationalPoly(std::move(cs))};
      bool dup = false;
      for (const auto& other : f.points) dup = dup || other == point;
      if (!dup) f.points.push_back(std::move(point));
    }

    const RationalPoly& p1 = f.points[0][0];
    const RationalPoly& p2 = f.points[1][0];
    const RationalPoly& p3 = f.points[2][0];
    const std::array<RationalPoly, 3> coeff_polys{p2 - p3, p3 - p1, p1 - p2};
    long min_val = kInfiniteValuation;
    for (const auto& cp : coeff_polys) min_val = std::min(min_val, cp.valuation());
    MultilinearForm from_limit;
    from_limit.multidegree = {1, 1, 1};
    from_limit.coeffs.assign(8, Rational(0));
    from_limit.coeffs[3] = shift_eval(coeff_polys[0], min_val).second;
    from_limit.coeffs[5] = shift_eval(coeff_polys[1], min_val).second;
    from_limit.coeffs[6] = shift_eval(coeff_polys[2], min_val).second;

    const MultilinearForm from_cycle = chow_form_of_cycle(configuration_cycle(limit_tree(f)));
    if (from_cycle != normalized(from_limit)) crit.fail("limit form != cycle form");
  }

  // (c) every produced form vanishes on random orbit samples of its
  // configuration.
  std::vector<Configuration> produced;
  for (int iter = 0; iter < 20; ++iter) produced.push_back(random_interior(rng, 1, 3));
  {
    Configuration doubled = random_interior(rng, 1, 3);
    doubled.points[1] = doubled.points[0];
    produced.push_back(doubled);
    Configuration pinned = random_interior(rng, 1, 3);
    pinned.points[2] = ConfigPoint::at_infinity(HyperplaneDirection({Rational(1)}));
    produced.push_back(pinned);
  }
  for (const auto& c : produced) {
    const MultilinearForm form = chow_form_111(c);
    for (int iter = 0; iter < 100; ++iter) {
      const Configuration moved = act(random_group_element(rng, 1), c);
      const std::array<ProjectivePoint, 3> pts{moved.points[0].to_projective(),
                                               moved.points[1].to_projective(),
                                               moved.points[2].to_projective()};
      if (!evaluate(form, pts).is_zero()) crit.fail("form does not vanish on its orbit");
    }
  }
  if (crit.pass) {
    crit.detail = "linearity on 100 triples, 50 family limits, vanishing on 2200 orbit samples";
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 6. Group and action algebra.

int stabilizer_dimension_kernel(const Configuration& c) {
  QMatrix rows;
  for (const auto& pt : c.points) {
    if (!pt.is_affine()) continue;
    const AffinePoint& p = pt.affine_point();
    for (int j = 0; j < c.dimension; ++j) {
      QVector row(static_cast<size_t>(c.dimension) + 1, Rational(0));
      row[0] = p[static_cast<size_t>(j)];
      row[static_cast<size_t>(j) + 1] = Rational(1);
      rows.push_back(std::move(row));
    }
  }
  return c.dimension + 1 - rank(rows);
}

Criterion criterion_group_algebra() {
  Criterion crit;
  Rng rng(0x6A1);

  // Exhaustive structured support patterns.
  for (int d = 1; d <= 3; ++d) {
    const Configuration base = random_interior(rng, d, 2);
    const ConfigPoint a = base.points[0];
    const ConfigPoint b = base.points[1];
    const ConfigPoint h = ConfigPoint::at_infinity(
        HyperplaneDirection(std::vector<Rational>(static_cast<size_t>(d), Rational(1))));
    const std::vector<Configuration> cases = {
        {d, {a, b}},    {d, {a, a}},    {d, {a, a, b}}, {d, {a, h}},
        {d, {h, h}},    {d, {a, b, h}}, {d, {a, h, h}}, {d, {a, a, h, b}},
    };
    for (const auto& c : cases) {
      if (stabilizer_dimension(c) != stabilizer_dimension_kernel(c)) {
        crit.fail("stabilizer dimension disagrees with the kernel computation");
      }
    }
  }

  for (int iter = 0; iter < 200; ++iter) {
    const int d = 1 + iter % 3;
    const GroupElement g1 = random_group_element(rng, d);
    const GroupElement g2 = random_group_element(rng, d);
    const GroupElement g3 = random_group_element(rng, d);
    if (compose(compose(g1, g2), g3) != compose(g1, compose(g2, g3))) crit.fail("associativity");
    if (compose(g1, inverse(g1)) != GroupElement::identity(d)) crit.fail("inverse");
    if (compose(GroupElement::identity(d), g1) != g1) crit.fail("identity");

    Configuration c = random_interior(rng, d, 2 + iter % 4);
    std::vector<Rational> dir(static_cast<size_t>(d), Rational(0));
    dir[static_cast<size_t>(iter % d)] = Rational(1);
    c.points.push_back(ConfigPoint::at_infinity(HyperplaneDirection(std::move(dir))));

    if (act(compose(g1, g2), c) != act(g1, act(g2, c))) crit.fail("action law");
    if (act(g1, c.points.back()) != c.points.back()) crit.fail("H not fixed pointwise");
    if (stabilizer_dimension(c) != stabilizer_dimension_kernel(c)) {
      crit.fail("stabilizer dimension disagrees on a random case");
    }

    const Configuration canon = canonicalize(c).canonical;
    if (canonicalize(canon).canonical != canon) crit.fail("canonicalize not idempotent");
    if (canonicalize(act(g1, c)).canonical != canon) crit.fail("canonical form not orbit constant");
  }
  if (crit.pass) {
    crit.detail = "group axioms, action law, H fixed pointwise, canonical forms, "
                  "stabilizer vs kernel: exhaustive patterns + 200 random cases";
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 7. Boundary separation via configuration cycles.

StableTree divisor_tree(int d, int n, const std::set<int>& deep_labels, uint64_t seed) {
  StratumSignature child;
  child.marks.assign(deep_labels.begin(), deep_labels.end());
  StratumSignature root;
  for (int label = 1; label <= n; ++label) {
    if (!deep_labels.count(label)) root.marks.push_back(label);
  }
  root.children.push_back(std::move(child));
  return random_tree(d, n, root, seed);
}

Criterion criterion_boundary_separation() {
  Criterion crit;
  Rng rng(0xB5E9);
  long checked_pairs = 0;
  for (int d = 1; d <= 2; ++d) {
    for (int n = 3; n <= 5; ++n) {
      // All one-edge boundary strata: subsets of labels on the daughter.
      std::vector<std::set<int>> subsets;
      for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i) {
          if (mask & (uint64_t{1} << i)) s.insert(i + 1);
        }
        if (s.size() >= 2 && s.size() <= static_cast<size_t>(n) - 1) subsets.push_back(s);
      }
      std::vector<StableTree> trees;
      for (const auto& s : subsets) trees.push_back(divisor_tree(d, n, s, rng.next()));

      // Distinct boundary components are always separated.
      for (size_t i = 0; i < trees.size(); ++i) {
        for (size_t j = i + 1; j < trees.size(); ++j) {
          if (!separates_boundary(trees[i], trees[j])) {
            crit.fail("cycles coincide across distinct boundary components");
          }
          ++checked_pairs;
        }
      }

      // Within one component, distinct moduli are separated.
      for (const auto& s : subsets) {
        const StableTree t1 = divisor_tree(d, n, s, rng.next());
        const StableTree t2 = divisor_tree(d, n, s, rng.next());
        if (canonically_equal(t1, t2)) continue;  // same moduli point; nothing to separate
        if (!separates_boundary(t1, t2)) {
          crit.fail("cycles coincide for distinct moduli in one component");
        }
        if (separates_boundary(t1, t1)) crit.fail("a tree separates from itself");
        ++checked_pairs;
      }

      // A few deeper strata for good measure.
      const auto shapes = enumerate_shapes(n);
      for (size_t si = 0; si + 1 < shapes.size(); si += 3) {
        const StableTree t1 = random_tree(d, n, shapes[si], rng.next());
        const StableTree t2 = random_tree(d, n, shapes[si + 1], rng.next());
        if (!separates_boundary(t1, t2)) crit.fail("cycles coincide across strata");
        ++checked_pairs;
      }
    }
  }
  if (crit.pass) {
    crit.detail = std::to_string(checked_pairs) + " tree pairs, d <= 2, n <= 5, exact";
  }
  return crit;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*run)();
  };
  const std::vector<Entry> entries = {
      {"all-ones cycle classes", criterion_all_ones},
      {"maximally degenerate classifier", criterion_maxdegen},
      {"limit compatibility", criterion_limit_compatibility},
      {"d=1 separation and K'/L' existence", criterion_separation},
      {"chow form coherence", criterion_chow_forms},
      {"group and action algebra", criterion_group_algebra},
      {"boundary separation", criterion_boundary_separation},
  };

  bool all_pass = true;
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Criterion result;
    try {
      result = entries[i].run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (result.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << entries[i].name << ": "
         << result.detail << " (" << static_cast<long>(seconds * 10) / 10.0 << "s)";
    std::cout << line.str() << std::endl;
    all_pass = all_pass && result.pass;
  }
  return all_pass ? 0 : 1;
}
