#pragma once

#include <array>
#include <vector>

#include "chowtree/contract.hpp"
#include "chowtree/group.hpp"
#include "chowtree/tree.hpp"

namespace chowtree {

/// Point of the line T_{1,3}: a finite cross-ratio value or infinity.
/// Interior triples give values off {0, 1, infinity}; a collided pair gives
/// one of those three boundary values.
class CrossRatioValue {
 public:
  static CrossRatioValue finite(Rational v) { return CrossRatioValue(std::move(v), true); }
  static CrossRatioValue infinity() { return CrossRatioValue(Rational(0), false); }

  bool is_finite() const { return finite_; }
  const Rational& value() const;
  std::string str() const;

  friend bool operator==(const CrossRatioValue& a, const CrossRatioValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const CrossRatioValue& a, const CrossRatioValue& b) { return !(a == b); }

 private:
  CrossRatioValue(Rational v, bool finite) : v_(std::move(v)), finite_(finite) {}
  Rational v_;
  bool finite_;
};

/// Forgetful stabilization of a d=1 tree to three labels: drop every other
/// mark and contract components left with fewer than two special points,
/// until stable. Exposed for confluence testing.
StableTree stabilize_to_triple(const StableTree& tree, const std::array<int, 3>& labels);

/// Cross-ratio coordinate of the stabilized triple (a, b, c), with the root
/// hyperplane as implicit fourth mark: interior (pa, pb, pc) gives
/// (pc - pa) / (pb - pa); collided pairs give 0 ({a,c}), 1 ({b,c}), or
/// infinity ({a,b}). Throws BadLabels on a bad triple; requires d = 1.
CrossRatioValue triple_invariant(const StableTree& tree, const std::array<int, 3>& labels);

/// True iff some triple invariant differs; d = 1 only.
/// Throws ShapeMismatch when the trees' (d, n) differ or d != 1.
bool separates(const StableTree& t1, const StableTree& t2);

/// Form on (P^1)^3 of multidegree <= (1,1,1), with coordinates (x_i : z_i)
/// per factor and an affine point p sitting at (p : 1). Coefficients run
/// over the monomials of the slots of positive degree, ordered with x before
/// z slotwise (for full degree (1,1,1): x1x2x3, x1x2z3, x1z2x3, x1z2z3,
/// z1x2x3, z1x2z3, z1z2x3, z1z2z3), and are scaled so the first nonzero
/// coefficient is 1.
struct MultilinearForm {
  std::array<int, 3> multidegree{0, 0, 0};
  std::vector<Rational> coeffs;

  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) {
    return a.multidegree == b.multidegree && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const MultilinearForm& a, const MultilinearForm& b) { return !(a == b); }
};

/// Canonically rescales so the first nonzero coefficient is 1.
MultilinearForm normalized(MultilinearForm f);

/// Product of forms with disjoint slot support. Throws ClassMismatch when a
/// slot would exceed degree 1.
MultilinearForm multiply(const MultilinearForm& a, const MultilinearForm& b);

Rational evaluate(const MultilinearForm& f, const std::array<ProjectivePoint, 3>& pts);

/// Unnormalized coefficients ((p2-p3), (p3-p1), (p1-p2)) of the interior
/// orbit-closure form on the monomials (x1z2z3, z1x2z3, z1z2x3); linear in
/// the configuration.
std::array<Rational, 3> interior_form_coefficients(const Rational& p1, const Rational& p2,
                                                   const Rational& p3);

/// Defining form of the orbit closure of a full-dimensional configuration
/// with d = 1, n = 3: the multidegree-(1,1,1) hypersurface for an interior
/// triple, the slot diagonal for a doubled point, z_k for a point on H.
/// Throws NotFullDimensional when the stabilizer is positive-dimensional.
MultilinearForm chow_form_111(const Configuration& c);

/// Product of the members' forms; the total multidegree must come out to
/// (1,1,1), which for d = 1, n = 3 is exactly the all-ones class condition.
MultilinearForm chow_form_of_cycle(const ConfigurationCycle& z);

}  // namespace chowtree
