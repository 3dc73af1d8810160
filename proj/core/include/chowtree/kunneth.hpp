#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chowtree/contract.hpp"
#include "chowtree/group.hpp"

namespace chowtree {

/// Exponent vector (m1,...,mn) with sum d+1 and 0 <= mi <= d, indexing the
/// Kunneth basis element [P^{m1}] x ... x [P^{mn}] of H_{2d+2}((P^d)^n).
using WeightVector = std::vector<int>;

/// All weight vectors for (d, n) in lexicographic order.
std::vector<WeightVector> enumerate_weight_vectors(int d, int n);

/// Integer coefficients on the Kunneth basis, complete over every weight
/// vector for its (d, n). For a single full-dimensional orbit closure each
/// coefficient is 0 or 1; sums of orbit classes may exceed 1.
class KunnethClass {
 public:
  KunnethClass(int d, int n);

  int dimension() const { return d_; }
  int n() const { return n_; }

  long coefficient(const WeightVector& m) const;
  void set_coefficient(const WeightVector& m, long value);

  bool all_coefficients_are(long value) const;
  const std::map<WeightVector, long>& coefficients() const { return coeffs_; }

  KunnethClass& operator+=(const KunnethClass& other);

  friend bool operator==(const KunnethClass& a, const KunnethClass& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const KunnethClass& a, const KunnethClass& b) { return !(a == b); }

 private:
  int d_;
  int n_;
  std::map<WeightVector, long> coeffs_;
};

/// Homology class of the orbit closure of a full-dimensional configuration,
/// computed per weight vector by exact incidence counting: impose mi random
/// hyperplane conditions on the image of point i and ask whether the square
/// linear system in (w, u) has a unique solution with w != 0. `trials`
/// independent draws must agree; disagreement escalates the coefficient
/// range and retries (at most 5 escalations, then GenericityFailure).
/// Throws NotFullDimensional when the stabilizer is positive-dimensional.
KunnethClass orbit_class(const Configuration& c, int trials, uint64_t seed);

struct OrbitClassReport {
  KunnethClass cls;
  int escalations = 0;
};

OrbitClassReport orbit_class_report(const Configuration& c, int trials, uint64_t seed);

/// Support-pattern classifier: the coefficient of m is 1 iff no label on H
/// carries weight and at least two distinct affine support points carry
/// positive total weight. Proven for two-affine-group supports; validated
/// against orbit_class everywhere else.
KunnethClass orbit_class_deterministic(const Configuration& c);

/// Coefficient-wise sum of orbit classes over the members of a cycle.
KunnethClass cycle_class(const ConfigurationCycle& z, int trials, uint64_t seed);

/// True iff the configuration cycles of the two trees differ as canonically
/// ordered lists of canonical forms. Throws ShapeMismatch when (d, n) differ.
bool separates_boundary(const StableTree& t1, const StableTree& t2);

}  // namespace chowtree
