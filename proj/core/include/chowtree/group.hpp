#pragma once

#include <variant>
#include <vector>

#include "chowtree/linalg.hpp"
#include "chowtree/points.hpp"

namespace chowtree {

/// One of the n points of a configuration in P^d, split by chart: either an
/// affine point (1 : x) or a point (0 : y) of the hyperplane H at infinity.
class ConfigPoint {
 public:
  static ConfigPoint affine(AffinePoint p) { return ConfigPoint(std::move(p)); }
  static ConfigPoint at_infinity(HyperplaneDirection y) { return ConfigPoint(std::move(y)); }

  bool is_affine() const { return std::holds_alternative<AffinePoint>(rep_); }
  const AffinePoint& affine_point() const { return std::get<AffinePoint>(rep_); }
  const HyperplaneDirection& direction() const { return std::get<HyperplaneDirection>(rep_); }

  int dim() const;
  ProjectivePoint to_projective() const;

  friend bool operator==(const ConfigPoint& a, const ConfigPoint& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const ConfigPoint& a, const ConfigPoint& b) { return !(a == b); }
  friend bool operator<(const ConfigPoint& a, const ConfigPoint& b) { return a.rep_ < b.rep_; }

 private:
  explicit ConfigPoint(AffinePoint p) : rep_(std::move(p)) {}
  explicit ConfigPoint(HyperplaneDirection y) : rep_(std::move(y)) {}
  std::variant<AffinePoint, HyperplaneDirection> rep_;
};

/// n labeled points of P^d (n >= 2), the object the group acts on.
struct Configuration {
  int dimension = 0;
  std::vector<ConfigPoint> points;

  int n() const { return static_cast<int>(points.size()); }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.dimension == b.dimension && a.points == b.points;
  }
  friend bool operator!=(const Configuration& a, const Configuration& b) { return !(a == b); }
  friend bool operator<(const Configuration& a, const Configuration& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.points < b.points;
  }
};

/// Element of the group G of projectivities fixing H pointwise, in affine
/// coordinates: x |-> w x + u on the chart x0 = 1. In the matrix picture
/// with parameters (t, s), this is (w, u) = (t^{d+1}, t^d s); the pair is a
/// faithful coordinate on the projectivity even when t itself is irrational.
struct GroupElement {
  Rational w;     // homothety factor, nonzero
  AffinePoint u;  // translation, d entries

  int dim() const { return u.dim(); }
  static GroupElement identity(int d);

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.w == b.w && a.u == b.u;
  }
};

AffinePoint act(const GroupElement& g, const AffinePoint& x);
ConfigPoint act(const GroupElement& g, const ConfigPoint& p);
Configuration act(const GroupElement& g, const Configuration& c);

GroupElement compose(const GroupElement& g2, const GroupElement& g1);
GroupElement inverse(const GroupElement& g);

/// The (d+1)x(d+1) matrix [[1, 0...0], [u1, w, 0...], ..., [ud, 0..., w]]
/// whose projective action equals act(g, .). Defined up to scale.
QMatrix to_projective_matrix(const GroupElement& g);

/// 0 when the support contains two distinct affine points, 1 when exactly
/// one, d+1 when all points lie on H.
int stabilizer_dimension(const Configuration& c);

struct CanonicalizeResult {
  Configuration canonical;
  GroupElement transform;  // act(transform, input) == canonical
};

/// Unique orbit representative of a configuration with trivial stabilizer:
/// the lowest-indexed affine point is moved to the origin and the first
/// nonzero coordinate of the next distinct affine point is scaled to 1.
/// Throws NotFullDimensional when stabilizer_dimension(c) != 0.
CanonicalizeResult canonicalize(const Configuration& c);

}  // namespace chowtree
