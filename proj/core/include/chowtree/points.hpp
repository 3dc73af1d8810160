#pragma once

#include <vector>

#include "chowtree/rational.hpp"

namespace chowtree {

/// Point of affine d-space. Embeds into projective space as (1 : x1 : ... : xd).
class AffinePoint {
 public:
  AffinePoint() = default;
  explicit AffinePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](size_t i) const { return coords_[i]; }

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const AffinePoint& a, const AffinePoint& b) { return !(a == b); }
  /// Lexicographic coordinate order; used for canonical traversals.
  friend bool operator<(const AffinePoint& a, const AffinePoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Displacement a - b of two affine points of the same dimension.
std::vector<Rational> displacement(const AffinePoint& a, const AffinePoint& b);

/// Point of the hyperplane at infinity H = V(x0), i.e. (0 : y1 : ... : yd),
/// stored up to scale with the first nonzero coordinate equal to 1.
class HyperplaneDirection {
 public:
  /// Normalizes; throws Error when all coordinates are zero.
  explicit HyperplaneDirection(std::vector<Rational> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const HyperplaneDirection& a, const HyperplaneDirection& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const HyperplaneDirection& a, const HyperplaneDirection& b) { return !(a == b); }
  friend bool operator<(const HyperplaneDirection& a, const HyperplaneDirection& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Point of projective d-space with homogeneous coordinates, canonically
/// scaled so that the first nonzero coordinate is 1. Equality of the stored
/// representation coincides with projective equality.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> homogeneous);
  static ProjectivePoint from_affine(const AffinePoint& p);
  static ProjectivePoint from_direction(const HyperplaneDirection& y);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool at_infinity() const { return coords_[0].is_zero(); }

  AffinePoint to_affine() const;            // requires !at_infinity()
  HyperplaneDirection to_direction() const; // requires at_infinity()

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

 private:
  std::vector<Rational> coords_;
};

}  // namespace chowtree
