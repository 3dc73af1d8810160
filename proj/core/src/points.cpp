#include "chowtree/points.hpp"

#include "chowtree/errors.hpp"

namespace chowtree {

std::vector<Rational> displacement(const AffinePoint& a, const AffinePoint& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("displacement: dimensions differ");
  std::vector<Rational> out(a.coords().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

namespace {

// Scales so the first nonzero entry becomes 1; false when all entries vanish.
bool normalize_scale(std::vector<Rational>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) {
      const Rational inv = c.reciprocal();
      for (auto& x : v) x *= inv;
      return true;
    }
  }
  return false;
}

}  // namespace

HyperplaneDirection::HyperplaneDirection(std::vector<Rational> coords)
    : coords_(std::move(coords)) {
  if (!normalize_scale(coords_)) {
    throw Error("HyperplaneDirection: zero direction vector");
  }
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> homogeneous)
    : coords_(std::move(homogeneous)) {
  if (coords_.empty()) throw Error("ProjectivePoint: empty coordinate vector");
  if (!normalize_scale(coords_)) {
    throw Error("ProjectivePoint: all homogeneous coordinates are zero");
  }
}

ProjectivePoint ProjectivePoint::from_affine(const AffinePoint& p) {
  std::vector<Rational> h;
  h.reserve(p.coords().size() + 1);
  h.emplace_back(1);
  h.insert(h.end(), p.coords().begin(), p.coords().end());
  return ProjectivePoint(std::move(h));
}

ProjectivePoint ProjectivePoint::from_direction(const HyperplaneDirection& y) {
  std::vector<Rational> h;
  h.reserve(y.coords().size() + 1);
  h.emplace_back(0);
  h.insert(h.end(), y.coords().begin(), y.coords().end());
  return ProjectivePoint(std::move(h));
}

AffinePoint ProjectivePoint::to_affine() const {
  if (at_infinity()) throw Error("ProjectivePoint: point at infinity has no affine chart image");
  const Rational inv = coords_[0].reciprocal();
  std::vector<Rational> out(coords_.begin() + 1, coords_.end());
  for (auto& c : out) c *= inv;
  return AffinePoint(std::move(out));
}

HyperplaneDirection ProjectivePoint::to_direction() const {
  if (!at_infinity()) throw Error("ProjectivePoint: affine point is not on H");
  return HyperplaneDirection(std::vector<Rational>(coords_.begin() + 1, coords_.end()));
}

}  // namespace chowtree
