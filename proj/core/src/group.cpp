#include "chowtree/group.hpp"

#include <algorithm>
#include <set>

#include "chowtree/errors.hpp"

namespace chowtree {

int ConfigPoint::dim() const {
  return is_affine() ? affine_point().dim() : direction().dim();
}

ProjectivePoint ConfigPoint::to_projective() const {
  return is_affine() ? ProjectivePoint::from_affine(affine_point())
                     : ProjectivePoint::from_direction(direction());
}

GroupElement GroupElement::identity(int d) {
  return {Rational(1), AffinePoint(std::vector<Rational>(d, Rational(0)))};
}

AffinePoint act(const GroupElement& g, const AffinePoint& x) {
  if (g.dim() != x.dim()) throw DimensionMismatch("act: dimensions differ");
  std::vector<Rational> out(x.coords().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = g.w * x[i] + g.u[i];
  return AffinePoint(std::move(out));
}

ConfigPoint act(const GroupElement& g, const ConfigPoint& p) {
  if (g.dim() != p.dim()) throw DimensionMismatch("act: dimensions differ");
  if (!p.is_affine()) return p;  // G fixes H pointwise
  return ConfigPoint::affine(act(g, p.affine_point()));
}

Configuration act(const GroupElement& g, const Configuration& c) {
  if (g.dim() != c.dimension) throw DimensionMismatch("act: dimensions differ");
  Configuration out;
  out.dimension = c.dimension;
  out.points.reserve(c.points.size());
  for (const auto& p : c.points) out.points.push_back(act(g, p));
  return out;
}

GroupElement compose(const GroupElement& g2, const GroupElement& g1) {
  if (g2.dim() != g1.dim()) throw DimensionMismatch("compose: dimensions differ");
  std::vector<Rational> u(g1.u.coords().size());
  for (size_t i = 0; i < u.size(); ++i) u[i] = g2.w * g1.u[i] + g2.u[i];
  return {g2.w * g1.w, AffinePoint(std::move(u))};
}

GroupElement inverse(const GroupElement& g) {
  const Rational winv = g.w.reciprocal();
  std::vector<Rational> u(g.u.coords().size());
  for (size_t i = 0; i < u.size(); ++i) u[i] = -(winv * g.u[i]);
  return {winv, AffinePoint(std::move(u))};
}

QMatrix to_projective_matrix(const GroupElement& g) {
  const int d = g.dim();
  QMatrix m(d + 1, QVector(d + 1, Rational(0)));
  m[0][0] = Rational(1);
  for (int i = 1; i <= d; ++i) {
    m[i][0] = g.u[static_cast<size_t>(i - 1)];
    m[i][i] = g.w;
  }
  return m;
}

namespace {

// Distinct affine points of the support, in order of first appearance.
std::vector<AffinePoint> affine_support(const Configuration& c) {
  std::vector<AffinePoint> support;
  for (const auto& p : c.points) {
    if (!p.is_affine()) continue;
    if (std::find(support.begin(), support.end(), p.affine_point()) == support.end()) {
      support.push_back(p.affine_point());
    }
  }
  return support;
}

}  // namespace

int stabilizer_dimension(const Configuration& c) {
  const size_t distinct = affine_support(c).size();
  if (distinct >= 2) return 0;
  if (distinct == 1) return 1;
  return c.dimension + 1;
}

CanonicalizeResult canonicalize(const Configuration& c) {
  if (stabilizer_dimension(c) != 0) {
    throw NotFullDimensional("canonicalize: configuration has positive-dimensional stabilizer");
  }
  const std::vector<AffinePoint> support = affine_support(c);
  const AffinePoint& anchor = support[0];  // lowest-indexed affine point
  const AffinePoint& second = support[1];  // next distinct affine point

  // Solve w*anchor + u = 0 and first nonzero coordinate of w*(second-anchor) = 1.
  const std::vector<Rational> diff = displacement(second, anchor);
  size_t lead = 0;
  while (diff[lead].is_zero()) ++lead;
  const Rational w = diff[lead].reciprocal();
  std::vector<Rational> u(anchor.coords().size());
  for (size_t i = 0; i < u.size(); ++i) u[i] = -(w * anchor[i]);
  GroupElement g{w, AffinePoint(std::move(u))};
  return {act(g, c), std::move(g)};
}

}  // namespace chowtree
