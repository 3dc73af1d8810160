#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "chowtree/rational.hpp"

namespace chowtree {

/// Sentinel valuation of the zero polynomial.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// Univariate polynomial in the deformation parameter t over Rational,
/// stored densely, lowest degree first, with no trailing zero coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(Rational c);
  static RationalPoly t();  // the monomial t

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero

  /// Index of the lowest nonzero coefficient; kInfiniteValuation for zero.
  long valuation() const;

  Rational coefficient(long k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;
  Rational at_zero() const { return coefficient(0); }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend RationalPoly operator-(const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

long valuation(const RationalPoly& p);

/// Divides by t^k and evaluates at t = 0; requires valuation(p) >= k.
/// Returns (p / t^k, (p / t^k)(0)). Throws ValuationTooLow otherwise.
std::pair<RationalPoly, Rational> shift_eval(const RationalPoly& p, long k);

}  // namespace chowtree
