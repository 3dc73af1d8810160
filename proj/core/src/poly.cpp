#include "chowtree/poly.hpp"

#include <algorithm>
#include <string>

#include "chowtree/errors.hpp"

namespace chowtree {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly RationalPoly::constant(Rational c) {
  return RationalPoly({std::move(c)});
}

RationalPoly RationalPoly::t() {
  return RationalPoly({Rational(0), Rational(1)});
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

long RationalPoly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<long>(i);
  }
  return kInfiniteValuation;
}

Rational RationalPoly::coefficient(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational RationalPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coefficient(static_cast<long>(i)) + b.coefficient(static_cast<long>(i));
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  return a + (-b);
}

RationalPoly operator-(const RationalPoly& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = -a.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
  return RationalPoly(std::move(out));
}

long valuation(const RationalPoly& p) {
  return p.valuation();
}

std::pair<RationalPoly, Rational> shift_eval(const RationalPoly& p, long k) {
  if (k < 0) throw Error("shift_eval: negative shift");
  if (p.valuation() < k) {
    throw ValuationTooLow("shift_eval: valuation " + std::to_string(p.valuation()) +
                          " < shift " + std::to_string(k));
  }
  if (p.is_zero()) return {RationalPoly(), Rational(0)};
  const auto& c = p.coefficients();
  std::vector<Rational> shifted(c.begin() + k, c.end());
  RationalPoly q(std::move(shifted));
  Rational at0 = q.at_zero();
  return {std::move(q), std::move(at0)};
}

}  // namespace chowtree
