#include "chowtree/rational.hpp"

#include <cctype>
#include <ostream>

#include "chowtree/errors.hpp"

namespace chowtree {

Rational::Rational(long n, long d) : value_(n, d) {
  if (d == 0) throw Error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  value_.canonicalize();
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  // Accepted grammar: -?digits(/digits)? with a nonzero denominator.
  const size_t slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  size_t num_start = 0;
  if (!num.empty() && num[0] == '-') num_start = 1;
  if (!all_digits(num, num_start, num.size())) {
    throw MalformedInput("bad rational literal: '" + text + "'");
  }
  if (slash != std::string::npos) {
    if (!all_digits(text, slash + 1, text.size())) {
      throw MalformedInput("bad rational literal: '" + text + "'");
    }
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) {
    throw MalformedInput("bad rational literal: '" + text + "'");
  }
  if (v.get_den() == 0) {
    throw MalformedInput("zero denominator in rational literal: '" + text + "'");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  return value_.get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("Rational: reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace chowtree
