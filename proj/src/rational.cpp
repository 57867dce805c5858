#include "polyorder/rational.hpp"

namespace polyorder {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational::parse: bad rational '" + text + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return r;
}

}  // namespace polyorder
