#include "polyorder/linear_form.hpp"

#include <stdexcept>

namespace polyorder {

bool LinearForm::is_zero() const {
  if (!constant.is_zero()) return false;
  return linear_part_zero();
}

bool LinearForm::linear_part_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

Rational LinearForm::eval(const QVec& point) const {
  if (point.size() != coeffs.size()) throw std::invalid_argument("LinearForm::eval: dimension mismatch");
  Rational v = constant;
  for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * point[i];
  return v;
}

LinearForm LinearForm::normalized() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  auto absorb = [&](const Rational& r) {
    if (r.is_zero()) return;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.num().get_mpz_t());
  };
  absorb(constant);
  for (const auto& c : coeffs) absorb(c);
  const Rational scale = Rational(mpq_class(den_lcm) / mpq_class(num_gcd < 0 ? mpz_class(-num_gcd) : num_gcd));
  LinearForm r;
  r.constant = constant * scale;
  r.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) r.coeffs.push_back(c * scale);
  return r;
}

SparsePoly LinearForm::to_poly() const {
  SparsePoly p(nvars());
  p.add_term(SparsePoly::ExpVec(nvars(), 0), constant);
  for (int j = 0; j < nvars(); ++j) {
    SparsePoly::ExpVec e(nvars(), 0);
    e[j] = 1;
    p.add_term(e, coeffs[j]);
  }
  return p;
}

LinearForm LinearForm::from_poly(const SparsePoly& p) {
  LinearForm f;
  f.coeffs.assign(p.nvars(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    int deg = 0, var = -1;
    for (int j = 0; j < p.nvars(); ++j) {
      deg += e[j];
      if (e[j] > 0) var = j;
    }
    if (deg > 1) throw std::invalid_argument("LinearForm::from_poly: degree > 1");
    if (deg == 0)
      f.constant = c;
    else
      f.coeffs[var] = c;
  }
  return f;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("LinearForm: dimension mismatch");
  LinearForm r;
  r.constant = constant + o.constant;
  r.coeffs.resize(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
  if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("LinearForm: dimension mismatch");
  LinearForm r;
  r.constant = constant - o.constant;
  r.coeffs.resize(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
  return r;
}

LinearForm LinearForm::scaled(const Rational& c) const {
  LinearForm r;
  r.constant = constant * c;
  r.coeffs.resize(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] * c;
  return r;
}

}  // namespace polyorder
