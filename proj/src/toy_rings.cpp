#include "polyorder/toy_rings.hpp"

#include "polyorder/sturm.hpp"

namespace polyorder {

bool toy_r1_member(const SparsePoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("toy_r1_member: univariate polynomial expected");
  if (p.is_zero()) return false;
  if (strictly_positive_on_unit_interval(p)) return true;
  const int j = x_adic_valuation(p);
  if (j < 1) return false;
  const SparsePoly q = shift_down(p, j);
  SparsePoly one_plus_x(1);
  one_plus_x.add_term({0}, Rational(1));
  one_plus_x.add_term({1}, Rational(1));
  const auto f = divide_exact(q, one_plus_x);
  if (!f) return false;
  return strictly_positive_on_unit_interval(*f);
}

bool toy_r2_member(const SparsePoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("toy_r2_member: univariate polynomial expected");
  if (p.is_zero()) return false;
  const int j = x_adic_valuation(p);
  if (j == 1) return false;
  return strictly_positive_on_unit_interval(shift_down(p, j));
}

bool toy_order_unit(const SparsePoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("toy_order_unit: univariate polynomial expected");
  return strictly_positive_on_unit_interval(p);
}

}  // namespace polyorder
