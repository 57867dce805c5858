#include "polyorder/fixtures.hpp"

namespace polyorder {
namespace fixtures {

namespace {

QVec pt(std::initializer_list<Rational> xs) { return QVec(xs); }

}  // namespace

Polytope interval() {
  return Polytope::from_vertices({pt({Rational(0)}), pt({Rational(1)})});
}

Polytope triangle() {
  return Polytope::from_vertices({pt({0, 0}), pt({1, 0}), pt({0, 1})});
}

Polytope unit_square() {
  return Polytope::from_vertices({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

Polytope unit_cube() {
  std::vector<QVec> vs;
  for (long a = 0; a <= 1; ++a)
    for (long b = 0; b <= 1; ++b)
      for (long c = 0; c <= 1; ++c) vs.push_back(pt({Rational(a), Rational(b), Rational(c)}));
  return Polytope::from_vertices(vs);
}

Polytope trapezoid() {
  return Polytope::from_vertices({pt({0, 0}), pt({2, 0}), pt({1, 1}), pt({0, 1})});
}

Polytope square_pyramid() {
  return Polytope::from_vertices(
      {pt({-1, -1, 0}), pt({1, -1, 0}), pt({-1, 1, 0}), pt({1, 1, 0}), pt({0, 0, 1})});
}

Polytope pentagon() {
  return Polytope::from_vertices({pt({0, 0}), pt({2, 0}), pt({3, 2}), pt({1, 4}), pt({-1, 2})});
}

Polytope triangular_prism() {
  std::vector<QVec> vs;
  for (long z = 0; z <= 1; ++z) {
    vs.push_back(pt({Rational(0), Rational(0), Rational(z)}));
    vs.push_back(pt({Rational(1), Rational(0), Rational(z)}));
    vs.push_back(pt({Rational(0), Rational(1), Rational(z)}));
  }
  return Polytope::from_vertices(vs);
}

SparsePoly disk_alpha() {
  // 1 - (x + 3/5)^2 - (y + 3/5)^2 = 7/25 - 6/5 x - 6/5 y - x^2 - y^2
  SparsePoly a(2);
  a.add_term({0, 0}, Rational(7, 25));
  a.add_term({1, 0}, Rational(-6, 5));
  a.add_term({0, 1}, Rational(-6, 5));
  a.add_term({2, 0}, Rational(-1));
  a.add_term({0, 2}, Rational(-1));
  return a;
}

GeneratedCone disk_cone() {
  GeneratedCone cone(2, {SparsePoly::variable(2, 0), SparsePoly::variable(2, 1), disk_alpha()});
  cone.attach_zero_prop_pair({Rational(0), Rational(1, 5)}, {Rational(0), Rational(-7, 5)});
  return cone;
}

}  // namespace fixtures
}  // namespace polyorder
