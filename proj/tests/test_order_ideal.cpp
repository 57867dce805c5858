#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polyorder/fixtures.hpp"
#include "polyorder/linalg.hpp"
#include "polyorder/order_ideal.hpp"

using namespace polyorder;

namespace {

SparsePoly uni(std::initializer_list<std::pair<int, Rational>> terms) {
  SparsePoly p(1);
  for (const auto& [e, c] : terms) p.add_term({e}, c);
  return p;
}

int facet_index(const Polytope& K, const LinearForm& f) {
  const LinearForm t = f.normalized();
  for (int i = 0; i < K.facet_count(); ++i)
    if (K.facet_forms()[i] == t) return i;
  REQUIRE(false);
  return -1;
}

int vertex_index(const Polytope& K, const QVec& v) {
  for (size_t i = 0; i < K.vertices().size(); ++i)
    if (K.vertices()[i] == v) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

LinearForm lf(Rational c, QVec a) { return LinearForm(std::move(c), std::move(a)); }

}  // namespace

TEST_CASE("x^2 lies in the order ideal generated by x over [0,1]") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const auto ideal = OrderIdealGen::make(cone, {SparsePoly::variable(1, 0)});
  const auto r = uni({{2, Rational(1)}});
  const auto res = in_order_ideal(r, ideal, 8, 4);
  REQUIRE(res.member);
  CHECK(res.M == 1);
  // Both bounding certificates re-verify.
  const SparsePoly s = ideal.relative_order_unit();
  CHECK(verify_certificate(s.scaled(Rational(res.M)) - r, res.cert_minus, cone));
  CHECK(verify_certificate(s.scaled(Rational(res.M)) + r, res.cert_plus, cone));
  // And -M*s <= r <= M*s holds at sampled admissible points.
  scan_admissible_points(cone, SearchCaps{}, 16, [&](const QVec& pt) {
    const Rational rv = r.evaluate(pt), sv = s.evaluate(pt) * Rational(res.M);
    CHECK(rv <= sv);
    CHECK(-sv <= rv);
    return true;
  });
}

TEST_CASE("x never enters the order ideal generated by x^2; every M is refuted") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const auto ideal = OrderIdealGen::make(cone, {uni({{2, Rational(1)}})});
  SearchCaps caps;
  caps.refute_denom_cap = 256;  // reach the witness x = 1/(2M) for M up to 64
  const auto res = in_order_ideal(SparsePoly::variable(1, 0), ideal, 64, 4, caps);
  CHECK_FALSE(res.member);
  // M*x^2 - x is negative at x = 1/(2M), an admissible point, for every M.
  CHECK(res.refuted_at.size() == 7);  // M = 1, 2, 4, ..., 64
  int expected_m = 1;
  for (const auto& [m, ref] : res.refuted_at) {
    CHECK(m == expected_m);
    expected_m *= 2;
    CHECK(ref.kind == RefutationKind::NegativeValue);
    const SparsePoly probe = uni({{2, Rational(m)}, {1, Rational(-1)}});
    CHECK(probe.evaluate(ref.point) == ref.value);
    CHECK(ref.value.sign() < 0);
  }
}

TEST_CASE("r = 0 is a member at M = 1") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const auto ideal = OrderIdealGen::make(cone, {SparsePoly::variable(1, 0)});
  const auto res = in_order_ideal(SparsePoly(1), ideal, 4, 3);
  REQUIRE(res.member);
  CHECK(res.M == 1);
}

TEST_CASE("order ideal generators must certify in the ambient cone") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  CHECK_THROWS_AS(OrderIdealGen::make(cone, {uni({{1, Rational(-1)}})}), std::invalid_argument);
}

TEST_CASE("face ideal of a square corner") {
  const auto K = fixtures::unit_square();
  const Face corner = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});
  const auto fi = face_ideal_generators(K, corner);
  REQUIRE(fi.generators.size() == 2);
  CHECK(fi.order_unit == lf(Rational(0), {Rational(1), Rational(1)}));  // x + y
}

TEST_CASE("face ideal of the pyramid apex") {
  const auto K = fixtures::square_pyramid();
  const Face apex = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0), Rational(1)})});
  const auto fi = face_ideal_generators(K, apex);
  CHECK(fi.generators.size() == 4);
  CHECK(fi.order_unit == lf(Rational(4), {Rational(0), Rational(0), Rational(-4)}));
}

TEST_CASE("face ideal of a whole triangle edge") {
  const auto K = fixtures::triangle();
  std::vector<int> edge;
  for (size_t v = 0; v < K.vertices().size(); ++v)
    if (K.vertices()[v][0].is_zero()) edge.push_back(static_cast<int>(v));
  const auto fi = face_ideal_generators(K, K.face_from_vertices(edge));
  REQUIRE(fi.generators.size() == 1);
  CHECK(fi.order_unit == lf(Rational(0), {Rational(1), Rational(0)}));  // x
}

TEST_CASE("face ideal sum vanishes exactly on the face") {
  for (const auto& K : {fixtures::unit_square(), fixtures::square_pyramid(), fixtures::unit_cube()}) {
    for (size_t v = 0; v < K.vertices().size(); ++v) {
      const Face face = K.face_from_vertices({static_cast<int>(v)});
      const auto fi = face_ideal_generators(K, face);
      for (size_t w = 0; w < K.vertices().size(); ++w) {
        const int sgn = fi.order_unit.eval(K.vertices()[w]).sign();
        CHECK(sgn == (w == v ? 0 : 1));
      }
    }
  }
}

TEST_CASE("proper-face precondition") {
  const auto K = fixtures::unit_square();
  std::vector<int> all{0, 1, 2, 3};
  CHECK_THROWS_AS(face_ideal_generators(K, K.face_from_vertices(all)), std::invalid_argument);
}

TEST_CASE("dominate_linear on the trapezoid: M = 1") {
  const auto K = fixtures::trapezoid();
  const Face origin = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});
  const auto res = dominate_linear(K, origin, lf(Rational(0), {Rational(1), Rational(1)}),
                                   lf(Rational(0), {Rational(1), Rational(0)}));
  CHECK(res.M == 1);
}

TEST_CASE("dominate_linear on the square: least M is 3 with a Farkas certificate at 2") {
  const auto K = fixtures::unit_square();
  const Face origin = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});
  const LinearForm beta = lf(Rational(0), {Rational(1), Rational(1)});
  const LinearForm gamma = lf(Rational(0), {Rational(3), Rational(2)});
  const auto res = dominate_linear(K, origin, beta, gamma);
  CHECK(res.M == 3);
  REQUIRE(res.farkas_prev.has_value());
  CHECK_FALSE(res.farkas_prev->empty());
  // Independent re-check: 2*beta - gamma is not a nonnegative combination,
  // while 3*beta - gamma is.
  CHECK_FALSE(linear_in_cone(K, beta.scaled(Rational(2)) - gamma).has_value());
  const auto combo = linear_in_cone(K, beta.scaled(Rational(3)) - gamma);
  REQUIRE(combo.has_value());
}

TEST_CASE("dominate_linear with gamma = 0 returns M = 1") {
  const auto K = fixtures::unit_square();
  const Face origin = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});
  const auto res = dominate_linear(K, origin, lf(Rational(0), {Rational(1), Rational(1)}),
                                   lf(Rational(0), {Rational(0), Rational(0)}));
  CHECK(res.M == 1);
}

TEST_CASE("dominate_linear names the violated precondition") {
  const auto K = fixtures::unit_square();
  const Face origin = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});
  // gamma not vanishing on G.
  CHECK_THROWS_WITH_AS(dominate_linear(K, origin, lf(Rational(0), {Rational(1), Rational(1)}),
                                       lf(Rational(1), {Rational(0), Rational(0)})),
                       doctest::Contains("gamma does not vanish on G"), std::invalid_argument);
  // beta not in the cone.
  CHECK_THROWS_WITH_AS(dominate_linear(K, origin, lf(Rational(0), {Rational(-1), Rational(-1)}),
                                       lf(Rational(0), {Rational(0), Rational(0)})),
                       doctest::Contains("beta is not a nonnegative combination"), std::invalid_argument);
  // beta vanishing on more than G.
  CHECK_THROWS_WITH_AS(dominate_linear(K, origin, lf(Rational(0), {Rational(1), Rational(0)}),
                                       lf(Rational(0), {Rational(0), Rational(0)})),
                       doctest::Contains("does not vanish exactly on G"), std::invalid_argument);
}

TEST_CASE("facet_decompose on the square is exact") {
  const auto K = fixtures::unit_square();
  const Face origin = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});

  auto dec = facet_decompose(K, origin, lf(Rational(0), {Rational(1), Rational(1)}));
  REQUIRE(dec.coefficients.size() == 2);
  for (const auto& c : dec.coefficients) CHECK(c == Rational(1));

  dec = facet_decompose(K, origin, lf(Rational(0), {Rational(2), Rational(3)}));
  // Coefficients follow the facet order {x, y}.
  std::vector<Rational> got;
  for (size_t i = 0; i < dec.facet_indices.size(); ++i) got.push_back(dec.coefficients[i]);
  const int fx = facet_index(K, lf(Rational(0), {Rational(1), Rational(0)}));
  REQUIRE(dec.facet_indices.size() == 2);
  for (size_t i = 0; i < dec.facet_indices.size(); ++i)
    CHECK(dec.coefficients[i] == (dec.facet_indices[i] == fx ? Rational(2) : Rational(3)));
}

TEST_CASE("facet_decompose on the pyramid apex gives 1/2 on each slanted facet") {
  const auto K = fixtures::square_pyramid();
  const Face apex = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0), Rational(1)})});
  const auto dec = facet_decompose(K, apex, lf(Rational(2), {Rational(0), Rational(0), Rational(-2)}));
  REQUIRE(dec.coefficients.size() == 4);
  for (const auto& c : dec.coefficients) CHECK(c == Rational(1, 2));

  // Recomposition is exact.
  LinearForm sum(Rational(0), QVec(3, Rational(0)));
  for (size_t i = 0; i < dec.facet_indices.size(); ++i)
    sum = sum + K.facet_forms()[dec.facet_indices[i]].scaled(dec.coefficients[i]);
  CHECK(sum == lf(Rational(2), {Rational(0), Rational(0), Rational(-2)}));
}

TEST_CASE("facet_decompose stays strictly positive when the minimal-sum face degenerates") {
  // Irregular-base pyramid: the dependency among the four apex facets has a
  // nonzero coefficient sum, so minimizing the sum slides to a boundary
  // solution and the max-margin selection must take over.
  const auto K = Polytope::from_vertices({{Rational(0), Rational(0), Rational(0)},
                                          {Rational(4), Rational(0), Rational(0)},
                                          {Rational(5), Rational(3), Rational(0)},
                                          {Rational(0), Rational(2), Rational(0)},
                                          {Rational(1), Rational(1), Rational(2)}});
  const Face apex = K.face_from_vertices({vertex_index(K, {Rational(1), Rational(1), Rational(2)})});
  REQUIRE(apex.facets.size() == 4);

  LinearForm beta = K.facet_forms()[apex.facets[0]].scaled(Rational(2));
  for (size_t j = 1; j < apex.facets.size(); ++j) beta = beta + K.facet_forms()[apex.facets[j]];

  const auto dec = facet_decompose(K, apex, beta);
  REQUIRE(dec.coefficients.size() == 4);
  LinearForm sum(Rational(0), QVec(3, Rational(0)));
  Rational result_min;
  for (size_t i = 0; i < 4; ++i) {
    CHECK(dec.coefficients[i].sign() > 0);
    sum = sum + K.facet_forms()[dec.facet_indices[i]].scaled(dec.coefficients[i]);
    if (i == 0 || dec.coefficients[i] < result_min) result_min = dec.coefficients[i];
  }
  CHECK(sum == beta);

  // Oracle: walk the one-dimensional solution family and confirm no sampled
  // solution beats the returned margin.
  QMat A(4, QVec(4));
  QVec b(4);
  for (size_t j = 0; j < 4; ++j) {
    const auto& form = K.facet_forms()[apex.facets[j]];
    A[0][j] = form.constant;
    for (int i = 0; i < 3; ++i) A[i + 1][j] = form.coeffs[i];
  }
  b[0] = beta.constant;
  for (int i = 0; i < 3; ++i) b[i + 1] = beta.coeffs[i];
  const auto family = linear_solve(A, b);
  REQUIRE(family.consistent);
  REQUIRE(family.nullspace.size() == 1);
  for (long num = -64; num <= 64; ++num) {
    const Rational t(num, 16);
    Rational sample_min;
    bool first = true, nonneg = true;
    for (size_t i = 0; i < 4; ++i) {
      const Rational a = family.particular[i] + t * family.nullspace[0][i];
      if (a.sign() < 0) { nonneg = false; break; }
      if (first || a < sample_min) sample_min = a;
      first = false;
    }
    if (nonneg) CHECK(sample_min <= result_min);
  }

  // Deterministic: same input, same coefficients.
  const auto again = facet_decompose(K, apex, beta);
  CHECK(again.coefficients == dec.coefficients);
}

TEST_CASE("facet_decompose rejects a form vanishing beyond the face") {
  const auto K = fixtures::unit_square();
  const Face origin = K.face_from_vertices({vertex_index(K, {Rational(0), Rational(0)})});
  CHECK_THROWS_AS(facet_decompose(K, origin, lf(Rational(0), {Rational(1), Rational(0)})),
                  std::invalid_argument);
}

TEST_CASE("zero_faces on the square") {
  const auto K = fixtures::unit_square();
  const int fx = facet_index(K, lf(Rational(0), {Rational(1), Rational(0)}));
  const int fy = facet_index(K, lf(Rational(0), {Rational(0), Rational(1)}));
  const int fy1 = facet_index(K, lf(Rational(1), {Rational(0), Rational(-1)}));

  std::vector<int> w_xy(K.facet_count(), 0);
  w_xy[fx] = 1;
  w_xy[fy] = 1;

  SUBCASE("single generator x*y: the union of two edges") {
    const auto zf = zero_faces(K, {w_xy});
    REQUIRE(zf.faces.size() == 2);
    for (const auto& f : zf.faces) CHECK(f.dim == 1);
    CHECK(zf.flats.size() == 2);
  }

  SUBCASE("generators {x*y, x*(1-y)}: collapses to the edge x = 0") {
    std::vector<int> w_xy1(K.facet_count(), 0);
    w_xy1[fx] = 1;
    w_xy1[fy1] = 1;
    const auto zf = zero_faces(K, {w_xy, w_xy1});
    REQUIRE(zf.faces.size() == 1);
    CHECK(zf.faces[0].dim == 1);
    CHECK(zf.faces[0].facets == std::vector<int>{fx});
    REQUIRE(zf.flats.size() == 1);
    CHECK(zf.flats[0].dim() == 1);
    // The flat is the line x = 0.
    CHECK(zf.flats[0].contains_point(QVec{Rational(0), Rational(7)}));
  }
}

TEST_CASE("zero_faces on the trapezoid: empty in K, a point outside") {
  const auto K = fixtures::trapezoid();
  const int fx = facet_index(K, lf(Rational(0), {Rational(1), Rational(0)}));
  const int fs = facet_index(K, lf(Rational(2), {Rational(-1), Rational(-1)}));
  std::vector<int> wx(K.facet_count(), 0), ws(K.facet_count(), 0);
  wx[fx] = 1;
  ws[fs] = 1;
  const auto zf = zero_faces(K, {wx, ws});
  CHECK(zf.faces.empty());
  REQUIRE(zf.flats.size() == 1);
  CHECK(zf.flats[0].dim() == 0);
  CHECK(zf.flats[0].point == QVec{Rational(0), Rational(2)});
  CHECK_FALSE(K.contains(zf.flats[0].point));
}

TEST_CASE("zero-set density holds for face ideals and fails for the trapezoid pair") {
  // For the face ideal of a vertex (generators = incident facet forms as
  // degree-1 monomials), the affine spans of the faces are exactly the flats.
  for (const auto& K : {fixtures::unit_square(), fixtures::unit_cube(), fixtures::square_pyramid()}) {
    for (size_t v = 0; v < K.vertices().size(); ++v) {
      const Face face = K.face_from_vertices({static_cast<int>(v)});
      std::vector<std::vector<int>> gens;
      for (int f : face.facets) {
        std::vector<int> w(K.facet_count(), 0);
        w[f] = 1;
        gens.push_back(w);
      }
      const auto zf = zero_faces(K, gens);
      REQUIRE(zf.faces.size() == 1);
      REQUIRE(zf.flats.size() == 1);
      CHECK(zf.flats[0].contains(zf.faces[0].affine_hull));
      CHECK(zf.faces[0].affine_hull.contains(zf.flats[0]));
    }
  }
  // Trapezoid: Z meets K nowhere, so the span of Z-in-K (empty) differs from Z.
  const auto K = fixtures::trapezoid();
  const int fx = facet_index(K, lf(Rational(0), {Rational(1), Rational(0)}));
  const int fs = facet_index(K, lf(Rational(2), {Rational(-1), Rational(-1)}));
  std::vector<int> wx(K.facet_count(), 0), ws(K.facet_count(), 0);
  wx[fx] = 1;
  ws[fs] = 1;
  const auto zf = zero_faces(K, {wx, ws});
  CHECK(zf.faces.empty());
  CHECK_FALSE(zf.flats.empty());
}

TEST_CASE("order-unit positivity pipeline succeeds on [0,1] with u = 1 + x, a = x") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const SparsePoly u = uni({{0, Rational(1)}, {1, Rational(1)}});
  const auto res = positivity_pipeline(u, SparsePoly::variable(1, 0), cone);
  REQUIRE(res.positive);
  CHECK(verify_certificate(SparsePoly::variable(1, 0), res.cert, cone));
  REQUIRE(res.ideal_check.has_value());
  CHECK(res.ideal_check->member);
  CHECK(res.ideal_check->M == 1);
}

TEST_CASE("pipeline stalls at ideal membership for the disk counter-example") {
  const auto cone = fixtures::disk_cone();
  SparsePoly u(2), beta(2);
  u.add_term({0, 0}, Rational(7, 5));
  u.add_term({0, 1}, Rational(1));
  beta.add_term({0, 0}, Rational(1, 5));
  beta.add_term({0, 1}, Rational(-1));
  SearchCaps caps;
  caps.max_degree = 3;
  caps.max_m = 8;
  const auto res = positivity_pipeline(u, beta, cone, caps);
  CHECK_FALSE(res.positive);
  CHECK(res.ua_check.member());  // stage 2 succeeds via the product identity
  CHECK(res.stalled == PositivityPipelineResult::Stage::IdealMembership);
}

TEST_CASE("a = 0 is positive with the empty certificate") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const auto res = positivity_pipeline(uni({{0, Rational(1)}, {1, Rational(1)}}), SparsePoly(1), cone);
  CHECK(res.positive);
  CHECK(res.cert.empty());
}

TEST_CASE("pipeline requires a confirmed order unit") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  CHECK_THROWS_AS(positivity_pipeline(SparsePoly::variable(1, 0), SparsePoly::variable(1, 0), cone),
                  std::invalid_argument);
}
