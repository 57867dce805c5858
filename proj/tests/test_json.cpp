#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyorder/fixtures.hpp"
#include "polyorder/json_io.hpp"

using namespace polyorder;

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(rational_to_json(Rational(7, 25)) == json("7/25"));
  CHECK(rational_to_json(Rational(3)) == json("3"));
  CHECK(rational_from_json(json("-6/5")) == Rational(-6, 5));
  CHECK_THROWS_AS(rational_from_json(json(3)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), std::invalid_argument);
}

TEST_CASE("polynomial round trip uses the documented shape") {
  SparsePoly p(2);
  p.add_term({0, 0}, Rational(7, 25));
  p.add_term({0, 1}, Rational(-6, 5));
  p.add_term({0, 2}, Rational(-1));
  const json j = poly_to_json(p);
  CHECK(j.at("vars") == json::array({"x", "y"}));
  CHECK(poly_from_json(j) == p);

  const json handwritten = json::parse(R"({"vars":["x","y"],
    "terms":[{"coeff":"7/25","exps":[0,0]},{"coeff":"-6/5","exps":[0,1]},{"coeff":"-1","exps":[0,2]}]})");
  CHECK(poly_from_json(handwritten) == p);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"({"vars":["x"],"terms":[{"coeff":"1","exps":[1,2]}]})")),
                  std::invalid_argument);
}

TEST_CASE("polytope round trip from both representations") {
  const auto K = fixtures::trapezoid();
  const json j = polytope_to_json(K);
  const auto from_verts = polytope_from_json(json{{"vertices", j.at("vertices")}});
  const auto from_halfs = polytope_from_json(json{{"halfspaces", j.at("halfspaces")}});
  CHECK(from_verts.vertices() == K.vertices());
  CHECK(from_halfs.vertices() == K.vertices());
  CHECK(from_verts.facet_forms() == K.facet_forms());
  CHECK_THROWS_AS(polytope_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("cone round trip keeps the polytope and the attached pair") {
  const auto cone = fixtures::disk_cone();
  const auto back = cone_from_json(cone_to_json(cone));
  CHECK(back.generators() == cone.generators());
  REQUIRE(back.zero_prop_pairs().size() == 1);
  CHECK(back.zero_prop_pairs()[0].p == cone.zero_prop_pairs()[0].p);

  const auto poly_cone = GeneratedCone::of_polytope(fixtures::unit_square());
  const auto back2 = cone_from_json(cone_to_json(poly_cone));
  REQUIRE(back2.polytope().has_value());
  CHECK(back2.generators() == poly_cone.generators());
}

TEST_CASE("certificate round trip") {
  Certificate c;
  c.terms.push_back({{0, 0, 1}, Rational(1)});
  c.terms.push_back({{1, 0, 0}, Rational(6, 5)});
  const auto back = certificate_from_json(certificate_to_json(c));
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[0].exps == std::vector<int>{0, 0, 1});
  CHECK(back.terms[1].coeff == Rational(6, 5));
  // The documented shape parses directly.
  const auto parsed = certificate_from_json(json::parse(R"({"terms":[{"exps":[0,0,1],"coeff":"1"}]})"));
  CHECK(parsed.terms.size() == 1);
}

TEST_CASE("verdict serialization carries the decision data") {
  const auto cone = fixtures::disk_cone();
  SparsePoly beta(2);
  beta.add_term({0, 0}, Rational(1, 5));
  beta.add_term({0, 1}, Rational(-1));
  const auto v = certify_membership(beta, cone, 2);
  const json j = membership_to_json(v);
  CHECK(j.at("verdict") == "refuted");
  CHECK(j.at("refutation").at("kind") == "zero_propagation");

  SparsePoly u(2);
  u.add_term({0, 0}, Rational(7, 5));
  u.add_term({0, 1}, Rational(1));
  const json ju = order_unit_to_json(is_order_unit(u, cone));
  CHECK(ju.at("verdict") == "yes");
  CHECK(ju.at("margin") == "7/5");
}

TEST_CASE("order ideal JSON caches certificates alongside the generators") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const auto ideal = OrderIdealGen::make(cone, {SparsePoly::variable(1, 0)});
  const json j = order_ideal_to_json(ideal);
  REQUIRE(j.contains("certificates"));
  const auto back = order_ideal_from_json(cone, j, SearchCaps{});
  CHECK(back.generators().size() == 1);
  CHECK(back.relative_order_unit() == ideal.relative_order_unit());
}

TEST_CASE("structure witness JSON shape") {
  const auto r = recognize_simplex_product(fixtures::unit_square());
  REQUIRE(r.is_product);
  const json j = witness_to_json(r.witness);
  CHECK(j.contains("classes"));
  CHECK(j.contains("coeffs"));
  CHECK(j.at("classes").size() == 2);
}

TEST_CASE("experiment report JSON is self-describing") {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  SparsePoly u(1), a = SparsePoly::variable(1, 0);
  u.add_term({0}, Rational(1));
  u.add_term({1}, Rational(1));
  const auto rep = run_cancellation_experiment(cone, u, a);
  const json j = experiment_report_to_json(rep);
  CHECK(j.at("conclusion") == "PASS");
  CHECK(j.contains("order_unit_check"));
  CHECK(j.contains("ua_certificate"));
  CHECK(j.contains("a_certificate"));
}
