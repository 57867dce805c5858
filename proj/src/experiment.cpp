#include "polyorder/experiment.hpp"

#include <chrono>
#include <sstream>

#include "polyorder/fixtures.hpp"
#include "polyorder/structure.hpp"

namespace polyorder {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SparsePoly uni(std::initializer_list<std::pair<int, Rational>> terms) {
  SparsePoly p(1);
  for (const auto& [e, c] : terms) p.add_term({e}, c);
  return p;
}

int find_facet(const Polytope& K, const LinearForm& form) {
  const LinearForm target = form.normalized();
  for (int i = 0; i < K.facet_count(); ++i)
    if (K.facet_forms()[i] == target) return i;
  throw std::invalid_argument("find_facet: " + form.str() + " is not a facet form");
}

int find_vertex(const Polytope& K, const QVec& v) {
  for (size_t i = 0; i < K.vertices().size(); ++i)
    if (K.vertices()[i] == v) return static_cast<int>(i);
  throw std::invalid_argument("find_vertex: not a vertex");
}

LinearForm lf(Rational c, QVec a) { return LinearForm(std::move(c), std::move(a)); }

}  // namespace

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::Pass: return "PASS";
    case Conclusion::FailRefuted: return "FAIL_REFUTED";
    case Conclusion::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

ExperimentReport run_cancellation_experiment(const GeneratedCone& cone, const SparsePoly& u, const SparsePoly& a,
                                             const SearchCaps& caps) {
  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.setting = cone.str();
  rep.u_repr = u.str();
  rep.a_repr = a.str();
  rep.caps = caps;

  rep.u_check = is_order_unit(u, cone, caps);
  if (!rep.u_check->yes()) {
    rep.error = rep.u_check->no() ? "u is not an order unit (admissible witness with u <= 0 found)"
                                  : "u could not be confirmed an order unit within the caps";
    rep.conclusion = Conclusion::Inconclusive;
    rep.wall_seconds = seconds_since(t0);
    return rep;
  }

  rep.ua_check = certify_membership(u * a, cone, caps.max_degree, caps);
  if (!rep.ua_check->member()) {
    // The cancellation premise u*a >= 0 was not established; nothing to test.
    rep.conclusion = Conclusion::Inconclusive;
    rep.wall_seconds = seconds_since(t0);
    return rep;
  }

  rep.a_check = certify_membership(a, cone, caps.max_degree, caps);
  if (rep.a_check->member()) {
    rep.conclusion = Conclusion::Pass;
  } else if (rep.a_check->refuted()) {
    rep.conclusion = Conclusion::FailRefuted;
  } else {
    rep.pipeline = positivity_pipeline(u, a, cone, caps);
    rep.conclusion = rep.pipeline->positive ? Conclusion::Pass : Conclusion::Inconclusive;
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport run_cancellation_experiment(ToyRing ring, const SparsePoly& u, const SparsePoly& a) {
  const auto t0 = Clock::now();
  const bool r1 = ring == ToyRing::R1;
  ExperimentReport rep;
  rep.setting = r1 ? "toy-r1" : "toy-r2";
  rep.u_repr = u.str();
  rep.a_repr = a.str();

  rep.toy_u_order_unit = toy_order_unit(u);
  if (!*rep.toy_u_order_unit) {
    rep.error = "u is not an order unit of the toy ring";
    rep.conclusion = Conclusion::Inconclusive;
    rep.wall_seconds = seconds_since(t0);
    return rep;
  }
  const SparsePoly ua = u * a;
  rep.toy_ua_member = r1 ? toy_r1_member(ua) : toy_r2_member(ua);
  if (!*rep.toy_ua_member) {
    rep.conclusion = Conclusion::Inconclusive;
    rep.wall_seconds = seconds_since(t0);
    return rep;
  }
  rep.toy_a_member = r1 ? toy_r1_member(a) : toy_r2_member(a);
  // Toy membership is an exact decision, so a negative here is a sound
  // refutation, not a search failure.
  rep.conclusion = *rep.toy_a_member ? Conclusion::Pass : Conclusion::FailRefuted;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

std::vector<std::string> gallery_names() {
  return {"toy-r1", "toy-r2", "disk", "trapezoid", "pyramid", "square-structure", "triangle-structure"};
}

namespace {

void check(GalleryResult& res, const std::string& name, bool pass, const std::string& detail = "") {
  res.checks.push_back(GalleryCheck{name, pass, detail});
}

GalleryResult gallery_toy_r1() {
  GalleryResult res;
  res.case_name = "toy-r1";
  const SparsePoly x = uni({{1, Rational(1)}});
  const SparsePoly one_plus_x = uni({{0, Rational(1)}, {1, Rational(1)}});
  check(res, "x(1+x) in R1+", toy_r1_member(x * one_plus_x));
  check(res, "1+x is an order unit", toy_order_unit(one_plus_x));
  check(res, "x not in R1+", !toy_r1_member(x));
  const auto rep = run_cancellation_experiment(ToyRing::R1, one_plus_x, x);
  check(res, "cancellation fails: u=1+x, a=x refuted", rep.conclusion == Conclusion::FailRefuted,
        conclusion_name(rep.conclusion));
  return res;
}

GalleryResult gallery_toy_r2(const SearchCaps& caps) {
  GalleryResult res;
  res.case_name = "toy-r2";
  const SparsePoly x = uni({{1, Rational(1)}});
  check(res, "x^2 in R2+", toy_r2_member(x * x));
  check(res, "x not in R2+", !toy_r2_member(x));
  check(res, "x^3(2-x) in R2+", toy_r2_member(x.pow(3) * uni({{0, Rational(2)}, {1, Rational(-1)}})));
  bool all_rejected = true;
  int bad_m = 0;
  for (int M = 1; M <= caps.max_m; ++M) {
    const SparsePoly f = uni({{2, Rational(M)}, {1, Rational(-1)}});  // M x^2 - x
    if (toy_r2_member(f)) {
      all_rejected = false;
      bad_m = M;
      break;
    }
  }
  check(res, "M*x^2 - x not in R2+ for all M <= " + std::to_string(caps.max_m), all_rejected,
        all_rejected ? "" : "accepted at M = " + std::to_string(bad_m));
  return res;
}

GalleryResult gallery_disk(const SearchCaps& caps) {
  GalleryResult res;
  res.case_name = "disk";
  const auto cone = fixtures::disk_cone();
  const SparsePoly alpha = fixtures::disk_alpha();
  SparsePoly beta(2);  // 1/5 - y
  beta.add_term({0, 0}, Rational(1, 5));
  beta.add_term({0, 1}, Rational(-1));
  SparsePoly u(2);  // y + 7/5
  u.add_term({0, 0}, Rational(7, 5));
  u.add_term({0, 1}, Rational(1));

  SparsePoly expected = alpha;  // alpha + x^2 + 6/5 x
  expected.add_term({2, 0}, Rational(1));
  expected.add_term({1, 0}, Rational(6, 5));
  check(res, "(1/5 - y)(y + 7/5) = alpha + x^2 + 6/5 x", beta * u == expected);

  const auto uv = is_order_unit(u, cone, caps);
  check(res, "u = y + 7/5 is an order unit with margin 7/5",
        uv.yes() && uv.margin == Rational(7, 5), uv.yes() ? "margin " + uv.margin.str() : "not Yes");

  const auto uav = certify_membership(u * beta, cone, 2, caps);
  check(res, "u*beta certified at degree <= 2",
        uav.member() && verify_certificate(u * beta, uav.cert, cone) && uav.degree <= 2);

  const auto bv = certify_membership(beta, cone, caps.max_degree, caps);
  const bool zp = bv.refuted() && bv.refutation->kind == RefutationKind::ZeroPropagation;
  check(res, "beta = 1/5 - y refuted by zero propagation", zp,
        bv.refuted() ? bv.refutation->describe() : "not refuted");

  const auto bu = is_order_unit(beta, cone, caps);
  check(res, "beta is not an order unit (witness (0, 1/5))",
        bu.no() && bu.witness == QVec{Rational(0), Rational(1, 5)});
  return res;
}

GalleryResult gallery_trapezoid(const SearchCaps& caps) {
  GalleryResult res;
  res.case_name = "trapezoid";
  const auto K = fixtures::trapezoid();

  const int fx = find_facet(K, lf(Rational(0), {Rational(1), Rational(0)}));
  const int fy = find_facet(K, lf(Rational(0), {Rational(0), Rational(1)}));
  const int fy1 = find_facet(K, lf(Rational(1), {Rational(0), Rational(-1)}));
  const int fslant = find_facet(K, lf(Rational(2), {Rational(-1), Rational(-1)}));
  check(res, "facet forms are {x, y, 1-y, 2-x-y}", K.facet_count() == 4 && fx >= 0 && fy >= 0 && fy1 >= 0,
        "");

  const auto q = K.face_of({fx, fslant});
  const QVec meet{Rational(0), Rational(2)};
  check(res, "F_x and F_{2-x-y} have empty intersection in K", !q.face.has_value());
  check(res, "their affine hulls meet at the single point (0, 2) outside K",
        !q.hyperplane_intersection.empty && q.hyperplane_intersection.dim() == 0 &&
            q.hyperplane_intersection.point == meet && !K.contains(meet));

  std::vector<int> wx(K.facet_count(), 0), ws(K.facet_count(), 0);
  wx[fx] = 1;
  ws[fslant] = 1;
  const auto zf = zero_faces(K, {wx, ws});
  check(res, "zero set of ({beta_x, beta_slant}) misses K but is the point (0, 2)",
        zf.faces.empty() && zf.flats.size() == 1 && zf.flats[0].dim() == 0 && zf.flats[0].point == meet);

  const auto st = recognize_simplex_product(K);
  check(res, "trapezoid is not a product of simplices", !st.is_product, st.reason);
  (void)caps;
  return res;
}

GalleryResult gallery_pyramid(const SearchCaps& caps) {
  GalleryResult res;
  res.case_name = "pyramid";
  const auto K = fixtures::square_pyramid();

  const int apex = find_vertex(K, {Rational(0), Rational(0), Rational(1)});
  const Face apex_face = K.face_from_vertices({apex});

  const int s1 = find_facet(K, lf(Rational(1), {Rational(-1), Rational(0), Rational(-1)}));  // 1-x-z
  const int s2 = find_facet(K, lf(Rational(1), {Rational(1), Rational(0), Rational(-1)}));   // 1+x-z
  const int s3 = find_facet(K, lf(Rational(1), {Rational(0), Rational(-1), Rational(-1)}));  // 1-y-z
  const int s4 = find_facet(K, lf(Rational(1), {Rational(0), Rational(1), Rational(-1)}));   // 1+y-z
  std::vector<int> slanted{s1, s2, s3, s4};
  std::sort(slanted.begin(), slanted.end());
  check(res, "apex lies on exactly the four slanted facets", K.facets_containing(apex_face) == slanted);

  const auto ideal = face_ideal_generators(K, apex_face);
  const LinearForm sum_expected(Rational(4), {Rational(0), Rational(0), Rational(-4)});
  check(res, "face ideal of the apex has relative order unit 4 - 4z", ideal.order_unit == sum_expected);

  const LinearForm beta(Rational(2), {Rational(0), Rational(0), Rational(-2)});  // 2 - 2z
  const auto dec = facet_decompose(K, apex_face, beta);
  bool halves = dec.coefficients.size() == 4;
  for (const auto& c : dec.coefficients) halves = halves && c == Rational(1, 2);
  check(res, "2 - 2z decomposes with coefficient 1/2 on each slanted facet", halves);

  const auto q = K.face_of({s1, s2});
  check(res, "two opposite slanted facets meet K in the apex alone",
        q.face.has_value() && q.face->vertices == std::vector<int>{apex});
  check(res, "their affine hulls meet in a line", q.hyperplane_intersection.dim() == 1);

  const auto sv = simple_vertex_check(K);
  check(res, "the apex breaks simplicity (4 facets in dimension 3)",
        !sv.simple && sv.offending == std::vector<int>{apex});
  (void)caps;
  return res;
}

GalleryResult gallery_square_structure() {
  GalleryResult res;
  res.case_name = "square-structure";
  const auto K = fixtures::unit_square();
  const auto st = recognize_simplex_product(K);
  check(res, "unit square recognized as a product of simplices", st.is_product, st.reason);
  if (st.is_product) {
    bool shape = st.witness.classes.size() == 2;
    for (const auto& cls : st.witness.classes) shape = shape && cls.size() == 2;
    check(res, "witness has two classes of two facets", shape);
    bool recompose = true;
    for (size_t c = 0; c < st.witness.classes.size() && recompose; ++c) {
      LinearForm sum(Rational(0), QVec(K.dim(), Rational(0)));
      for (size_t j = 0; j < st.witness.classes[c].size(); ++j)
        sum = sum + K.facet_forms()[st.witness.classes[c][j]].scaled(st.witness.coefficients[c][j]);
      recompose = sum == LinearForm(Rational(1), QVec(K.dim(), Rational(0)));
    }
    check(res, "each class combination is exactly the constant 1", recompose);
  }
  return res;
}

GalleryResult gallery_triangle_structure() {
  GalleryResult res;
  res.case_name = "triangle-structure";
  const auto K = fixtures::triangle();
  const auto st = recognize_simplex_product(K);
  check(res, "triangle recognized (a simplex is the one-factor product)", st.is_product, st.reason);
  if (st.is_product) {
    check(res, "single class of all three facets with coefficients (1,1,1)",
          st.witness.classes.size() == 1 && st.witness.coefficients[0] == QVec(3, Rational(1)));
  }
  return res;
}

}  // namespace

GalleryResult run_gallery_case(const std::string& name, const SearchCaps& caps) {
  GalleryResult res;
  if (name == "toy-r1")
    res = gallery_toy_r1();
  else if (name == "toy-r2")
    res = gallery_toy_r2(caps);
  else if (name == "disk")
    res = gallery_disk(caps);
  else if (name == "trapezoid")
    res = gallery_trapezoid(caps);
  else if (name == "pyramid")
    res = gallery_pyramid(caps);
  else if (name == "square-structure")
    res = gallery_square_structure();
  else if (name == "triangle-structure")
    res = gallery_triangle_structure();
  else
    throw std::invalid_argument("unknown gallery case '" + name + "'");
  res.all_pass = true;
  for (const auto& c : res.checks) res.all_pass = res.all_pass && c.pass;
  return res;
}

}  // namespace polyorder
