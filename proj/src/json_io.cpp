#include "polyorder/json_io.hpp"

namespace polyorder {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational: expected a string like \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

json vec_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

QVec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected an array of rationals");
  QVec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

json linear_form_to_json(const LinearForm& f) {
  return json{{"const", rational_to_json(f.constant)}, {"coeffs", vec_to_json(f.coeffs)}};
}

LinearForm linear_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("const") || !j.contains("coeffs"))
    throw std::invalid_argument("linear form: expected {\"const\", \"coeffs\"}");
  return LinearForm(rational_from_json(j.at("const")), vec_from_json(j.at("coeffs")));
}

json poly_to_json(const SparsePoly& p) {
  json vars = json::array();
  for (int i = 0; i < p.nvars(); ++i) vars.push_back(SparsePoly::var_name(p.nvars(), i));
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"coeff", rational_to_json(c)}, {"exps", e}});
  return json{{"vars", vars}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial: expected {\"vars\", \"terms\"}");
  const int n = static_cast<int>(j.at("vars").size());
  SparsePoly p(n);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exps").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != n)
      throw std::invalid_argument("polynomial: exponent vector does not match \"vars\"");
    p.add_term(exps, rational_from_json(t.at("coeff")));
  }
  return p;
}

json polytope_to_json(const Polytope& K) {
  json verts = json::array();
  for (const auto& v : K.vertices()) verts.push_back(vec_to_json(v));
  json forms = json::array();
  for (const auto& f : K.facet_forms()) forms.push_back(linear_form_to_json(f));
  return json{{"vertices", verts}, {"halfspaces", forms}};
}

Polytope polytope_from_json(const json& j) {
  if (j.contains("vertices")) {
    std::vector<QVec> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vec_from_json(v));
    return Polytope::from_vertices(pts);
  }
  if (j.contains("halfspaces")) {
    std::vector<LinearForm> forms;
    for (const auto& f : j.at("halfspaces")) forms.push_back(linear_form_from_json(f));
    return Polytope::from_halfspaces(forms);
  }
  throw std::invalid_argument("polytope: expected \"vertices\" or \"halfspaces\"");
}

json cone_to_json(const GeneratedCone& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) gens.push_back(poly_to_json(g));
  json out{{"generators", gens}};
  if (c.polytope()) out["polytope"] = polytope_to_json(*c.polytope());
  if (!c.zero_prop_pairs().empty()) {
    json pairs = json::array();
    for (const auto& pr : c.zero_prop_pairs())
      pairs.push_back(json{{"p", vec_to_json(pr.p)}, {"q", vec_to_json(pr.q)}});
    out["zero_prop_pairs"] = pairs;
  }
  return out;
}

GeneratedCone cone_from_json(const json& j) {
  if (j.contains("polytope") && !j.contains("generators")) {
    GeneratedCone cone = GeneratedCone::of_polytope(polytope_from_json(j.at("polytope")));
    if (j.contains("zero_prop_pairs"))
      for (const auto& pr : j.at("zero_prop_pairs"))
        cone.attach_zero_prop_pair(vec_from_json(pr.at("p")), vec_from_json(pr.at("q")));
    return cone;
  }
  if (!j.contains("generators")) throw std::invalid_argument("cone: expected \"generators\" or \"polytope\"");
  std::vector<SparsePoly> gens;
  for (const auto& g : j.at("generators")) gens.push_back(poly_from_json(g));
  if (gens.empty()) throw std::invalid_argument("cone: no generators");
  if (j.contains("polytope")) {
    GeneratedCone cone = GeneratedCone::of_polytope(polytope_from_json(j.at("polytope")));
    if (cone.generators() != gens)
      throw std::invalid_argument("cone: generators do not match the polytope facet forms");
    if (j.contains("zero_prop_pairs"))
      for (const auto& pr : j.at("zero_prop_pairs"))
        cone.attach_zero_prop_pair(vec_from_json(pr.at("p")), vec_from_json(pr.at("q")));
    return cone;
  }
  GeneratedCone cone(gens[0].nvars(), gens);
  if (j.contains("zero_prop_pairs"))
    for (const auto& pr : j.at("zero_prop_pairs"))
      cone.attach_zero_prop_pair(vec_from_json(pr.at("p")), vec_from_json(pr.at("q")));
  return cone;
}

json certificate_to_json(const Certificate& c) {
  json terms = json::array();
  for (const auto& t : c.terms)
    terms.push_back(json{{"exps", t.exps}, {"coeff", rational_to_json(t.coeff)}});
  return json{{"terms", terms}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  if (!j.is_object() || !j.contains("terms")) throw std::invalid_argument("certificate: expected {\"terms\"}");
  for (const auto& t : j.at("terms"))
    c.terms.push_back({t.at("exps").get<std::vector<int>>(), rational_from_json(t.at("coeff"))});
  return c;
}

json order_ideal_to_json(const OrderIdealGen& ideal) {
  json gens = json::array(), certs = json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back(poly_to_json(g.poly));
    certs.push_back(certificate_to_json(g.cert));
  }
  return json{{"generators", gens}, {"certificates", certs}};
}

OrderIdealGen order_ideal_from_json(const GeneratedCone& cone, const json& j, const SearchCaps& caps) {
  if (!j.is_object() || !j.contains("generators"))
    throw std::invalid_argument("order ideal: expected {\"generators\"}");
  std::vector<SparsePoly> gens;
  for (const auto& g : j.at("generators")) gens.push_back(poly_from_json(g));
  if (j.contains("certificates")) {
    const auto& cj = j.at("certificates");
    if (cj.size() != gens.size())
      throw std::invalid_argument("order ideal: certificate count does not match generators");
    std::vector<OrderIdealGen::Generator> out;
    for (size_t i = 0; i < gens.size(); ++i)
      out.push_back({gens[i], certificate_from_json(cj[i])});
    return OrderIdealGen::from_certified(cone, std::move(out));
  }
  return OrderIdealGen::make(cone, gens, caps);
}

namespace {

json refutation_to_json(const Refutation& r) {
  json out{{"kind", r.kind == RefutationKind::NegativeValue ? "negative_value" : "zero_propagation"},
           {"point", vec_to_json(r.point)},
           {"value", rational_to_json(r.value)}};
  if (r.kind == RefutationKind::ZeroPropagation) out["point2"] = vec_to_json(r.point2);
  return out;
}

}  // namespace

json membership_to_json(const MembershipVerdict& v) {
  switch (v.kind) {
    case MembershipVerdict::Kind::Member:
      return json{{"verdict", "member"}, {"degree", v.degree}, {"certificate", certificate_to_json(v.cert)}};
    case MembershipVerdict::Kind::Refuted:
      return json{{"verdict", "refuted"}, {"refutation", refutation_to_json(*v.refutation)}};
    case MembershipVerdict::Kind::NotFoundUpTo: {
      json farkas = json::array();
      for (const auto& f : v.farkas) farkas.push_back(json{{"degree", f.degree}, {"y", vec_to_json(f.y)}});
      return json{{"verdict", "not_found_up_to"}, {"degree", v.degree}, {"farkas", farkas}};
    }
  }
  return {};
}

json order_unit_to_json(const OrderUnitVerdict& v) {
  switch (v.kind) {
    case OrderUnitVerdict::Kind::Yes:
      return json{{"verdict", "yes"},
                  {"margin", rational_to_json(v.margin)},
                  {"certificate", certificate_to_json(v.cert)}};
    case OrderUnitVerdict::Kind::No:
      return json{{"verdict", "no"},
                  {"witness", vec_to_json(v.witness)},
                  {"value", rational_to_json(v.witness_value)}};
    case OrderUnitVerdict::Kind::Unknown:
      return json{{"verdict", "unknown"}};
  }
  return {};
}

json ideal_membership_to_json(const IdealMembership& v) {
  json out{{"member", v.member}, {"m_cap", v.m_cap}, {"degree_cap", v.degree_cap}};
  if (v.member) {
    out["M"] = v.M;
    out["certificate_minus"] = certificate_to_json(v.cert_minus);
    out["certificate_plus"] = certificate_to_json(v.cert_plus);
  }
  if (!v.refuted_at.empty()) {
    json ref = json::array();
    for (const auto& [m, r] : v.refuted_at) ref.push_back(json{{"M", m}, {"refutation", refutation_to_json(r)}});
    out["refuted_at"] = ref;
  }
  return out;
}

json witness_to_json(const SimplexProductWitness& w) {
  json coeffs = json::array();
  for (const auto& c : w.coefficients) coeffs.push_back(vec_to_json(c));
  return json{{"classes", w.classes}, {"coeffs", coeffs}};
}

json structure_result_to_json(const StructureResult& r) {
  if (r.is_product) return json{{"product_of_simplices", true}, {"witness", witness_to_json(r.witness)}};
  return json{{"product_of_simplices", false}, {"reason", r.reason}};
}

json experiment_report_to_json(const ExperimentReport& r) {
  json out{{"setting", r.setting},
           {"u", r.u_repr},
           {"a", r.a_repr},
           {"conclusion", conclusion_name(r.conclusion)},
           {"wall_seconds", r.wall_seconds},
           {"caps", {{"max_degree", r.caps.max_degree}, {"max_m", r.caps.max_m},
                     {"grid_denominator_cap", r.caps.grid_denom_cap}}}};
  if (!r.error.empty()) out["error"] = r.error;
  if (r.u_check) out["order_unit_check"] = order_unit_to_json(*r.u_check);
  if (r.ua_check) out["ua_certificate"] = membership_to_json(*r.ua_check);
  if (r.a_check) out["a_certificate"] = membership_to_json(*r.a_check);
  if (r.pipeline) {
    json l{{"positive", r.pipeline->positive}};
    if (r.pipeline->ideal_check) l["ideal_membership"] = ideal_membership_to_json(*r.pipeline->ideal_check);
    out["order_unit_pipeline"] = l;
  }
  if (r.toy_u_order_unit) out["toy_u_order_unit"] = *r.toy_u_order_unit;
  if (r.toy_ua_member) out["toy_ua_member"] = *r.toy_ua_member;
  if (r.toy_a_member) out["toy_a_member"] = *r.toy_a_member;
  return out;
}

json gallery_result_to_json(const GalleryResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return json{{"case", r.case_name}, {"all_pass", r.all_pass}, {"checks", checks}};
}

json flat_to_json(const Flat& f) {
  if (f.empty) return json{{"empty", true}};
  json basis = json::array();
  for (const auto& b : f.basis) basis.push_back(vec_to_json(b));
  return json{{"empty", false}, {"dim", f.dim()}, {"point", vec_to_json(f.point)}, {"basis", basis}};
}

json face_to_json(const Face& f) {
  return json{{"facets", f.facets},
              {"vertices", f.vertices},
              {"dim", f.dim},
              {"affine_hull", flat_to_json(f.affine_hull)},
              {"relative_interior_point", vec_to_json(f.rel_interior)}};
}

json zero_faces_to_json(const ZeroFaces& z) {
  json faces = json::array(), flats = json::array();
  for (const auto& f : z.faces) faces.push_back(face_to_json(f));
  for (const auto& f : z.flats) flats.push_back(flat_to_json(f));
  return json{{"faces_in_K", faces}, {"flats", flats}};
}

}  // namespace polyorder
