// Command-line laboratory for positivity certificates over polytope rings:
// certificate search, order-unit checks, order-ideal membership, face
// domination and decomposition, zero-face analysis, cancellation experiments,
// product-of-simplices recognition, and the worked-example gallery.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "polyorder/fixtures.hpp"
#include "polyorder/json_io.hpp"

using namespace polyorder;

namespace {

json load_json(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
  json j;
  in >> j;
  return j;
}

std::vector<int> parse_index_list(const std::string& arg) {
  std::vector<int> out;
  std::string cur;
  for (char c : arg + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

void print_facets(const Polytope& K) {
  for (int i = 0; i < K.facet_count(); ++i)
    std::cout << "  facet " << i << ": " << K.facet_forms()[i].str() << " >= 0\n";
}

struct Options {
  SearchCaps caps;
  bool as_json = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--max-degree", opt.caps.max_degree, "certificate search degree cap")->capture_default_str();
  cmd->add_option("--max-m", opt.caps.max_m, "order-ideal M escalation cap")->capture_default_str();
  cmd->add_option("--grid-denominator-cap", opt.caps.grid_denom_cap,
                  "witness grid denominator cap")->capture_default_str();
  cmd->add_flag("--json", opt.as_json, "machine-readable output");
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int verdict_exit(const MembershipVerdict& v) {
  switch (v.kind) {
    case MembershipVerdict::Kind::Member: return 0;
    case MembershipVerdict::Kind::Refuted: return 1;
    case MembershipVerdict::Kind::NotFoundUpTo: return 2;
  }
  return 3;
}

std::string membership_text(const MembershipVerdict& v) {
  switch (v.kind) {
    case MembershipVerdict::Kind::Member:
      return "member at degree " + std::to_string(v.degree) + " (certificate verified)";
    case MembershipVerdict::Kind::Refuted:
      return "refuted: " + v.refutation->describe();
    case MembershipVerdict::Kind::NotFoundUpTo:
      return "no certificate up to degree " + std::to_string(v.degree) +
             " (Farkas refutation recorded per degree; no claim beyond the cap)";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyorder: exact positivity certificates on polytope rings"};
  app.require_subcommand(1);

  // certify ------------------------------------------------------------
  Options certify_opt;
  std::string certify_cone, certify_target;
  auto* certify = app.add_subcommand("certify", "search for a cone-membership certificate");
  certify->add_option("--cone", certify_cone, "cone JSON (file or inline)")->required();
  certify->add_option("--target", certify_target, "polynomial JSON")->required();
  add_common(certify, certify_opt);

  // orderunit ----------------------------------------------------------
  Options ou_opt;
  std::string ou_cone, ou_target;
  auto* orderunit = app.add_subcommand("orderunit", "decide order-unit status (semi-decision)");
  orderunit->add_option("--cone", ou_cone, "cone JSON")->required();
  orderunit->add_option("--target", ou_target, "polynomial JSON")->required();
  add_common(orderunit, ou_opt);

  // ideal-member ---------------------------------------------------------
  Options im_opt;
  std::string im_cone, im_ideal, im_target;
  auto* ideal_member = app.add_subcommand("ideal-member", "bounded order-ideal membership search");
  ideal_member->add_option("--cone", im_cone, "ambient cone JSON")->required();
  ideal_member->add_option("--ideal", im_ideal, "order ideal JSON {\"generators\": [...]}")->required();
  ideal_member->add_option("--target", im_target, "polynomial JSON")->required();
  add_common(ideal_member, im_opt);

  // dominate -------------------------------------------------------------
  Options dom_opt;
  std::string dom_poly, dom_face, dom_beta, dom_gamma;
  auto* dominate = app.add_subcommand("dominate", "least M with M*beta - gamma in the cone");
  dominate->add_option("--polytope", dom_poly, "polytope JSON")->required();
  dominate->add_option("--face", dom_face, "facet indices of G, e.g. \"0,2\"")->required();
  dominate->add_option("--beta", dom_beta, "linear form JSON")->required();
  dominate->add_option("--gamma", dom_gamma, "linear form JSON")->required();
  add_common(dominate, dom_opt);

  // decompose ------------------------------------------------------------
  Options dec_opt;
  std::string dec_poly, dec_face, dec_beta;
  auto* decompose = app.add_subcommand("decompose", "positive facet decomposition of a linear form");
  decompose->add_option("--polytope", dec_poly, "polytope JSON")->required();
  decompose->add_option("--face", dec_face, "facet indices of G")->required();
  decompose->add_option("--beta", dec_beta, "linear form JSON")->required();
  add_common(decompose, dec_opt);

  // zerofaces --------------------------------------------------------------
  Options zf_opt;
  std::string zf_poly, zf_monomials;
  auto* zerofaces = app.add_subcommand("zerofaces", "zero set of monomial generators, inside and outside K");
  zerofaces->add_option("--polytope", zf_poly, "polytope JSON")->required();
  zerofaces->add_option("--monomials", zf_monomials,
                        "JSON array of facet-exponent vectors, e.g. [[1,0,0,1]]")->required();
  add_common(zerofaces, zf_opt);

  // cancel ---------------------------------------------------------------
  Options can_opt;
  std::string can_cone, can_toy, can_u, can_a;
  auto* cancel = app.add_subcommand("cancel", "run an order-unit-cancellation experiment");
  auto* cone_opt_h = cancel->add_option("--cone", can_cone, "cone JSON");
  cancel->add_option("--toy", can_toy, "toy ring tag: r1 | r2")->excludes(cone_opt_h);
  cancel->add_option("--u", can_u, "order-unit candidate polynomial JSON")->required();
  cancel->add_option("--a", can_a, "test element polynomial JSON")->required();
  add_common(cancel, can_opt);

  // structure --------------------------------------------------------------
  Options st_opt;
  std::string st_poly;
  auto* structure = app.add_subcommand("structure", "product-of-simplices recognition");
  structure->add_option("--polytope", st_poly, "polytope JSON")->required();
  add_common(structure, st_opt);

  // gallery ----------------------------------------------------------------
  Options gal_opt;
  std::string gal_name = "all";
  bool gal_list = false;
  auto* gallery = app.add_subcommand("gallery", "reproduce the worked examples and self-check");
  gallery->add_option("name", gal_name, "case name, or 'all'");
  gallery->add_flag("--list", gal_list, "list case names");
  add_common(gallery, gal_opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*certify) {
      const auto cone = cone_from_json(load_json(certify_cone));
      const auto f = poly_from_json(load_json(certify_target));
      const auto v = certify_membership(f, cone, certify_opt.caps.max_degree, certify_opt.caps);
      json j = membership_to_json(v);
      j["target"] = f.str();
      emit(certify_opt, j, membership_text(v));
      return verdict_exit(v);
    }

    if (*orderunit) {
      const auto cone = cone_from_json(load_json(ou_cone));
      const auto f = poly_from_json(load_json(ou_target));
      const auto v = is_order_unit(f, cone, ou_opt.caps);
      std::string text;
      int code = 2;
      if (v.yes()) {
        text = "order unit: yes, margin " + v.margin.str();
        code = 0;
      } else if (v.no()) {
        text = "order unit: no, witness " + vec_to_json(v.witness).dump();
        code = 1;
      } else {
        text = "order unit: unknown within the caps";
      }
      emit(ou_opt, order_unit_to_json(v), text);
      return code;
    }

    if (*ideal_member) {
      const auto cone = cone_from_json(load_json(im_cone));
      const auto ideal = order_ideal_from_json(cone, load_json(im_ideal), im_opt.caps);
      const auto r = poly_from_json(load_json(im_target));
      const auto v = in_order_ideal(r, ideal, im_opt.caps.max_m, im_opt.caps.max_degree, im_opt.caps);
      std::string text = v.member ? "member with M = " + std::to_string(v.M) + " (both certificates verified)"
                                  : "not found up to M = " + std::to_string(v.m_cap) +
                                        ", degree " + std::to_string(v.degree_cap) + " (no negative claim)";
      emit(im_opt, ideal_membership_to_json(v), text);
      return v.member ? 0 : 2;
    }

    if (*dominate) {
      const auto K = polytope_from_json(load_json(dom_poly));
      const auto q = K.face_of(parse_index_list(dom_face));
      if (!q.face) throw std::invalid_argument("the chosen facets meet K in the empty set");
      const auto res = dominate_linear(K, *q.face, linear_form_from_json(load_json(dom_beta)),
                                       linear_form_from_json(load_json(dom_gamma)), dom_opt.caps.max_m);
      json j{{"M", res.M}, {"combination", vec_to_json(res.combination)}};
      emit(dom_opt, j, "M = " + std::to_string(res.M));
      return 0;
    }

    if (*decompose) {
      const auto K = polytope_from_json(load_json(dec_poly));
      const auto q = K.face_of(parse_index_list(dec_face));
      if (!q.face) throw std::invalid_argument("the chosen facets meet K in the empty set");
      const auto res = facet_decompose(K, *q.face, linear_form_from_json(load_json(dec_beta)));
      json j{{"facets", res.facet_indices}, {"coefficients", vec_to_json(res.coefficients)}};
      if (dec_opt.as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "decomposition over the facets containing G:\n";
        for (size_t i = 0; i < res.facet_indices.size(); ++i)
          std::cout << "  " << res.coefficients[i].str() << " * ("
                    << K.facet_forms()[res.facet_indices[i]].str() << ")\n";
      }
      return 0;
    }

    if (*zerofaces) {
      const auto K = polytope_from_json(load_json(zf_poly));
      const auto monomials = load_json(zf_monomials).get<std::vector<std::vector<int>>>();
      const auto z = zero_faces(K, monomials);
      if (zf_opt.as_json) {
        std::cout << zero_faces_to_json(z).dump(2) << "\n";
      } else {
        std::cout << "facets:\n";
        print_facets(K);
        std::cout << "zero set meets K in " << z.faces.size() << " maximal face(s):\n";
        for (const auto& f : z.faces) {
          std::cout << "  dim " << f.dim << " face on vertices";
          for (int v : f.vertices) std::cout << " " << vec_to_json(K.vertices()[v]).dump();
          std::cout << "\n";
        }
        std::cout << "zero set is the union of " << z.flats.size() << " maximal flat(s):\n";
        for (const auto& fl : z.flats)
          std::cout << "  dim " << fl.dim() << " flat through " << vec_to_json(fl.point).dump() << "\n";
      }
      return 0;
    }

    if (*cancel) {
      const auto u = poly_from_json(load_json(can_u));
      const auto a = poly_from_json(load_json(can_a));
      ExperimentReport rep;
      if (!can_toy.empty()) {
        if (can_toy != "r1" && can_toy != "r2") throw std::invalid_argument("--toy must be r1 or r2");
        rep = run_cancellation_experiment(can_toy == "r1" ? ToyRing::R1 : ToyRing::R2, u, a);
      } else if (!can_cone.empty()) {
        rep = run_cancellation_experiment(cone_from_json(load_json(can_cone)), u, a, can_opt.caps);
      } else {
        throw std::invalid_argument("cancel needs --cone or --toy");
      }
      emit(can_opt, experiment_report_to_json(rep),
           "conclusion: " + conclusion_name(rep.conclusion) + (rep.error.empty() ? "" : " (" + rep.error + ")"));
      switch (rep.conclusion) {
        case Conclusion::Pass: return 0;
        case Conclusion::FailRefuted: return 1;
        case Conclusion::Inconclusive: return rep.error.empty() ? 2 : 3;
      }
    }

    if (*structure) {
      const auto K = polytope_from_json(load_json(st_poly));
      const auto r = recognize_simplex_product(K);
      if (st_opt.as_json) {
        std::cout << structure_result_to_json(r).dump(2) << "\n";
      } else {
        print_facets(K);
        if (r.is_product) {
          std::cout << "product of simplices; witness classes:\n";
          for (size_t c = 0; c < r.witness.classes.size(); ++c) {
            std::cout << "  class " << c << ":";
            for (size_t j = 0; j < r.witness.classes[c].size(); ++j)
              std::cout << " " << r.witness.coefficients[c][j].str() << "*(facet "
                        << r.witness.classes[c][j] << ")";
            std::cout << " = 1\n";
          }
        } else {
          std::cout << "not a product of simplices: " << r.reason << "\n";
        }
      }
      return r.is_product ? 0 : 1;
    }

    if (*gallery) {
      if (gal_list) {
        for (const auto& n : gallery_names()) std::cout << n << "\n";
        return 0;
      }
      std::vector<std::string> names =
          gal_name == "all" ? gallery_names() : std::vector<std::string>{gal_name};
      bool all_pass = true;
      json out = json::array();
      for (const auto& n : names) {
        const auto res = run_gallery_case(n, gal_opt.caps);
        all_pass = all_pass && res.all_pass;
        if (gal_opt.as_json) {
          out.push_back(gallery_result_to_json(res));
        } else {
          std::cout << "== " << res.case_name << " ==\n";
          for (const auto& c : res.checks)
            std::cout << "  [" << (c.pass ? "ok" : "MISMATCH") << "] " << c.name
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        }
      }
      if (gal_opt.as_json) std::cout << out.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
