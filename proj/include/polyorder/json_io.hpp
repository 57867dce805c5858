#pragma once

#include <json.hpp>

#include "polyorder/cone.hpp"
#include "polyorder/experiment.hpp"
#include "polyorder/order_ideal.hpp"
#include "polyorder/structure.hpp"

namespace polyorder {

using nlohmann::json;

// Rationals travel as strings "p/q" (or "p" when q = 1).
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vec_to_json(const QVec& v);
QVec vec_from_json(const json& j);

// {"const": "1", "coeffs": ["-1", "-1"]}
json linear_form_to_json(const LinearForm& f);
LinearForm linear_form_from_json(const json& j);

// {"vars": ["x","y"], "terms": [{"coeff": "7/25", "exps": [0,0]}, ...]}
json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const json& j);

// {"vertices": [["0","0"], ...]} or {"halfspaces": [linear form, ...]}
json polytope_to_json(const Polytope& K);
Polytope polytope_from_json(const json& j);

// {"generators": [poly, ...], "polytope": ..., "zero_prop_pairs": [...]}
json cone_to_json(const GeneratedCone& c);
GeneratedCone cone_from_json(const json& j);

// {"terms": [{"exps": [0,0,1], "coeff": "1"}, ...]}
json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

// {"generators": [poly, ...], "certificates": [cert, ...]}
json order_ideal_to_json(const OrderIdealGen& ideal);
OrderIdealGen order_ideal_from_json(const GeneratedCone& cone, const json& j, const SearchCaps& caps);

json membership_to_json(const MembershipVerdict& v);
json order_unit_to_json(const OrderUnitVerdict& v);
json ideal_membership_to_json(const IdealMembership& v);

// {"classes": [[0,2],[1,3]], "coeffs": [["1","1"],["1","1"]]}
json witness_to_json(const SimplexProductWitness& w);
json structure_result_to_json(const StructureResult& r);

json experiment_report_to_json(const ExperimentReport& r);
json gallery_result_to_json(const GalleryResult& r);

json flat_to_json(const Flat& f);
json face_to_json(const Face& f);
json zero_faces_to_json(const ZeroFaces& z);

}  // namespace polyorder
