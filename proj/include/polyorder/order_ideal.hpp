#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyorder/cone.hpp"
#include "polyorder/linear_form.hpp"
#include "polyorder/polytope.hpp"

namespace polyorder {

/// Order ideal presented by a finite set of positive generators, each
/// carrying the certificate that put it in the ambient cone. The canonical
/// relative order unit is the generator sum.
class OrderIdealGen {
 public:
  struct Generator {
    SparsePoly poly;
    Certificate cert;
  };

  /// Certifies each generator in the ambient cone first; throws when a
  /// generator cannot be certified within the caps.
  static OrderIdealGen make(const GeneratedCone& cone, const std::vector<SparsePoly>& generators,
                            const SearchCaps& caps = SearchCaps{});
  /// Accepts generators with pre-verified certificates.
  static OrderIdealGen from_certified(const GeneratedCone& cone, std::vector<Generator> generators);

  const GeneratedCone& cone() const { return cone_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const SparsePoly& relative_order_unit() const { return sum_; }

 private:
  OrderIdealGen(GeneratedCone cone, std::vector<Generator> gens);

  GeneratedCone cone_;
  std::vector<Generator> gens_;
  SparsePoly sum_;
};

/// Member(M, certificates for M*sum - r and M*sum + r) or a bounded-search
/// failure that makes no negative claim.
struct IdealMembership {
  bool member = false;
  int M = 0;
  Certificate cert_minus;  // for M*sum - r
  Certificate cert_plus;   // for M*sum + r
  int m_cap = 0;
  int degree_cap = 0;
  /// Definitive refutations of M*sum - r at particular M values, when the
  /// refutation rules fired there.
  std::vector<std::pair<int, Refutation>> refuted_at;
};

/// Searches M in {1, 2, 4, ..., m_cap}; membership needs certificates for
/// both M*sum - r and M*sum + r within the degree cap.
IdealMembership in_order_ideal(const SparsePoly& r, const OrderIdealGen& ideal, int m_cap, int degree_cap,
                               const SearchCaps& caps = SearchCaps{});

/// Generators {beta_i : G subset of F_i} of the face ideal, with the
/// canonical relative order unit, their sum.
struct FaceIdeal {
  std::vector<int> facet_indices;
  std::vector<LinearForm> generators;
  LinearForm order_unit;
};

FaceIdeal face_ideal_generators(const Polytope& K, const Face& G);

/// Nonnegative-combination coefficients of a linear form over {1, beta_i},
/// when the form lies in the cone. Index 0 is the constant.
std::optional<QVec> linear_in_cone(const Polytope& K, const LinearForm& beta);

struct DominateResult {
  int M = 0;
  QVec combination;              // coefficients over {1, beta_i} for M*beta - gamma
  std::optional<QVec> farkas_prev;  // infeasibility certificate at M - 1
};

/// Least positive integer M with M*beta - gamma a nonnegative combination of
/// {1, beta_i}. Preconditions per the face-domination statement are checked
/// and violations throw with the failed condition named.
DominateResult dominate_linear(const Polytope& K, const Face& G, const LinearForm& beta, const LinearForm& gamma,
                               int m_cap = 4096);

struct FacetDecomposition {
  std::vector<int> facet_indices;  // facets containing G
  QVec coefficients;               // strictly positive, recomposes beta exactly
};

/// Strictly positive coefficients a_i with sum a_i beta_i = beta over the
/// facets containing G. Deterministic selection: the relative-interior
/// (vertex barycenter) point of the minimal-sum face of the solution
/// polytope, falling back to the max-margin face when the minimal-sum face
/// touches the boundary.
FacetDecomposition facet_decompose(const Polytope& K, const Face& G, const LinearForm& beta);

struct ZeroFaces {
  std::vector<Face> faces;  // maximal faces of Z meet K
  std::vector<Flat> flats;  // maximal flats of Z, including components missing K
};

/// Zero set of an ideal generated by monomials in the facet forms,
/// intersected with K (a union of faces) and as a union of affine flats.
ZeroFaces zero_faces(const Polytope& K, const std::vector<std::vector<int>>& monomial_generators);

/// Positivity pipeline built on the order-unit consequence: confirm u is an
/// order unit, certify u*a, test a against the order ideal generated by u*a,
/// then escalate the direct certificate search for a.
struct PositivityPipelineResult {
  enum class Stage { OrderUnit, ProductCertificate, IdealMembership, DirectCertificate, Done };
  bool positive = false;
  Certificate cert;           // for a, when positive
  Stage stalled = Stage::Done;
  OrderUnitVerdict u_check;
  MembershipVerdict ua_check;
  std::optional<IdealMembership> ideal_check;
  std::optional<MembershipVerdict> a_check;
};

PositivityPipelineResult positivity_pipeline(const SparsePoly& u, const SparsePoly& a, const GeneratedCone& cone,
                               const SearchCaps& caps = SearchCaps{});

}  // namespace polyorder
