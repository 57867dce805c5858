#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyorder/lp.hpp"
#include "polyorder/poly.hpp"
#include "polyorder/polytope.hpp"

namespace polyorder {

/// Admissible point pair for the zero-propagation rule: every generator is
/// nonnegative at p, and every generator vanishing at p vanishes at q.
struct ZeroPropPair {
  QVec p;
  QVec q;
};

/// Positive cone generated additively and multiplicatively (with positive
/// rational scalars) by a finite set of polynomials. When the cone is the
/// positive cone of a polytope ring, the generators are exactly the
/// normalized facet forms and the polytope rides along for admissible-point
/// queries.
class GeneratedCone {
 public:
  GeneratedCone(int nvars, std::vector<SparsePoly> generators);
  static GeneratedCone of_polytope(const Polytope& K);

  int nvars() const { return nvars_; }
  const std::vector<SparsePoly>& generators() const { return gens_; }
  const std::optional<Polytope>& polytope() const { return polytope_; }
  const std::vector<ZeroPropPair>& zero_prop_pairs() const { return pairs_; }

  /// Validates the pair preconditions before attaching; throws on violation.
  void attach_zero_prop_pair(QVec p, QVec q);

  /// All generators nonnegative at the point.
  bool admissible(const QVec& point) const;

  std::string str() const;

 private:
  int nvars_;
  std::vector<SparsePoly> gens_;
  std::optional<Polytope> polytope_;
  std::vector<ZeroPropPair> pairs_;
};

/// Nonnegative combination of generator products witnessing cone membership.
/// The empty exponent vector stands for the constant 1.
struct Certificate {
  struct Term {
    std::vector<int> exps;  // exponents over the generator list
    Rational coeff;         // > 0
  };
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  /// Max total product degree among the terms (0 for the empty certificate).
  int degree() const;
  SparsePoly expand(const GeneratedCone& cone) const;
};

/// true iff the certificate is well-formed for the cone and expands exactly
/// to f.
bool verify_certificate(const SparsePoly& f, const Certificate& cert, const GeneratedCone& cone);

struct SearchCaps {
  int max_degree = 8;
  int max_m = 64;               // order-ideal membership escalation bound
  int grid_denom_cap = 64;      // witness-search grid refinement bound
  int refute_denom_cap = 16;    // pre-LP refutation scan bound
  long grid_point_budget = 250000;
  int order_unit_rounds = 12;   // halvings of the order-unit margin candidate
  bool use_refutation_rules = true;
  Rational box_lo = Rational(-2);  // fallback box for cones without a polytope
  Rational box_hi = Rational(2);
};

enum class RefutationKind { NegativeValue, ZeroPropagation };

struct Refutation {
  RefutationKind kind = RefutationKind::NegativeValue;
  QVec point;       // admissible point (f < 0 there, or f = 0 for propagation)
  QVec point2;      // propagation target with f != 0
  Rational value;   // f at the decisive point
  std::string describe() const;
};

struct FarkasRefutation {
  int degree = -1;
  QVec y;
};

/// Member(certificate) | NotFoundUpTo(degree cap, per-degree Farkas
/// refutations) | Refuted(sound refutation).
struct MembershipVerdict {
  enum class Kind { Member, NotFoundUpTo, Refuted };
  Kind kind = Kind::NotFoundUpTo;
  Certificate cert;                     // Member
  int degree = -1;                      // Member: found degree; NotFoundUpTo: cap
  std::vector<FarkasRefutation> farkas; // NotFoundUpTo
  std::optional<Refutation> refutation; // Refuted

  bool member() const { return kind == Kind::Member; }
  bool refuted() const { return kind == Kind::Refuted; }
};

/// Yes(margin c > 0, certificate for f - c) | No(admissible witness with
/// f <= 0) | Unknown(caps reached).
struct OrderUnitVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  Rational margin;      // Yes
  Certificate cert;     // Yes: certificate for f - margin
  QVec witness;         // No
  Rational witness_value;

  bool yes() const { return kind == Kind::Yes; }
  bool no() const { return kind == Kind::No; }
};

/// All products of generator powers with total exponent degree <= d, each
/// expanded exactly, in deterministic (degree-major, then lexicographically
/// decreasing exponent) order.
std::vector<std::pair<std::vector<int>, SparsePoly>> enumerate_products(const GeneratedCone& cone, int degree);

/// Degree-escalating exact LP search for a cone certificate, preceded by the
/// sound refutation rules (negative value at an admissible point; zero
/// propagation over attached point pairs).
MembershipVerdict certify_membership(const SparsePoly& f, const GeneratedCone& cone, int degree_cap,
                                     const SearchCaps& caps = SearchCaps{});

OrderUnitVerdict is_order_unit(const SparsePoly& f, const GeneratedCone& cone, const SearchCaps& caps = SearchCaps{});

/// The standalone zero-propagation rule. Preconditions (checked, violation
/// throws): every generator is >= 0 at p, and every generator vanishing at p
/// vanishes at q. Returns a refutation when f(p) = 0 but f(q) != 0.
std::optional<Refutation> zero_propagation_refute(const SparsePoly& f, const GeneratedCone& cone, const QVec& p,
                                                  const QVec& q);

/// Deterministic stream of admissible sample points: polytope vertices,
/// attached pair base points, vertex-pair midpoints, then a rational grid
/// over the bounding box with doubling denominators. Stops early when the
/// visitor returns false.
void scan_admissible_points(const GeneratedCone& cone, const SearchCaps& caps, int denom_cap,
                            const std::function<bool(const QVec&)>& visit);

}  // namespace polyorder
