#include "polyorder/cone.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polyorder/linalg.hpp"

namespace polyorder {

namespace {

long floor_to_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q.get_si();
}

long ceil_to_long(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q.get_si();
}

}  // namespace

GeneratedCone::GeneratedCone(int nvars, std::vector<SparsePoly> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("GeneratedCone: no generators");
  for (const auto& g : gens_) {
    if (g.nvars() != nvars_) throw std::invalid_argument("GeneratedCone: generator dimension mismatch");
    if (g.is_zero()) throw std::invalid_argument("GeneratedCone: zero generator");
  }
}

GeneratedCone GeneratedCone::of_polytope(const Polytope& K) {
  std::vector<SparsePoly> gens;
  gens.reserve(K.facet_forms().size());
  for (const auto& f : K.facet_forms()) gens.push_back(f.to_poly());
  GeneratedCone cone(K.dim(), std::move(gens));
  cone.polytope_ = K;
  return cone;
}

bool GeneratedCone::admissible(const QVec& point) const {
  for (const auto& g : gens_)
    if (g.evaluate(point).sign() < 0) return false;
  return true;
}

void GeneratedCone::attach_zero_prop_pair(QVec p, QVec q) {
  if (static_cast<int>(p.size()) != nvars_ || static_cast<int>(q.size()) != nvars_)
    throw std::invalid_argument("attach_zero_prop_pair: dimension mismatch");
  for (size_t i = 0; i < gens_.size(); ++i) {
    const Rational vp = gens_[i].evaluate(p);
    if (vp.sign() < 0)
      throw std::invalid_argument("attach_zero_prop_pair: generator " + gens_[i].str() + " negative at p");
    if (vp.is_zero() && !gens_[i].evaluate(q).is_zero())
      throw std::invalid_argument("attach_zero_prop_pair: generator " + gens_[i].str() +
                                  " vanishes at p but not at q");
  }
  pairs_.push_back(ZeroPropPair{std::move(p), std::move(q)});
}

std::string GeneratedCone::str() const {
  std::ostringstream os;
  os << "cone<";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ">";
  return os.str();
}

int Certificate::degree() const {
  int d = 0;
  for (const auto& t : terms) {
    int s = 0;
    for (int e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

SparsePoly Certificate::expand(const GeneratedCone& cone) const {
  SparsePoly sum(cone.nvars());
  for (const auto& t : terms) {
    SparsePoly prod = SparsePoly::constant(cone.nvars(), t.coeff);
    for (size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i] > 0) prod = prod * cone.generators()[i].pow(static_cast<unsigned>(t.exps[i]));
    sum += prod;
  }
  return sum;
}

bool verify_certificate(const SparsePoly& f, const Certificate& cert, const GeneratedCone& cone) {
  if (f.nvars() != cone.nvars()) return false;
  for (const auto& t : cert.terms) {
    if (t.exps.size() != cone.generators().size()) return false;
    if (t.coeff.sign() <= 0) return false;
    for (int e : t.exps)
      if (e < 0) return false;
  }
  return cert.expand(cone) == f;
}

std::string Refutation::describe() const {
  std::ostringstream os;
  auto pt = [](const QVec& v) {
    std::ostringstream s;
    s << "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s << ", ";
      s << v[i].str();
    }
    s << ")";
    return s.str();
  };
  if (kind == RefutationKind::NegativeValue)
    os << "negative value " << value.str() << " at admissible point " << pt(point);
  else
    os << "zero at " << pt(point) << " propagates, but value at " << pt(point2) << " is " << value.str();
  return os.str();
}

std::vector<std::pair<std::vector<int>, SparsePoly>> enumerate_products(const GeneratedCone& cone, int degree) {
  if (degree < 0) throw std::invalid_argument("enumerate_products: negative degree");
  const auto& gens = cone.generators();
  const size_t m = gens.size();

  // Generator powers up to the degree bound, computed once.
  std::vector<std::vector<SparsePoly>> pows(m);
  for (size_t i = 0; i < m; ++i) {
    pows[i].push_back(SparsePoly::constant(cone.nvars(), Rational(1)));
    for (int e = 1; e <= degree; ++e) pows[i].push_back(pows[i].back() * gens[i]);
  }

  std::vector<std::pair<std::vector<int>, SparsePoly>> out;
  std::vector<int> w(m, 0);
  // Exact-degree products in lexicographically decreasing exponent order.
  std::function<void(size_t, int, const SparsePoly&)> rec = [&](size_t gi, int left, const SparsePoly& acc) {
    if (gi + 1 == m) {
      w[gi] = left;
      out.emplace_back(w, left == 0 ? acc : acc * pows[gi][left]);
      w[gi] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      w[gi] = e;
      rec(gi + 1, left - e, e == 0 ? acc : acc * pows[gi][e]);
    }
    w[gi] = 0;
  };
  const SparsePoly one = SparsePoly::constant(cone.nvars(), Rational(1));
  for (int d = 0; d <= degree; ++d) rec(0, d, one);
  return out;
}

void scan_admissible_points(const GeneratedCone& cone, const SearchCaps& caps, int denom_cap,
                            const std::function<bool(const QVec&)>& visit) {
  const int n = cone.nvars();
  auto emit = [&](const QVec& pt) -> bool {
    if (!cone.admissible(pt)) return true;
    return visit(pt);
  };

  if (cone.polytope()) {
    const auto& verts = cone.polytope()->vertices();
    for (const auto& v : verts)
      if (!emit(v)) return;
    for (const auto& pair : cone.zero_prop_pairs())
      if (!emit(pair.p)) return;
    const Rational half(1, 2);
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (!emit(vec_scale(vec_add(verts[i], verts[j]), half))) return;
  } else {
    for (const auto& pair : cone.zero_prop_pairs())
      if (!emit(pair.p)) return;
  }

  QVec lo(n, caps.box_lo), hi(n, caps.box_hi);
  if (cone.polytope()) cone.polytope()->bounding_box(lo, hi);

  long budget = caps.grid_point_budget;
  for (long q = 1; q <= denom_cap; q *= 2) {
    std::vector<long> kmin(n), kmax(n), k(n);
    bool empty_slice = false;
    for (int j = 0; j < n; ++j) {
      kmin[j] = ceil_to_long(lo[j] * Rational(q));
      kmax[j] = floor_to_long(hi[j] * Rational(q));
      k[j] = kmin[j];
      if (kmin[j] > kmax[j]) empty_slice = true;
    }
    if (empty_slice) continue;  // no lattice point at this denominator
    QVec pt(n);
    for (;;) {
      if (--budget < 0) return;
      bool fresh = q == 1;
      for (int j = 0; j < n && !fresh; ++j) fresh = (k[j] % 2) != 0;
      if (fresh) {
        for (int j = 0; j < n; ++j) pt[j] = Rational(k[j], q);
        if (!emit(pt)) return;
      }
      int j = n - 1;
      while (j >= 0 && k[j] == kmax[j]) { k[j] = kmin[j]; --j; }
      if (j < 0) break;
      ++k[j];
    }
  }
}

namespace {

std::optional<Refutation> apply_refutation_rules(const SparsePoly& f, const GeneratedCone& cone,
                                                 const SearchCaps& caps) {
  std::optional<Refutation> found;
  scan_admissible_points(cone, caps, caps.refute_denom_cap, [&](const QVec& pt) {
    const Rational v = f.evaluate(pt);
    if (v.sign() < 0) {
      found = Refutation{RefutationKind::NegativeValue, pt, {}, v};
      return false;
    }
    return true;
  });
  if (found) return found;
  for (const auto& pair : cone.zero_prop_pairs()) {
    if (!f.evaluate(pair.p).is_zero()) continue;
    const Rational vq = f.evaluate(pair.q);
    if (!vq.is_zero()) return Refutation{RefutationKind::ZeroPropagation, pair.p, pair.q, vq};
  }
  return std::nullopt;
}

}  // namespace

MembershipVerdict certify_membership(const SparsePoly& f, const GeneratedCone& cone, int degree_cap,
                                     const SearchCaps& caps) {
  if (degree_cap < 0) throw std::invalid_argument("certify_membership: negative degree cap");
  if (f.nvars() != cone.nvars()) throw std::invalid_argument("certify_membership: dimension mismatch");

  MembershipVerdict verdict;
  if (f.is_zero()) {
    verdict.kind = MembershipVerdict::Kind::Member;
    verdict.degree = 0;
    return verdict;
  }

  if (caps.use_refutation_rules) {
    if (auto r = apply_refutation_rules(f, cone, caps)) {
      verdict.kind = MembershipVerdict::Kind::Refuted;
      verdict.refutation = std::move(r);
      return verdict;
    }
  }

  const auto products = enumerate_products(cone, degree_cap);
  for (int d = 0; d <= degree_cap; ++d) {
    size_t count = 0;
    while (count < products.size()) {
      int deg = 0;
      for (int e : products[count].first) deg += e;
      if (deg > d) break;
      ++count;
    }

    // Coefficient-matching LP over the products of degree <= d.
    std::map<SparsePoly::ExpVec, size_t> row_of;
    auto row_index = [&](const SparsePoly::ExpVec& e) {
      return row_of.emplace(e, row_of.size()).first->second;
    };
    for (const auto& [e, c] : f.terms()) row_index(e);
    for (size_t j = 0; j < count; ++j)
      for (const auto& [e, c] : products[j].second.terms()) row_index(e);

    QMat A(row_of.size(), QVec(count, Rational(0)));
    QVec b(row_of.size(), Rational(0));
    for (const auto& [e, c] : f.terms()) b[row_of[e]] = c;
    for (size_t j = 0; j < count; ++j)
      for (const auto& [e, c] : products[j].second.terms()) A[row_of[e]][j] = c;

    const auto out = lp_solve(LPProblem::feasibility(A, b, std::vector<VarSign>(count, VarSign::NonNegative)));
    if (out.feasible) {
      Certificate cert;
      for (size_t j = 0; j < count; ++j)
        if (out.solution[j].sign() > 0) cert.terms.push_back({products[j].first, out.solution[j]});
      if (!verify_certificate(f, cert, cone))
        throw std::logic_error("certify_membership: certificate failed verification");
      verdict.kind = MembershipVerdict::Kind::Member;
      verdict.cert = std::move(cert);
      verdict.degree = d;
      return verdict;
    }
    verdict.farkas.push_back(FarkasRefutation{d, out.farkas});
  }
  verdict.kind = MembershipVerdict::Kind::NotFoundUpTo;
  verdict.degree = degree_cap;
  return verdict;
}

OrderUnitVerdict is_order_unit(const SparsePoly& f, const GeneratedCone& cone, const SearchCaps& caps) {
  if (f.nvars() != cone.nvars()) throw std::invalid_argument("is_order_unit: dimension mismatch");
  OrderUnitVerdict verdict;

  // One pass serves both sides: a witness with f <= 0 decides No, otherwise
  // the sampled minimum seeds the margin search.
  std::optional<Rational> min_val;
  scan_admissible_points(cone, caps, caps.grid_denom_cap, [&](const QVec& pt) {
    const Rational v = f.evaluate(pt);
    if (v.sign() <= 0) {
      verdict.kind = OrderUnitVerdict::Kind::No;
      verdict.witness = pt;
      verdict.witness_value = v;
      return false;
    }
    if (!min_val || v < *min_val) min_val = v;
    return true;
  });
  if (verdict.no()) return verdict;

  Rational c = min_val.value_or(Rational(1));
  for (int round = 0; round <= caps.order_unit_rounds; ++round) {
    SparsePoly shifted = f;
    shifted -= SparsePoly::constant(f.nvars(), c);
    const auto mv = certify_membership(shifted, cone, caps.max_degree, caps);
    if (mv.member()) {
      verdict.kind = OrderUnitVerdict::Kind::Yes;
      verdict.margin = c;
      verdict.cert = mv.cert;
      return verdict;
    }
    c /= Rational(2);
  }
  return verdict;  // Unknown
}

std::optional<Refutation> zero_propagation_refute(const SparsePoly& f, const GeneratedCone& cone, const QVec& p,
                                                  const QVec& q) {
  if (f.nvars() != cone.nvars()) throw std::invalid_argument("zero_propagation_refute: dimension mismatch");
  for (const auto& g : cone.generators()) {
    const Rational vp = g.evaluate(p);
    if (vp.sign() < 0)
      throw std::invalid_argument("zero_propagation_refute: generator " + g.str() + " negative at p");
    if (vp.is_zero() && !g.evaluate(q).is_zero())
      throw std::invalid_argument("zero_propagation_refute: generator " + g.str() +
                                  " vanishes at p but not at q");
  }
  if (!f.evaluate(p).is_zero()) return std::nullopt;
  const Rational vq = f.evaluate(q);
  if (vq.is_zero()) return std::nullopt;
  return Refutation{RefutationKind::ZeroPropagation, p, q, vq};
}

}  // namespace polyorder
