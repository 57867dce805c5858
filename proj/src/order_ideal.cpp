#include "polyorder/order_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyorder/linalg.hpp"

namespace polyorder {

namespace {

// Vertices (basic feasible solutions) of {x >= 0 : E x = d}.
std::vector<QVec> standard_form_vertices(const QMat& E, const QVec& d) {
  const size_t cols = E.empty() ? 0 : E[0].size();
  QMat Ecopy = E;
  const int rk = rref_in_place(Ecopy);
  std::vector<QVec> verts;
  std::set<std::vector<std::string>> seen;

  std::vector<size_t> sel(rk);
  const size_t k = static_cast<size_t>(rk);
  if (k == 0) {
    // Only the origin can be a vertex.
    if (is_zero_vec(d)) verts.push_back(QVec(cols, Rational(0)));
    return verts;
  }
  if (cols < k) return verts;
  for (size_t i = 0; i < k; ++i) sel[i] = i;
  auto advance = [&]() -> bool {
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && sel[i] == cols - (k - static_cast<size_t>(i))) --i;
    if (i < 0) return false;
    ++sel[i];
    for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    return true;
  };
  do {
    QMat B(E.size(), QVec(k));
    for (size_t r = 0; r < E.size(); ++r)
      for (size_t c = 0; c < k; ++c) B[r][c] = E[r][sel[c]];
    const auto sol = linear_solve(B, d);
    if (!sol.unique()) continue;
    bool nonneg = true;
    for (const auto& v : sol.particular)
      if (v.sign() < 0) { nonneg = false; break; }
    if (!nonneg) continue;
    QVec full(cols, Rational(0));
    for (size_t c = 0; c < k; ++c) full[sel[c]] = sol.particular[c];
    std::vector<std::string> key;
    for (const auto& v : full) key.push_back(v.str());
    if (seen.insert(key).second) verts.push_back(std::move(full));
  } while (advance());
  return verts;
}

QVec barycenter(const std::vector<QVec>& pts) {
  QVec avg(pts[0].size(), Rational(0));
  for (const auto& p : pts) avg = vec_add(avg, p);
  return vec_scale(avg, Rational(1, static_cast<long>(pts.size())));
}

// Coefficient-matching rows for sum_i a_i * form_i = target over {constant,
// x1..xn}.
void linear_match_system(const std::vector<LinearForm>& forms, const LinearForm& target, QMat& A, QVec& b) {
  const int n = target.nvars();
  A.assign(n + 1, QVec(forms.size(), Rational(0)));
  b.assign(n + 1, Rational(0));
  for (size_t j = 0; j < forms.size(); ++j) {
    A[0][j] = forms[j].constant;
    for (int i = 0; i < n; ++i) A[i + 1][j] = forms[j].coeffs[i];
  }
  b[0] = target.constant;
  for (int i = 0; i < n; ++i) b[i + 1] = target.coeffs[i];
}

LPOutcome linear_combo_lp(const Polytope& K, const LinearForm& target) {
  std::vector<LinearForm> basis;
  basis.push_back(LinearForm(Rational(1), QVec(K.dim(), Rational(0))));  // the constant 1
  for (const auto& f : K.facet_forms()) basis.push_back(f);
  QMat A;
  QVec b;
  linear_match_system(basis, target, A, b);
  return lp_solve(LPProblem::feasibility(A, b, std::vector<VarSign>(basis.size(), VarSign::NonNegative)));
}

void check_vanishes_exactly_on(const Polytope& K, const Face& G, const LinearForm& beta, const char* name) {
  std::vector<int> zero_verts;
  for (size_t v = 0; v < K.vertices().size(); ++v)
    if (beta.eval(K.vertices()[v]).is_zero()) zero_verts.push_back(static_cast<int>(v));
  if (zero_verts != G.vertices)
    throw std::invalid_argument(std::string(name) + " does not vanish exactly on G within K");
}

}  // namespace

OrderIdealGen::OrderIdealGen(GeneratedCone cone, std::vector<Generator> gens)
    : cone_(std::move(cone)), gens_(std::move(gens)), sum_(cone_.nvars()) {
  for (const auto& g : gens_) sum_ += g.poly;
}

OrderIdealGen OrderIdealGen::make(const GeneratedCone& cone, const std::vector<SparsePoly>& generators,
                                  const SearchCaps& caps) {
  std::vector<Generator> gens;
  for (const auto& t : generators) {
    const auto v = certify_membership(t, cone, caps.max_degree, caps);
    if (!v.member())
      throw std::invalid_argument("OrderIdealGen: generator " + t.str() + " not certified in the ambient cone");
    gens.push_back(Generator{t, v.cert});
  }
  return OrderIdealGen(cone, std::move(gens));
}

OrderIdealGen OrderIdealGen::from_certified(const GeneratedCone& cone, std::vector<Generator> generators) {
  for (const auto& g : generators)
    if (!verify_certificate(g.poly, g.cert, cone))
      throw std::invalid_argument("OrderIdealGen: invalid certificate for " + g.poly.str());
  return OrderIdealGen(cone, std::move(generators));
}

IdealMembership in_order_ideal(const SparsePoly& r, const OrderIdealGen& ideal, int m_cap, int degree_cap,
                               const SearchCaps& caps) {
  if (m_cap < 1 || degree_cap < 1) throw std::invalid_argument("in_order_ideal: caps must be >= 1");
  IdealMembership out;
  out.m_cap = m_cap;
  out.degree_cap = degree_cap;
  const SparsePoly& s = ideal.relative_order_unit();
  for (int M = 1; M <= m_cap; M *= 2) {
    const SparsePoly ms = s.scaled(Rational(M));
    const auto lower = certify_membership(ms - r, ideal.cone(), degree_cap, caps);
    if (lower.refuted()) {
      out.refuted_at.emplace_back(M, *lower.refutation);
      continue;
    }
    if (!lower.member()) continue;
    const auto upper = certify_membership(ms + r, ideal.cone(), degree_cap, caps);
    if (!upper.member()) continue;
    out.member = true;
    out.M = M;
    out.cert_minus = lower.cert;
    out.cert_plus = upper.cert;
    return out;
  }
  return out;
}

FaceIdeal face_ideal_generators(const Polytope& K, const Face& G) {
  if (G.vertices.empty()) throw std::invalid_argument("face_ideal_generators: empty face");
  if (G.dim >= K.dim()) throw std::invalid_argument("face_ideal_generators: face must be proper");
  FaceIdeal out;
  out.facet_indices = K.facets_containing(G);
  if (out.facet_indices.empty())
    throw std::invalid_argument("face_ideal_generators: no facet contains the face");
  LinearForm sum(Rational(0), QVec(K.dim(), Rational(0)));
  for (int f : out.facet_indices) {
    out.generators.push_back(K.facet_forms()[f]);
    sum = sum + K.facet_forms()[f];
  }
  out.order_unit = sum;
  return out;
}

std::optional<QVec> linear_in_cone(const Polytope& K, const LinearForm& beta) {
  const auto out = linear_combo_lp(K, beta);
  if (!out.feasible) return std::nullopt;
  return out.solution;
}

DominateResult dominate_linear(const Polytope& K, const Face& G, const LinearForm& beta, const LinearForm& gamma,
                               int m_cap) {
  if (!linear_in_cone(K, beta))
    throw std::invalid_argument("dominate_linear: beta is not a nonnegative combination of {1, facet forms}");
  if (!linear_in_cone(K, gamma))
    throw std::invalid_argument("dominate_linear: gamma is not a nonnegative combination of {1, facet forms}");
  check_vanishes_exactly_on(K, G, beta, "dominate_linear: beta");
  for (int v : G.vertices)
    if (!gamma.eval(K.vertices()[v]).is_zero())
      throw std::invalid_argument("dominate_linear: gamma does not vanish on G");

  DominateResult res;
  std::optional<QVec> prev_farkas;
  for (int M = 1; M <= m_cap; ++M) {
    LinearForm target = beta.scaled(Rational(M)) - gamma;
    const auto out = linear_combo_lp(K, target);
    if (out.feasible) {
      res.M = M;
      res.combination = out.solution;
      res.farkas_prev = prev_farkas;
      return res;
    }
    prev_farkas = out.farkas;
  }
  throw std::runtime_error("dominate_linear: no M within the cap dominates gamma");
}

FacetDecomposition facet_decompose(const Polytope& K, const Face& G, const LinearForm& beta) {
  if (!linear_in_cone(K, beta))
    throw std::invalid_argument("facet_decompose: beta is not a nonnegative combination of {1, facet forms}");
  check_vanishes_exactly_on(K, G, beta, "facet_decompose: beta");

  FacetDecomposition out;
  out.facet_indices = K.facets_containing(G);
  std::vector<LinearForm> forms;
  for (int f : out.facet_indices) forms.push_back(K.facet_forms()[f]);
  const size_t k = forms.size();

  QMat A;
  QVec b;
  linear_match_system(forms, beta, A, b);

  // Minimal-sum solutions first.
  const auto lp = lp_solve(LPProblem::minimize(A, b, std::vector<VarSign>(k, VarSign::NonNegative),
                                               QVec(k, Rational(1))));
  if (!lp.feasible)
    throw std::invalid_argument("facet_decompose: beta has no nonnegative decomposition over facets containing G");

  // Vertex barycenter of the optimal face {A a = b, sum a = V, a >= 0}.
  QMat Aext = A;
  QVec bext = b;
  Aext.push_back(QVec(k, Rational(1)));
  bext.push_back(*lp.objective_value);
  const auto face_verts = standard_form_vertices(Aext, bext);
  if (!face_verts.empty()) {
    QVec center = barycenter(face_verts);
    bool positive = true;
    for (const auto& c : center)
      if (c.sign() <= 0) { positive = false; break; }
    if (positive) {
      out.coefficients = std::move(center);
    }
  }

  if (out.coefficients.empty()) {
    // Max-margin fallback: maximize t with a_i >= t. Substituting
    // a = t + s (s >= 0) keeps the system linear.
    const size_t nv = 1 + k;
    QMat A2(A.size(), QVec(nv, Rational(0)));
    for (size_t r = 0; r < A.size(); ++r) {
      Rational rowsum;
      for (size_t c = 0; c < k; ++c) rowsum += A[r][c];
      A2[r][0] = rowsum;
      for (size_t c = 0; c < k; ++c) A2[r][1 + c] = A[r][c];
    }
    std::vector<VarSign> signs(nv, VarSign::NonNegative);
    signs[0] = VarSign::Free;
    QVec obj(nv, Rational(0));
    obj[0] = Rational(-1);
    const auto mm = lp_solve(LPProblem::minimize(A2, b, signs, obj));
    if (!mm.feasible || mm.solution[0].sign() <= 0)
      throw std::invalid_argument("facet_decompose: no strictly positive decomposition exists");
    const Rational tstar = mm.solution[0];
    // Optimal face in s-space: A s = b - t* * (row sums).
    QVec b2 = b;
    for (size_t r = 0; r < A.size(); ++r) b2[r] -= tstar * A2[r][0];
    const auto sverts = standard_form_vertices(A, b2);
    if (sverts.empty()) throw std::logic_error("facet_decompose: optimal face has no vertices");
    QVec center = barycenter(sverts);
    for (auto& c : center) c += tstar;
    out.coefficients = std::move(center);
  }

  // Exact recomposition check.
  LinearForm recomposed(Rational(0), QVec(K.dim(), Rational(0)));
  for (size_t i = 0; i < k; ++i) recomposed = recomposed + forms[i].scaled(out.coefficients[i]);
  if (!(recomposed == beta)) throw std::logic_error("facet_decompose: recomposition mismatch");
  for (const auto& c : out.coefficients)
    if (c.sign() <= 0) throw std::logic_error("facet_decompose: nonpositive coefficient escaped selection");
  return out;
}

ZeroFaces zero_faces(const Polytope& K, const std::vector<std::vector<int>>& monomial_generators) {
  if (monomial_generators.empty()) throw std::invalid_argument("zero_faces: no generators");
  std::vector<std::vector<int>> supports;
  for (const auto& w : monomial_generators) {
    if (static_cast<int>(w.size()) != K.facet_count())
      throw std::invalid_argument("zero_faces: exponent vector does not match facet count");
    std::vector<int> supp;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0) throw std::invalid_argument("zero_faces: negative exponent");
      if (w[i] > 0) supp.push_back(static_cast<int>(i));
    }
    if (supp.empty()) return ZeroFaces{};  // a positive constant generator: empty zero set
    supports.push_back(std::move(supp));
  }

  ZeroFaces out;
  std::set<std::vector<int>> seen_faces;
  std::vector<Flat> flats;

  std::vector<size_t> pick(supports.size(), 0);
  for (;;) {
    std::vector<int> idx;
    for (size_t g = 0; g < supports.size(); ++g) idx.push_back(supports[g][pick[g]]);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    const auto q = K.face_of(idx);
    if (q.face && seen_faces.insert(q.face->vertices).second) out.faces.push_back(*q.face);
    if (!q.hyperplane_intersection.empty) flats.push_back(q.hyperplane_intersection);

    size_t g = supports.size();
    while (g > 0) {
      --g;
      if (++pick[g] < supports[g].size()) break;
      pick[g] = 0;
      if (g == 0) { g = supports.size() + 1; break; }
    }
    if (g == supports.size() + 1) break;
  }

  // Keep maximal faces only (vertex-set inclusion).
  std::vector<Face> maximal;
  for (const auto& f : out.faces) {
    bool dominated = false;
    for (const auto& g : out.faces) {
      if (f.vertices == g.vertices) continue;
      if (std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(), f.vertices.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  out.faces = std::move(maximal);
  std::sort(out.faces.begin(), out.faces.end(),
            [](const Face& a, const Face& b) { return a.vertices < b.vertices; });

  // Keep maximal flats only.
  std::vector<Flat> maximal_flats;
  for (size_t i = 0; i < flats.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < flats.size() && !dominated; ++j) {
      if (i == j) continue;
      if (flats[j].contains(flats[i])) {
        // Of two equal flats keep the first.
        if (!(flats[i].contains(flats[j])) || j < i) dominated = true;
      }
    }
    if (!dominated) maximal_flats.push_back(flats[i]);
  }
  std::sort(maximal_flats.begin(), maximal_flats.end(), [](const Flat& a, const Flat& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    for (size_t i = 0; i < a.point.size(); ++i)
      if (a.point[i] != b.point[i]) return a.point[i] < b.point[i];
    return false;
  });
  out.flats = std::move(maximal_flats);
  return out;
}

PositivityPipelineResult positivity_pipeline(const SparsePoly& u, const SparsePoly& a, const GeneratedCone& cone,
                               const SearchCaps& caps) {
  PositivityPipelineResult res;
  if (a.is_zero()) {
    res.positive = true;
    return res;
  }

  res.u_check = is_order_unit(u, cone, caps);
  if (!res.u_check.yes()) throw std::invalid_argument("positivity_pipeline: u was not confirmed an order unit");

  const SparsePoly ua = u * a;
  res.ua_check = certify_membership(ua, cone, caps.max_degree, caps);
  if (!res.ua_check.member()) {
    res.stalled = PositivityPipelineResult::Stage::ProductCertificate;
    return res;
  }

  const auto ideal = OrderIdealGen::from_certified(cone, {{ua, res.ua_check.cert}});
  res.ideal_check = in_order_ideal(a, ideal, caps.max_m, caps.max_degree, caps);
  if (!res.ideal_check->member) {
    res.stalled = PositivityPipelineResult::Stage::IdealMembership;
    return res;
  }

  res.a_check = certify_membership(a, cone, caps.max_degree, caps);
  if (!res.a_check->member()) {
    res.stalled = PositivityPipelineResult::Stage::DirectCertificate;
    return res;
  }
  res.positive = true;
  res.cert = res.a_check->cert;
  return res;
}

}  // namespace polyorder
