#include "polyorder/polytope.hpp"

#include <algorithm>
#include <set>

#include "polyorder/linalg.hpp"
#include "polyorder/lp.hpp"

namespace polyorder {

namespace {

// Span membership: v in span(basis)?
bool in_span(const std::vector<QVec>& basis, const QVec& v) {
  if (is_zero_vec(v)) return true;
  QMat M;
  for (const auto& b : basis) M.push_back(b);
  const int r0 = rank(M);
  M.push_back(v);
  return rank(M) == r0;
}

// Canonical direction basis for span{rows}: nonzero rows of the rref.
std::vector<QVec> span_basis(QMat rows) {
  rref_in_place(rows);
  std::vector<QVec> basis;
  for (auto& r : rows)
    if (!is_zero_vec(r)) basis.push_back(std::move(r));
  return basis;
}

// Is p a convex combination of the given points? Exact LP probe.
bool in_convex_hull(const QVec& p, const std::vector<QVec>& points) {
  if (points.empty()) return false;
  const size_t n = p.size();
  const size_t k = points.size();
  QMat A(n + 1, QVec(k, Rational(0)));
  QVec b(n + 1, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) A[i][j] = points[j][i];
    b[i] = p[i];
  }
  for (size_t j = 0; j < k; ++j) A[n][j] = Rational(1);
  b[n] = Rational(1);
  return lp_solve(LPProblem::feasibility(A, b, std::vector<VarSign>(k, VarSign::NonNegative))).feasible;
}

}  // namespace

bool Flat::contains_point(const QVec& p) const {
  if (empty) return false;
  return in_span(basis, vec_sub(p, point));
}

bool Flat::contains(const Flat& other) const {
  if (other.empty) return true;
  if (empty) return false;
  if (!contains_point(other.point)) return false;
  for (const auto& d : other.basis)
    if (!in_span(basis, d)) return false;
  return true;
}

Polytope Polytope::from_vertices(const std::vector<QVec>& points_in) {
  if (points_in.empty()) throw std::invalid_argument("from_vertices: no points");
  const int n = static_cast<int>(points_in[0].size());
  if (n < 1) throw std::invalid_argument("from_vertices: ambient dimension must be >= 1");
  for (const auto& p : points_in)
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("from_vertices: ragged point list");

  std::vector<QVec> pts = points_in;
  std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Full dimensionality. A deficient affine hull yields a nonzero form
  // vanishing on every point, which we report.
  {
    QMat M;
    for (const auto& p : pts) {
      QVec row{Rational(1)};
      row.insert(row.end(), p.begin(), p.end());
      M.push_back(std::move(row));
    }
    const auto null = nullspace_basis(M);
    if (!null.empty()) {
      const QVec& v = null.front();
      LinearForm dep;
      dep.constant = v[0];
      dep.coeffs.assign(v.begin() + 1, v.end());
      throw NotFullDimensionalError(dep.normalized());
    }
  }

  // Keep extreme points only.
  std::vector<QVec> verts;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<QVec> others;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others)) verts.push_back(pts[i]);
  }

  // Facets: supporting hyperplanes spanned by n affinely independent
  // vertices with every vertex on the nonnegative side.
  std::set<std::vector<std::string>> seen;
  std::vector<LinearForm> facets;
  const size_t V = verts.size();
  // Iterate n-subsets in lexicographic order.
  std::vector<size_t> sel(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) sel[i] = i;
  auto advance = [&]() -> bool {
    int i = n - 1;
    while (i >= 0 && sel[i] == V - static_cast<size_t>(n - i)) --i;
    if (i < 0) return false;
    ++sel[i];
    for (int j = i + 1; j < n; ++j) sel[j] = sel[j - 1] + 1;
    return true;
  };
  if (V >= static_cast<size_t>(n)) {
    do {
      QMat M;
      for (int i = 0; i < n; ++i) {
        QVec row{Rational(1)};
        row.insert(row.end(), verts[sel[i]].begin(), verts[sel[i]].end());
        M.push_back(std::move(row));
      }
      const auto null = nullspace_basis(M);
      if (null.size() != 1) continue;  // not a unique hyperplane through the subset
      LinearForm form;
      form.constant = null[0][0];
      form.coeffs.assign(null[0].begin() + 1, null[0].end());
      int pos = 0, neg = 0;
      for (const auto& v : verts) {
        const int s = form.eval(v).sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      if (pos > 0 && neg > 0) continue;  // not supporting
      if (neg > 0) form = form.scaled(Rational(-1));
      form = form.normalized();
      std::vector<std::string> key{form.constant.str()};
      for (const auto& c : form.coeffs) key.push_back(c.str());
      if (seen.insert(key).second) facets.push_back(form);
    } while (advance());
  }
  if (facets.empty()) throw std::logic_error("from_vertices: facet enumeration failed");
  std::sort(facets.begin(), facets.end());

  Polytope K;
  K.n_ = n;
  K.vertices_ = std::move(verts);
  K.facets_ = std::move(facets);
  K.incidence_.assign(K.vertices_.size(), std::vector<bool>(K.facets_.size(), false));
  for (size_t v = 0; v < K.vertices_.size(); ++v)
    for (size_t f = 0; f < K.facets_.size(); ++f)
      K.incidence_[v][f] = K.facets_[f].eval(K.vertices_[v]).is_zero();
  return K;
}

Polytope Polytope::from_halfspaces(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("from_halfspaces: no forms");
  const int n = forms[0].nvars();
  if (n < 1) throw std::invalid_argument("from_halfspaces: ambient dimension must be >= 1");
  for (const auto& f : forms) {
    if (f.nvars() != n) throw std::invalid_argument("from_halfspaces: mixed dimensions");
    if (f.linear_part_zero()) throw std::invalid_argument("from_halfspaces: form with zero linear part");
  }
  const size_t m = forms.size();

  // Boundedness: the recession cone {d : lin_i . d >= 0} must be {0}.
  // Probe each signed axis value for a nonzero ray.
  for (int j = 0; j < n; ++j) {
    for (int sigma : {+1, -1}) {
      // Variables: d (free, n), slack s (nonneg, m). Rows: lin_i.d - s_i = 0
      // and d_j = sigma.
      QMat A(m + 1, QVec(n + m, Rational(0)));
      QVec b(m + 1, Rational(0));
      std::vector<VarSign> signs(n + m, VarSign::NonNegative);
      for (int d = 0; d < n; ++d) signs[d] = VarSign::Free;
      for (size_t i = 0; i < m; ++i) {
        for (int d = 0; d < n; ++d) A[i][d] = forms[i].coeffs[d];
        A[i][n + i] = Rational(-1);
      }
      A[m][j] = Rational(1);
      b[m] = Rational(sigma);
      const auto out = lp_solve(LPProblem::feasibility(A, b, signs));
      if (out.feasible) {
        QVec ray(out.solution.begin(), out.solution.begin() + n);
        throw UnboundedRegionError(std::move(ray));
      }
    }
  }

  // Interior: maximize t subject to beta_i(x) >= t, t <= 1.
  {
    // Variables: x (free, n), t (free), slack s (nonneg, m), u (nonneg).
    const size_t nv = n + 1 + m + 1;
    QMat A(m + 1, QVec(nv, Rational(0)));
    QVec b(m + 1, Rational(0));
    std::vector<VarSign> signs(nv, VarSign::NonNegative);
    for (int d = 0; d <= n; ++d) signs[d] = VarSign::Free;
    for (size_t i = 0; i < m; ++i) {
      for (int d = 0; d < n; ++d) A[i][d] = forms[i].coeffs[d];
      A[i][n] = Rational(-1);
      A[i][n + 1 + i] = Rational(-1);
      b[i] = -forms[i].constant;
    }
    A[m][n] = Rational(1);
    A[m][nv - 1] = Rational(1);
    b[m] = Rational(1);
    QVec c(nv, Rational(0));
    c[n] = Rational(-1);  // maximize t
    const auto out = lp_solve(LPProblem::minimize(A, b, signs, c));
    if (!out.feasible || out.solution[n].sign() <= 0)
      throw EmptyInteriorError("no point satisfies every form strictly");
  }

  // Vertex enumeration over n-element form subsets.
  std::vector<QVec> verts;
  std::vector<size_t> sel(n);
  for (int i = 0; i < n; ++i) sel[i] = i;
  auto advance = [&]() -> bool {
    int i = n - 1;
    while (i >= 0 && sel[i] == m - static_cast<size_t>(n - i)) --i;
    if (i < 0) return false;
    ++sel[i];
    for (int j = i + 1; j < n; ++j) sel[j] = sel[j - 1] + 1;
    return true;
  };
  if (m >= static_cast<size_t>(n)) {
    do {
      QMat A;
      QVec b;
      for (int i = 0; i < n; ++i) {
        A.push_back(forms[sel[i]].coeffs);
        b.push_back(-forms[sel[i]].constant);
      }
      const auto sol = linear_solve(A, b);
      if (!sol.unique()) continue;
      bool inside = true;
      for (const auto& f : forms)
        if (f.eval(sol.particular).sign() < 0) { inside = false; break; }
      if (inside) verts.push_back(sol.particular);
    } while (advance());
  }
  if (verts.empty()) throw EmptyInteriorError("vertex enumeration found nothing");
  return from_vertices(verts);
}

std::vector<int> Polytope::facets_of_vertex(int vertex) const {
  std::vector<int> out;
  for (int f = 0; f < facet_count(); ++f)
    if (incidence_[vertex][f]) out.push_back(f);
  return out;
}

bool Polytope::contains(const QVec& point) const {
  for (const auto& f : facets_)
    if (f.eval(point).sign() < 0) return false;
  return true;
}

void Polytope::bounding_box(QVec& lo, QVec& hi) const {
  lo = hi = vertices_[0];
  for (const auto& v : vertices_) {
    for (int j = 0; j < n_; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
}

Face Polytope::face_from_vertices(const std::vector<int>& vertex_indices) const {
  if (vertex_indices.empty()) throw std::invalid_argument("face_from_vertices: empty vertex set");
  Face face;
  face.vertices = vertex_indices;
  std::sort(face.vertices.begin(), face.vertices.end());
  const QVec& p0 = vertices_[face.vertices[0]];
  QMat diffs;
  for (size_t k = 1; k < face.vertices.size(); ++k)
    diffs.push_back(vec_sub(vertices_[face.vertices[k]], p0));
  face.affine_hull.empty = false;
  face.affine_hull.point = p0;
  face.affine_hull.basis = span_basis(std::move(diffs));
  face.dim = static_cast<int>(face.affine_hull.basis.size());
  QVec avg(n_, Rational(0));
  for (int vi : face.vertices) avg = vec_add(avg, vertices_[vi]);
  face.rel_interior = vec_scale(avg, Rational(1, static_cast<long>(face.vertices.size())));
  face.facets = facets_containing(face);
  return face;
}

Polytope::FaceQuery Polytope::face_of(const std::vector<int>& facet_subset) const {
  for (int f : facet_subset)
    if (f < 0 || f >= facet_count()) throw std::invalid_argument("face_of: facet index out of range");

  FaceQuery q;
  // Intersection of the defining hyperplanes, regardless of K.
  if (facet_subset.empty()) {
    q.hyperplane_intersection.empty = false;
    q.hyperplane_intersection.point.assign(n_, Rational(0));
    for (int j = 0; j < n_; ++j) {
      QVec e(n_, Rational(0));
      e[j] = Rational(1);
      q.hyperplane_intersection.basis.push_back(std::move(e));
    }
  } else {
    QMat A;
    QVec b;
    for (int f : facet_subset) {
      A.push_back(facets_[f].coeffs);
      b.push_back(-facets_[f].constant);
    }
    const auto sol = linear_solve(A, b);
    if (sol.consistent) {
      q.hyperplane_intersection.empty = false;
      q.hyperplane_intersection.point = sol.particular;
      QMat dirs;
      for (const auto& d : sol.nullspace) dirs.push_back(d);
      q.hyperplane_intersection.basis = span_basis(std::move(dirs));
    }
  }

  std::vector<int> on_all;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    bool ok = true;
    for (int f : facet_subset)
      if (!incidence_[v][f]) { ok = false; break; }
    if (ok) on_all.push_back(static_cast<int>(v));
  }
  if (!on_all.empty()) q.face = face_from_vertices(on_all);
  return q;
}

std::vector<int> Polytope::facets_containing(const Face& face) const {
  std::vector<int> out;
  for (int f = 0; f < facet_count(); ++f) {
    bool all = true;
    for (int v : face.vertices)
      if (!incidence_[v][f]) { all = false; break; }
    if (all) out.push_back(f);
  }
  return out;
}

}  // namespace polyorder
