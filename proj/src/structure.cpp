#include "polyorder/structure.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "polyorder/linalg.hpp"
#include "polyorder/lp.hpp"

namespace polyorder {

namespace {

// Strictly positive a with sum_j a_j beta_j identically 1, chosen
// deterministically (max-margin optimum, then the unique basic solution of
// the margin face barycenter). Returns nullopt when none exists.
std::optional<QVec> positive_combination_to_one(const Polytope& K, const std::vector<int>& cls) {
  const int n = K.dim();
  const size_t k = cls.size();
  // Rows: constant coefficient = 1, every linear coefficient = 0.
  QMat A(n + 1, QVec(k, Rational(0)));
  QVec b(n + 1, Rational(0));
  for (size_t j = 0; j < k; ++j) {
    const LinearForm& f = K.facet_forms()[cls[j]];
    A[0][j] = f.constant;
    for (int i = 0; i < n; ++i) A[i + 1][j] = f.coeffs[i];
  }
  b[0] = Rational(1);

  // Maximize the margin t with a_j >= t via a = t + s.
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
  // The margin is bounded: a nonnegative kernel of the class forms would
  // contradict their strict positivity at an interior point of K.
  const LPOutcome mm = lp_solve(LPProblem::minimize(A2, b, signs, obj));
  if (!mm.feasible || mm.solution[0].sign() <= 0) return std::nullopt;
  QVec a(k);
  for (size_t j = 0; j < k; ++j) a[j] = mm.solution[0] + mm.solution[1 + j];
  return a;
}

int class_linear_rank(const Polytope& K, const std::vector<int>& cls) {
  QMat M;
  for (int f : cls) M.push_back(K.facet_forms()[f].coeffs);
  return rank(M);
}

}  // namespace

StructureResult recognize_simplex_product(const Polytope& K) {
  StructureResult res;
  const int n = K.dim();
  const int m = K.facet_count();
  const int k = m - n;  // class count forced by sum (|C_i| - 1) = n

  if (k < 1 || m > 2 * n) {
    res.reason = "facet count " + std::to_string(m) + " admits no class sizes with sum(|C|-1) = " +
                 std::to_string(n) + " and |C| >= 2";
    return res;
  }

  // Enumerate partitions into exactly k classes via restricted growth
  // strings; RGS order is the lexicographic partition order.
  std::vector<int> assign(m, 0);
  std::string deepest = "no facet partition admits positive class combinations equal to 1";
  bool had_combination_failure_only = true;

  std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
    if (i == m) {
      if (used != k) return false;
      std::vector<std::vector<int>> classes(k);
      for (int f = 0; f < m; ++f) classes[assign[f]].push_back(f);
      for (const auto& c : classes)
        if (c.size() < 2) return false;

      std::vector<QVec> coeffs;
      for (const auto& c : classes) {
        auto a = positive_combination_to_one(K, c);
        if (!a) return false;
        coeffs.push_back(std::move(a.value()));
      }
      // Per-class span dimension |C| - 1 and overall independence: one
      // dependent direction per class, so picking all linear parts must
      // give rank n after removing one per class.
      int total = 0;
      for (const auto& c : classes) {
        const int r = class_linear_rank(K, c);
        if (r != static_cast<int>(c.size()) - 1) {
          had_combination_failure_only = false;
          return false;
        }
        total += r;
      }
      QMat all;
      for (const auto& c : classes)
        for (size_t j = 0; j + 1 < c.size(); ++j) all.push_back(K.facet_forms()[c[j]].coeffs);
      if (total != n || rank(all) != n) {
        had_combination_failure_only = false;
        return false;
      }
      res.is_product = true;
      res.witness.classes = std::move(classes);
      res.witness.coefficients = std::move(coeffs);
      return true;
    }
    // Prune: remaining facets must be able to fill all k classes.
    if (used + (m - i) < k) return false;
    const int lim = std::min(used, k - 1);
    for (int c = 0; c <= lim; ++c) {
      assign[i] = c;
      if (rec(i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };

  if (!rec(0, 0)) {
    res.reason = had_combination_failure_only
                     ? deepest
                     : "class combinations found, but the class spans fail independence";
  }
  return res;
}

SimpleVertexCheck simple_vertex_check(const Polytope& K) {
  SimpleVertexCheck out;
  const int n = K.dim();
  for (size_t v = 0; v < K.vertices().size(); ++v)
    if (static_cast<int>(K.facets_of_vertex(static_cast<int>(v)).size()) != n)
      out.offending.push_back(static_cast<int>(v));
  out.simple = out.offending.empty();
  return out;
}

}  // namespace polyorder
