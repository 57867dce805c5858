#include "polyorder/linalg.hpp"

#include <stdexcept>

namespace polyorder {

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec mat_vec(const QMat& A, const QVec& x) {
  QVec r;
  r.reserve(A.size());
  for (const auto& row : A) r.push_back(dot(row, x));
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_scale(const QVec& a, const Rational& c) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_zero_vec(const QVec& a) {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

int rref_in_place(QMat& M, std::vector<int>* pivot_cols) {
  if (M.empty()) return 0;
  const size_t rows = M.size();
  const size_t cols = M[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && M[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    const Rational inv = Rational(1) / M[r][c];
    for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      const Rational f = M[i][c];
      for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

int rank(QMat M) { return rref_in_place(M); }

LinearSolveResult linear_solve(const QMat& A, const QVec& b) {
  if (A.size() != b.size()) throw std::invalid_argument("linear_solve: size mismatch");
  LinearSolveResult res;
  const size_t m = A.size();
  const size_t n = m == 0 ? 0 : A[0].size();
  QMat aug(m, QVec(n + 1));
  for (size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("linear_solve: ragged matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n] = b[i];
  }
  std::vector<int> pivots;
  const int rk = rref_in_place(aug, &pivots);
  // Inconsistent iff the rightmost column is a pivot.
  if (!pivots.empty() && pivots.back() == static_cast<int>(n)) {
    res.consistent = false;
    return res;
  }
  res.consistent = true;
  res.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rk; ++i) {
    is_pivot[pivots[i]] = true;
    res.particular[pivots[i]] = aug[i][n];
  }
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec dir(n, Rational(0));
    dir[free_col] = Rational(1);
    for (int i = 0; i < rk; ++i) dir[pivots[i]] = -aug[i][free_col];
    res.nullspace.push_back(std::move(dir));
  }
  return res;
}

std::vector<QVec> nullspace_basis(const QMat& A) {
  if (A.empty()) return {};
  QVec zero(A.size(), Rational(0));
  return linear_solve(A, zero).nullspace;
}

}  // namespace polyorder
