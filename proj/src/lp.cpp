#include "polyorder/lp.hpp"

#include <algorithm>

#include "polyorder/linalg.hpp"

namespace polyorder {

namespace {

// Dense simplex tableau over exact rationals; rhs is the last column.
struct Tableau {
  QMat T;                  // m x width
  std::vector<int> basis;  // basis[i] = column basic in row i
  QVec cost;               // reduced costs, size width - 1
  Rational objective;      // current objective value
  size_t m = 0;
  size_t width = 0;
  size_t enter_limit = 0;  // entering restricted to columns [0, enter_limit)

  size_t rhs() const { return width - 1; }

  void pivot(size_t row, size_t col) {
    const Rational inv = Rational(1) / T[row][col];
    for (auto& v : T[row]) v *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || T[i][col].is_zero()) continue;
      const Rational f = T[i][col];
      for (size_t j = 0; j < width; ++j) T[i][j] -= f * T[row][j];
    }
    if (!cost[col].is_zero()) {
      const Rational f = cost[col];
      for (size_t j = 0; j < rhs(); ++j) cost[j] -= f * T[row][j];
      objective += f * T[row][rhs()];
    }
    basis[row] = static_cast<int>(col);
  }

  // Minimizes the cost row with Bland's rule. Returns false when unbounded.
  bool run() {
    for (;;) {
      size_t enter = enter_limit;
      for (size_t j = 0; j < enter_limit; ++j) {
        if (cost[j].sign() < 0) { enter = j; break; }
      }
      if (enter == enter_limit) return true;  // optimal
      size_t leave = m;
      for (size_t i = 0; i < m; ++i) {
        if (T[i][enter].sign() <= 0) continue;
        if (leave == m) { leave = i; continue; }
        const Rational lhs = T[i][rhs()] * T[leave][enter];
        const Rational rhl = T[leave][rhs()] * T[i][enter];
        if (lhs < rhl || (lhs == rhl && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

bool lp_outcome_consistent(const LPProblem& p, const LPOutcome& out) {
  const size_t m = p.A.size();
  const size_t n = p.signs.size();
  if (out.feasible) {
    if (out.solution.size() != n) return false;
    const QVec ax = mat_vec(p.A, out.solution);
    for (size_t i = 0; i < m; ++i)
      if (ax[i] != p.b[i]) return false;
    for (size_t j = 0; j < n; ++j)
      if (p.signs[j] == VarSign::NonNegative && out.solution[j].sign() < 0) return false;
    return true;
  }
  if (out.farkas.size() != m) return false;
  for (size_t j = 0; j < n; ++j) {
    Rational yta;
    for (size_t i = 0; i < m; ++i) yta += out.farkas[i] * p.A[i][j];
    if (p.signs[j] == VarSign::NonNegative && yta.sign() < 0) return false;
    if (p.signs[j] == VarSign::Free && !yta.is_zero()) return false;
  }
  return dot(out.farkas, p.b).sign() < 0;
}

LPOutcome lp_solve(const LPProblem& p) {
  const size_t m = p.A.size();
  const size_t n = p.signs.size();
  if (p.b.size() != m) throw std::invalid_argument("lp_solve: |b| != rows of A");
  for (const auto& row : p.A)
    if (row.size() != n) throw std::invalid_argument("lp_solve: A column count != sign count");
  if (p.objective && p.objective->size() != n)
    throw std::invalid_argument("lp_solve: objective size mismatch");

  // Free variables split as x = u - v with u, v >= 0.
  std::vector<std::pair<int, int>> colmap;  // (original var, sign)
  for (size_t j = 0; j < n; ++j) {
    colmap.emplace_back(static_cast<int>(j), +1);
    if (p.signs[j] == VarSign::Free) colmap.emplace_back(static_cast<int>(j), -1);
  }
  const size_t N = colmap.size();

  Tableau t;
  t.m = m;
  t.width = N + m + 1;
  t.enter_limit = N;  // artificials never re-enter
  t.T.assign(m, QVec(t.width, Rational(0)));
  t.basis.assign(m, 0);
  std::vector<int> rowsign(m, +1);
  for (size_t i = 0; i < m; ++i) {
    const int rs = p.b[i].sign() < 0 ? -1 : +1;
    rowsign[i] = rs;
    for (size_t jt = 0; jt < N; ++jt) {
      const auto [j, s] = colmap[jt];
      t.T[i][jt] = p.A[i][j] * Rational(rs * s);
    }
    t.T[i][N + i] = Rational(1);
    t.T[i][t.rhs()] = p.b[i] * Rational(rs);
    t.basis[i] = static_cast<int>(N + i);
  }

  // Phase 1: minimize the sum of artificials. Against the artificial basis
  // the reduced cost of structural column j is -sum of its rows, of an
  // artificial 0, and the objective value is sum of the rhs.
  t.cost.assign(N + m, Rational(0));
  t.objective = Rational(0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < N; ++j) t.cost[j] -= t.T[i][j];
    t.objective += t.T[i][t.rhs()];
  }
  if (!t.run()) throw std::logic_error("lp_solve: phase 1 unbounded");

  LPOutcome out;
  if (t.objective.sign() > 0) {
    // Infeasible. y = c_B B^{-1} is read off the reduced costs under the
    // artificial columns (cost 1 each): cost[N+i] = 1 - y_i. In the
    // preprocessed system yT A' <= 0 and yT b' > 0; undo the row signs and
    // flip to the stated convention.
    out.feasible = false;
    out.farkas.assign(m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
      const Rational yi = Rational(1) - t.cost[N + i];
      out.farkas[i] = -(yi * Rational(rowsign[i]));
    }
    if (!lp_outcome_consistent(p, out))
      throw std::logic_error("lp_solve: invalid Farkas certificate");
    return out;
  }

  // Feasible. Drive remaining basic artificials out or drop redundant rows.
  for (size_t i = 0; i < t.m;) {
    if (t.basis[i] < static_cast<int>(N)) { ++i; continue; }
    size_t col = N;
    for (size_t j = 0; j < N; ++j)
      if (!t.T[i][j].is_zero()) { col = j; break; }
    if (col < N) {
      t.pivot(i, col);
      ++i;
    } else {
      t.T.erase(t.T.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
      --t.m;
    }
  }

  // Phase 2 works on a slim tableau without the artificial block.
  Tableau s;
  s.m = t.m;
  s.width = N + 1;
  s.enter_limit = N;
  s.T.assign(s.m, QVec(s.width, Rational(0)));
  s.basis = t.basis;
  for (size_t i = 0; i < s.m; ++i) {
    for (size_t j = 0; j < N; ++j) s.T[i][j] = t.T[i][j];
    s.T[i][N] = t.T[i][t.rhs()];
  }
  s.cost.assign(N, Rational(0));
  s.objective = Rational(0);

  if (p.objective) {
    QVec ct(N, Rational(0));
    for (size_t jt = 0; jt < N; ++jt) {
      const auto [j, sg] = colmap[jt];
      ct[jt] = (*p.objective)[j] * Rational(sg);
    }
    s.cost = ct;
    for (size_t i = 0; i < s.m; ++i) {
      const int bj = s.basis[i];
      if (ct[bj].is_zero()) continue;
      const Rational f = ct[bj];
      for (size_t j = 0; j < N; ++j) s.cost[j] -= f * s.T[i][j];
      s.objective += f * s.T[i][N];
    }
    if (!s.run()) throw LpUnboundedError("lp_solve: objective unbounded below");
  }

  QVec xt(N, Rational(0));
  for (size_t i = 0; i < s.m; ++i) xt[s.basis[i]] = s.T[i][N];
  out.feasible = true;
  out.solution.assign(n, Rational(0));
  for (size_t jt = 0; jt < N; ++jt) {
    const auto [j, sg] = colmap[jt];
    if (sg > 0)
      out.solution[j] += xt[jt];
    else
      out.solution[j] -= xt[jt];
  }
  if (p.objective) out.objective_value = dot(*p.objective, out.solution);
  if (!lp_outcome_consistent(p, out))
    throw std::logic_error("lp_solve: invalid feasible solution");
  return out;
}

}  // namespace polyorder
