#pragma once

#include <optional>
#include <vector>

#include "polyorder/rational.hpp"

namespace polyorder {

Rational dot(const QVec& a, const QVec& b);
QVec mat_vec(const QMat& A, const QVec& x);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_scale(const QVec& a, const Rational& c);
bool is_zero_vec(const QVec& a);

/// Reduced row echelon form in place. Returns the rank; pivot columns are
/// appended to *pivot_cols when given.
int rref_in_place(QMat& M, std::vector<int>* pivot_cols = nullptr);

int rank(QMat M);

/// Exact description of the solution set of A x = b: a particular solution
/// plus a basis of the nullspace, or inconsistency.
struct LinearSolveResult {
  bool consistent = false;
  QVec particular;              // valid when consistent
  std::vector<QVec> nullspace;  // empty iff the solution is unique
  bool unique() const { return consistent && nullspace.empty(); }
};

LinearSolveResult linear_solve(const QMat& A, const QVec& b);

/// Basis of {x : A x = 0}.
std::vector<QVec> nullspace_basis(const QMat& A);

}  // namespace polyorder
