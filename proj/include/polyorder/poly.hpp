#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyorder/rational.hpp"

namespace polyorder {

/// Exact sparse multivariate polynomial over the rationals. Terms map a dense
/// exponent vector (length = variable count) to a nonzero coefficient; the
/// map order is the canonical term order used for serialization.
class SparsePoly {
 public:
  using ExpVec = std::vector<int>;
  using TermMap = std::map<ExpVec, Rational>;

  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly variable(int nvars, int index);
  static SparsePoly monomial(int nvars, ExpVec exps, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  int total_degree() const;  // -1 for the zero polynomial

  Rational coeff(const ExpVec& exps) const;
  void add_term(const ExpVec& exps, const Rational& c);

  Rational evaluate(const QVec& point) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly scaled(const Rational& c) const;
  SparsePoly pow(unsigned e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }
  friend bool operator<(const SparsePoly& a, const SparsePoly& b);  // canonical order for keys

  std::string str() const;
  static std::string var_name(int nvars, int index);

 private:
  void check_same(const SparsePoly& o) const;

  int nvars_;
  TermMap terms_;
};

}  // namespace polyorder
