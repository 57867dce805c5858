#pragma once

#include <string>

#include "polyorder/poly.hpp"
#include "polyorder/rational.hpp"

namespace polyorder {

/// Affine-linear form a0 + a1 x1 + ... + an xn.
struct LinearForm {
  Rational constant;
  QVec coeffs;

  LinearForm() = default;
  LinearForm(Rational c, QVec a) : constant(std::move(c)), coeffs(std::move(a)) {}

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool linear_part_zero() const;
  Rational eval(const QVec& point) const;

  /// Scales to coprime integer coefficients, preserving orientation.
  LinearForm normalized() const;

  SparsePoly to_poly() const;
  /// Requires total degree <= 1.
  static LinearForm from_poly(const SparsePoly& p);

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant == b.constant && a.coeffs == b.coeffs;
  }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.coeffs != b.coeffs) {
      for (size_t i = 0; i < a.coeffs.size() && i < b.coeffs.size(); ++i)
        if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
      return a.coeffs.size() < b.coeffs.size();
    }
    return a.constant < b.constant;
  }

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm scaled(const Rational& c) const;

  std::string str() const { return to_poly().str(); }
};

}  // namespace polyorder
