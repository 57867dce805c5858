#pragma once

#include <optional>

#include "polyorder/poly.hpp"

namespace polyorder {

/// Univariate helpers. All take polynomials with nvars() == 1 and throw
/// std::invalid_argument otherwise.

/// Largest j with x^j dividing p. Throws on p = 0.
int x_adic_valuation(const SparsePoly& p);

/// p / x^j; requires x^j | p.
SparsePoly shift_down(const SparsePoly& p, int j);

/// Exact quotient p / d, or nullopt when the division leaves a remainder.
std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& d);

/// Number of distinct real roots of p in the half-open interval (a, b].
/// Throws on p = 0 or a > b.
int sturm_count(const SparsePoly& p, const Rational& a, const Rational& b);

/// p(0) > 0, p(1) > 0 and no root inside (0, 1).
bool strictly_positive_on_unit_interval(const SparsePoly& p);

}  // namespace polyorder
