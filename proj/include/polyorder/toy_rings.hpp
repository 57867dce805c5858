#pragma once

#include "polyorder/poly.hpp"

namespace polyorder {

/// Decision procedures for the two toy orderings of the univariate
/// polynomial ring. Both are total and exact.
///
/// R1+ : x^j (1+x) f with j >= 1 and f strictly positive on [0,1], together
///       with the polynomials strictly positive on [0,1].
/// R2+ : x^j f with j in {0, 2, 3, ...} and f strictly positive on [0,1].

bool toy_r1_member(const SparsePoly& p);
bool toy_r2_member(const SparsePoly& p);

/// Order units of either toy ring: strict positivity on [0,1].
bool toy_order_unit(const SparsePoly& p);

}  // namespace polyorder
