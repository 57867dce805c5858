#pragma once

#include <string>
#include <vector>

#include "polyorder/polytope.hpp"

namespace polyorder {

/// Witness that K is affinely equivalent to a product of simplices: the
/// facets partition into classes, each class carries strictly positive
/// coefficients combining to the constant 1, and the class linear spans are
/// independent with dimensions summing to n.
struct SimplexProductWitness {
  std::vector<std::vector<int>> classes;  // facet indices per class
  std::vector<QVec> coefficients;         // positive a_j per class, same shape
};

struct StructureResult {
  bool is_product = false;
  SimplexProductWitness witness;  // when is_product
  std::string reason;             // when not
};

/// Exhaustive facet-partition search with facet-count pruning; the first
/// witness in lexicographic partition order is returned.
StructureResult recognize_simplex_product(const Polytope& K);

struct SimpleVertexCheck {
  bool simple = false;
  std::vector<int> offending;  // vertices on more than n facets
};

/// Every vertex lies on exactly n facets?
SimpleVertexCheck simple_vertex_check(const Polytope& K);

}  // namespace polyorder
