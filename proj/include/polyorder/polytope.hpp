#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyorder/linear_form.hpp"
#include "polyorder/rational.hpp"

namespace polyorder {

/// Input rejected: the vertex set does not affinely span R^n. Carries a
/// nonzero form vanishing on every input point.
struct NotFullDimensionalError : std::runtime_error {
  LinearForm dependency;
  explicit NotFullDimensionalError(LinearForm d)
      : std::runtime_error("point set is not full-dimensional (affine dependency: " + d.str() + " = 0)"),
        dependency(std::move(d)) {}
};

/// Input rejected: the halfspace intersection is unbounded along `ray`.
struct UnboundedRegionError : std::runtime_error {
  QVec ray;
  explicit UnboundedRegionError(QVec r) : std::runtime_error("halfspace region is unbounded"), ray(std::move(r)) {}
};

/// Input rejected: the halfspace intersection has empty interior.
struct EmptyInteriorError : std::runtime_error {
  explicit EmptyInteriorError(const std::string& detail)
      : std::runtime_error("halfspace region has empty interior: " + detail) {}
};

/// Affine flat: a point plus a direction basis, or the empty set.
struct Flat {
  bool empty = true;
  QVec point;
  std::vector<QVec> basis;

  int dim() const { return empty ? -1 : static_cast<int>(basis.size()); }
  bool contains_point(const QVec& p) const;
  bool contains(const Flat& other) const;
  friend bool operator==(const Flat& a, const Flat& b) { return a.contains(b) && b.contains(a); }
};

/// A face of a polytope: the common zero set of a facet subset, carried with
/// its vertex set, dimension, affine hull and a relative-interior point.
struct Face {
  std::vector<int> facets;    // all facets containing the face
  std::vector<int> vertices;  // indices into the polytope vertex list
  int dim = -1;
  Flat affine_hull;
  QVec rel_interior;
};

/// Compact convex polytope with interior in R^n, kept in dual representation:
/// the vertex list and the irredundant normalized facet forms, plus the
/// vertex-facet incidence matrix.
class Polytope {
 public:
  static Polytope from_vertices(const std::vector<QVec>& points);
  static Polytope from_halfspaces(const std::vector<LinearForm>& forms);

  int dim() const { return n_; }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<LinearForm>& facet_forms() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  bool incident(int vertex, int facet) const { return incidence_[vertex][facet]; }
  /// Facet indices through a vertex.
  std::vector<int> facets_of_vertex(int vertex) const;

  bool contains(const QVec& point) const;
  void bounding_box(QVec& lo, QVec& hi) const;

  /// Intersection of the chosen facets with K (as a face, when nonempty)
  /// together with the intersection of their affine hulls.
  struct FaceQuery {
    std::optional<Face> face;
    Flat hyperplane_intersection;
  };
  FaceQuery face_of(const std::vector<int>& facet_subset) const;

  /// Exactly the facets whose vertex sets contain the face's vertex set.
  std::vector<int> facets_containing(const Face& face) const;

  Face face_from_vertices(const std::vector<int>& vertex_indices) const;

 private:
  Polytope() = default;

  int n_ = 0;
  std::vector<QVec> vertices_;
  std::vector<LinearForm> facets_;
  std::vector<std::vector<bool>> incidence_;
};

}  // namespace polyorder
