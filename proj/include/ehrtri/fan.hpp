#pragma once

// Simplicial cone complexes and lattice triangulations, with the face,
// link and star operators used by the generating-function formulas.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehrtri/lattice.hpp"

namespace ehrtri {

/// A cone (or simplex) as a sorted set of ray (or point) indices. The empty
/// face is the zero cone.
using Face = std::vector<std::size_t>;

Face make_face(std::vector<std::size_t> indices);
bool is_subface(const Face& small, const Face& big);
Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);
std::string to_string(const Face& f);

/// All faces of the given maximal faces, deduplicated, including the empty
/// face; ordered by size, then lexicographically.
std::vector<Face> faces_of(std::span<const Face> maximal);

/// Number of faces of each size 0..max size of the complex generated by
/// `maximal`.
std::vector<Integer> face_counts(std::span<const Face> maximal);

/// A pure simplicial subdivision of the cone it supports. Rays are primitive
/// lattice vectors in lattice coordinates.
struct Subdivision {
  std::vector<LatticePoint> rays;
  std::vector<Face> maximal_cones;
  /// Set by trusted builders; skips validate_subdivision in consumers.
  bool prevalidated = false;

  std::size_t rank() const { return rays.empty() ? 0 : rays.front().size(); }
  /// Dimension of the (pure) support.
  std::size_t dim() const {
    return maximal_cones.empty() ? 0 : maximal_cones.front().size();
  }
  std::vector<LatticePoint> generators(const Face& cone) const;
};

/// Sorts the cone index sets and checks index ranges, ray lengths and
/// purity. Geometry is left to validate_subdivision.
Subdivision make_subdivision(std::vector<LatticePoint> rays,
                             std::vector<std::vector<std::size_t>> maximal);

std::vector<Face> enumerate_faces(const Subdivision& delta);
bool contains_face(const Subdivision& delta, const Face& tau);

/// A subcomplex given by all of its faces together with its vertex set.
struct Complex {
  std::vector<Face> faces;
  Face vertices;
};

/// All cones gamma with gamma ∩ tau = 0 and gamma + tau in the subdivision.
Complex link(const Subdivision& delta, const Face& tau);
Complex link(std::span<const Face> maximal, const Face& tau);

/// Rays of the union of the maximal cones containing tau.
Face star_rays(const Subdivision& delta, const Face& tau);

/// Faces contained in every maximal cone, by dimension descending.
std::vector<Face> special_faces(const Subdivision& delta);

struct ValidationReport {
  bool ok = true;
  std::string condition;  // "primitive", "independent", "purity", ...
  std::vector<std::size_t> witnesses;
  std::string detail;
};

ValidationReport validate_subdivision(const Subdivision& delta);

/// Strictly positive linear functional on the cone lattice.
struct Grading {
  IntVector functional;

  Integer operator()(const IntVector& v) const { return dot(functional, v); }
};

/// A lattice polytope given by marked lattice points (in lattice
/// coordinates) and the indices of its vertices.
struct Polytope {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
  std::vector<std::size_t> vertex_indices;

  std::optional<std::size_t> origin_index() const;
  friend bool operator==(const Polytope&, const Polytope&) = default;
};

struct Triangulation {
  std::vector<Face> maximal_faces;  // point-index sets of size dim + 1
  std::optional<Face> special_face;
  /// Set by boundary_join; consumers skip validate_triangulation.
  bool prevalidated = false;

  /// Compares faces only.
  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.maximal_faces == b.maximal_faces &&
           a.special_face == b.special_face;
  }
};

/// Index groups of the vertices of a free sum of simplices, one group per
/// summand.
struct FreeSumStructure {
  std::vector<Face> summands;
};

/// Recognises a polytope whose vertices form a free sum of simplices with
/// the origin in the relative interior of each summand.
FreeSumStructure free_sum_structure(const Polytope& p);

/// Whether 0 lies in the interior of conv(vertices).
bool origin_in_interior(const Polytope& p);

/// Join of the origin with the boundary simplices of a simplex or of a free
/// sum of simplices. The origin is the special face.
Triangulation boundary_join(const Polytope& p);

/// Cone over P x {1}: rays are the points used by the triangulation, in
/// increasing point order.
struct LiftedTriangulation {
  Subdivision subdivision;
  Grading grading;
  std::vector<std::size_t> ray_to_point;

  /// Maps a point-index face to ray indices; throws FaceNotInComplex for
  /// points the triangulation does not use.
  Face to_rays(const Face& point_face) const;
  Face to_points(const Face& ray_face) const;
};

LiftedTriangulation lift_triangulation(const Polytope& p,
                                       const Triangulation& t);

/// Affine independence, special face containment, vertex coverage and the
/// subdivision checks of the lifted complex.
ValidationReport validate_triangulation(const Polytope& p,
                                        const Triangulation& t);

}  // namespace ehrtri
