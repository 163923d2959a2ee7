#pragma once

// Lattice points of the half-open and (relatively) open parallelepipeds
// spanned by simplicial cone generators, and the integer/fractional
// decomposition of lattice points of a subdivision.
//
// Boxes never contain the zero point: Box(tau, tau) excludes it, and the box
// of the zero cone is empty.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ehrtri/fan.hpp"
#include "ehrtri/polynomial.hpp"

namespace ehrtri {

struct BoxPoint {
  LatticePoint point;
  /// point = sum a_i g_i with every a_i in [0, 1).
  RatVector fractional_coords;
  std::optional<Integer> height;
};

/// Every lattice point sum a_i g_i with a_i in [0, 1), the origin included,
/// in lexicographic order of the coefficients. The count is the cone index.
std::vector<BoxPoint> cell_points(std::span<const LatticePoint> generators);

/// Cell points with a_i != 0 wherever `open[i]` holds, zero excluded.
std::vector<BoxPoint> box_points(std::span<const LatticePoint> generators,
                                 const std::vector<bool>& open);

/// Box(tau, lambda) for faces lambda ⊆ tau of a subdivision.
std::vector<BoxPoint> box_points(const Subdivision& delta, const Face& tau,
                                 const Face& lambda = {});

void assign_heights(std::vector<BoxPoint>& points, const Grading& u);

/// Sum of t^u(p) over Box(tau, lambda).
UniPoly box_polynomial(const Subdivision& delta, const Face& tau,
                       const Face& lambda, const Grading& u);

/// Box(tau, lambda) for every face tau ⊇ lambda whose box is nonempty,
/// gathered from the cells of the maximal cones containing lambda. With
/// lambda = 0 these are the open boxes Box(tau).
std::map<Face, std::vector<BoxPoint>> relative_boxes(const Subdivision& delta,
                                                     const Face& lambda = {});

struct FractionalDecomposition {
  /// Unique cone containing the point in its relative interior.
  Face carrier;
  /// Coefficients on the carrier rays: floor parts, all positive off the
  /// box face.
  IntVector integer_coeffs;
  RatVector coefficients;
  LatticePoint fractional_part;
  /// Face whose open box contains the fractional part (empty when it is 0).
  Face box_face;
};

FractionalDecomposition fractional_part(const LatticePoint& v,
                                        const Subdivision& delta);

}  // namespace ehrtri
