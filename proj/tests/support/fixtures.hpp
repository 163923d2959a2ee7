#pragma once

// Small subdivisions shared by several test binaries.

#include "ehrtri/fan.hpp"

namespace fixtures {

/// Two cones over the square with vertices (±1,0,1), (0,±1,1), glued along
/// the diagonal. Rays v1..v4 are indices 0..3.
inline ehrtri::Subdivision square_cone() {
  return ehrtri::make_subdivision(
      {{1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {-1, 0, 1}}, {{0, 1, 2}, {1, 2, 3}});
}

inline ehrtri::Grading height3() { return {{0, 0, 1}}; }

inline ehrtri::Polytope standard_simplex(std::size_t d) {
  ehrtri::Polytope p;
  p.dim = d;
  p.points.push_back(ehrtri::LatticePoint(d));
  for (std::size_t i = 0; i < d; ++i) {
    ehrtri::LatticePoint e(d);
    e[i] = 1;
    p.points.push_back(e);
  }
  for (std::size_t i = 0; i <= d; ++i) p.vertex_indices.push_back(i);
  return p;
}

inline ehrtri::Triangulation whole(std::size_t d) {
  ehrtri::Face f;
  for (std::size_t i = 0; i <= d; ++i) f.push_back(i);
  return {{f}, std::nullopt, false};
}

/// conv{±e1, ±e2} with the origin as point 0.
inline ehrtri::Polytope cross_polytope() {
  ehrtri::Polytope p;
  p.dim = 2;
  p.points = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  p.vertex_indices = {1, 2, 3, 4};
  return p;
}

}  // namespace fixtures
