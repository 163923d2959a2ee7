#pragma once

// h-polynomials of triangulations and h*-vectors of lattice polytopes from a
// triangulation, with a lattice-point counting oracle.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ehrtri/fan.hpp"
#include "ehrtri/polynomial.hpp"

namespace ehrtri {

/// sum_i f_i t^i (1 - t)^(D - i), where f_i counts faces with i vertices.
UniPoly h_from_face_counts(const std::vector<Integer>& f, std::size_t big_d);

/// h-polynomial of the cone over the triangulation; D = d + 1.
UniPoly h_polynomial(const Triangulation& t);
UniPoly h_polynomial_of_complex(const Complex& c, std::size_t big_d);

/// h-polynomial of lk F inside the complex generated by `maximal`, with
/// D' = (size of a maximal face) - |F|.
UniPoly link_h_polynomial(std::span<const Face> maximal, const Face& f);

struct HStarVector {
  std::vector<Integer> coeffs;  // h*_0 .. h*_d
  std::size_t dim = 0;

  UniPoly polynomial() const { return UniPoly(coeffs); }
  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

HStarVector make_hstar(std::vector<Integer> coeffs);
HStarVector make_hstar(std::initializer_list<long> coeffs);
std::string to_string(const HStarVector& h);

enum class HStarMethod { BetkeMcMullen, SpecialSimplex, Both };

struct HStarOptions {
  HStarMethod method = HStarMethod::Both;
  /// Point-index face for the special-simplex formula. Defaults to the
  /// triangulation's special face, then to the largest face common to all
  /// maximal faces.
  std::optional<Face> special;
  bool validate = true;
};

/// Sum over the open boxes of the lifted triangulation:
///   h_T + sum_F B_F(t) h_{lk F}(t).
UniPoly hstar_betke_mcmullen(const Polytope& p, const Triangulation& t);
/// h_{lk F'} + sum_{F ⊇ F'} B_{F,F'}(t) h_{lk F}(t).
UniPoly hstar_special(const Polytope& p, const Triangulation& t,
                      const Face& special_points);

/// Throws InvalidTriangulation, NotSpecial, or MethodMismatch when both
/// formulas are requested and disagree.
HStarVector hstar(const Polytope& p, const Triangulation& t,
                  const HStarOptions& options = {});

/// Lattice points of m P, scanning the bounding box and testing membership
/// in the dilated simplices of T.
Integer count_lattice_points(const Polytope& p, const Triangulation& t,
                             std::size_t m);

HStarVector hstar_oracle(const Polytope& p, const Triangulation& t);

Integer binomial(long n, unsigned long k);

/// sum_j h*_j C(m - j + d, d).
Integer ehrhart_coefficient(const HStarVector& h, std::size_t m);

}  // namespace ehrtri
