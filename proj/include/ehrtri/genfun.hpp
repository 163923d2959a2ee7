#pragma once

// Multivariate h-polynomials of cone complexes, the right-hand side of the
// subdivision identity for the lattice-point generating function, truncated
// generating functions, and the specialization x^v -> t^u(v).

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "ehrtri/fan.hpp"
#include "ehrtri/polynomial.hpp"

namespace ehrtri {

inline constexpr std::size_t kDefaultTermBudget = 1000000;

/// Sum over cones tau of the complex of
///   prod_{i in tau} x^{v_i} * prod_{j in universe \ tau} (1 - x^{v_j}).
/// Throws TermBudgetExceeded when an intermediate expansion grows past
/// `term_budget` terms.
LaurentPoly h_multivariate(std::span<const LatticePoint> rays,
                           std::span<const Face> complex, const Face& universe,
                           std::size_t term_budget = kDefaultTermBudget);

LaurentPoly h_delta(const Subdivision& delta,
                    std::size_t term_budget = kDefaultTermBudget);
LaurentPoly h_link(const Subdivision& delta, const Face& tau,
                   std::size_t term_budget = kDefaultTermBudget);

/// H_{lk lambda} + sum over tau ⊇ lambda of
///   B_{tau,lambda} * H_{lk tau} * prod_{v_j not in Star tau} (1 - x^{v_j}).
/// lambda must lie in every maximal cone.
LaurentPoly rhs_generating_identity(
    const Subdivision& delta, const Face& lambda = {},
    std::size_t term_budget = kDefaultTermBudget);

/// Sum of x^v over lattice points v of the support with u(v) <= max_degree.
LaurentPoly truncated_series(const Subdivision& delta, const Grading& u,
                             std::size_t max_degree);

/// Drops every term of degree above max_degree.
LaurentPoly truncate(const LaurentPoly& p, const Grading& u,
                     std::size_t max_degree);

/// prod (1 - x^{v_i}) * series over all rays, truncated to max_degree.
LaurentPoly lhs_truncated(const Subdivision& delta, const LaurentPoly& series,
                          const Grading& u, std::size_t max_degree);

struct VerificationReport {
  bool equal = true;
  std::size_t max_degree = 0;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  /// First differing exponent in lexicographic order.
  std::optional<IntVector> witness;
  Integer lhs_coeff;
  Integer rhs_coeff;
};

/// Compares both sides in degrees <= max_degree.
VerificationReport compare_truncated(const LaurentPoly& lhs,
                                     const LaurentPoly& rhs, const Grading& u,
                                     std::size_t max_degree);

VerificationReport verify_identity(const Subdivision& delta,
                                   const Face& lambda, const Grading& u,
                                   std::size_t max_degree);

UniPoly specialize(const LaurentPoly& p, const Grading& u);

}  // namespace ehrtri
