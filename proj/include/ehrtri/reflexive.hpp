#pragma once

// Weighted reflexive simplices, reflexivity of simplices and free sums,
// the h*-product of free sums, and diagnostics on h*-vectors.

#include <cstddef>
#include <string>
#include <vector>

#include "ehrtri/ehrhart.hpp"

namespace ehrtri {

/// conv{e_1, ..., e_d, -f} with f = (a_1, ..., a_d) / b over Z^d + Z f.
struct WeightedSimplexSpec {
  std::vector<Integer> weights;
  Integer b = 1;
};

/// A polytope together with the lattice its coordinates refer to. Points
/// are in lattice coordinates of `lattice`.
struct LatticePolytope {
  Polytope polytope;
  CoordinateMap lattice;

  friend bool operator==(const LatticePolytope&,
                         const LatticePolytope&) = default;
};

/// Points are ordered [0, e_1, ..., e_d, -f]. Throws NotReflexive when the
/// weight sum is not a multiple of b (no index) or when some a_i does not
/// divide b(c + 1) (index i).
LatticePolytope weighted_simplex(const WeightedSimplexSpec& spec);
/// Same construction without the reflexivity check.
LatticePolytope build_weighted_simplex(const WeightedSimplexSpec& spec);

/// Dual-vertex integrality for a simplex or free sum of simplices with the
/// origin in its interior.
bool is_reflexive(const Polytope& p);

/// conv(P x 0, 0 x Q) over the product lattice. Points are ordered
/// [0, nonzero points of P, nonzero points of Q].
LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q);

HStarVector braun_hstar(const HStarVector& a, const HStarVector& b);

/// Weights (1 x bk, b x r) with denominator b; dimension bk + r.
WeightedSimplexSpec family_spec(long b, long k, long r);
/// (1 + ... + t^d) + (1 + ... + t^r)(t^k + ... + t^{(b-1)k}).
HStarVector family_hstar(long b, long k, long r);

struct Valley {
  std::size_t peak = 0;    // i
  std::size_t bottom = 0;  // j
  Integer depth;

  friend bool operator==(const Valley&, const Valley&) = default;
};

struct AnalysisReport {
  bool unimodal = false;
  bool palindromic = false;
  bool hibi_ok = false;
  std::vector<Integer> gstar;
  bool macaulay = false;
  std::vector<Valley> valleys;
};

AnalysisReport analyze_hstar(const HStarVector& h);

/// value^<i> from the greedy i-binomial expansion.
Integer macaulay_pseudopower(const Integer& value, std::size_t i);
bool is_macaulay(const std::vector<Integer>& g);

/// Largest m admitting i_1 < j_1 < ... < j_m < i_{m+1} with
/// h_{i_l} - h_{j_l} >= n and h_{i_{l+1}} - h_{j_l} >= n.
std::size_t valley_chain_length(const HStarVector& h, const Integer& n);

/// Free sum Q + Q' with Q' the family simplex of parameters (b, dim Q + 2, 0)
/// and its h*-vector by Braun's formula.
struct ValleyConstruction {
  LatticePolytope q_prime;
  LatticePolytope sum;
  HStarVector q_prime_hstar;
  HStarVector hstar;
  long b = 0;
  long k = 0;
};

ValleyConstruction valley_construction(const LatticePolytope& q,
                                       const HStarVector& q_hstar, long b);

/// Checks h_{kl+i} = vol(Q) + h_i(Q) for 1 <= l <= m+1 and
/// h_{k(l+1)-1} = vol(Q) for 1 <= l <= m. Returns the first failing
/// index, or nothing when the pattern holds.
std::optional<std::size_t> valley_pattern_failure(const HStarVector& product,
                                                  const HStarVector& q_hstar,
                                                  long k, long m);

}  // namespace ehrtri
