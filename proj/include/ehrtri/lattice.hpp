#pragma once

// Exact integer linear algebra over Z: normal forms, lattice coordinate
// maps, primitive vectors and simplicial cone indices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehrtri/error.hpp"

namespace ehrtri {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Integer coordinates with respect to a lattice basis.
using LatticePoint = IntVector;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Columns become the columns of the matrix; all must have length `rows`.
  static IntMatrix from_columns(std::span<const IntVector> columns,
                                std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
std::string to_string(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// H = M * U, U unimodular. H is column-style lower echelon: the pivot of
/// each pivot row is positive and entries left of it lie in [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

/// S = U * M * V, U and V unimodular, S diagonal with s1 | s2 | ... and
/// nonnegative entries.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::vector<Integer> invariant_factors() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// Unique solution of A x = b when A has full column rank; nullopt when the
/// system is inconsistent. Throws DependentGenerators when A is rank
/// deficient.
std::optional<RatVector> solve_exact(const IntMatrix& a, const RatVector& b);

/// Basis of { x : rows * x = 0 } over Q (each row has length `vars`).
std::vector<RatVector> kernel_basis(const std::vector<RatVector>& rows,
                                    std::size_t vars);

/// Decides whether { x : A x = b, x >= 0 } is nonempty by Gaussian
/// elimination of the equalities followed by Fourier-Motzkin elimination.
bool nonnegative_solution_exists(const std::vector<RatVector>& a,
                                 const RatVector& b);

/// A full-rank lattice N' in Q^d, stored as D times a Hermite basis.
class CoordinateMap {
 public:
  CoordinateMap() = default;
  /// `generators` is d x k (k >= d) with columns D * (lattice generators).
  CoordinateMap(Integer denominator, const IntMatrix& generators);

  static CoordinateMap standard(std::size_t dim);

  std::size_t dim() const noexcept { return basis_.rows(); }
  const Integer& denominator() const noexcept { return denominator_; }
  /// d x d, columns are D * (basis vectors), in Hermite normal form.
  const IntMatrix& basis() const noexcept { return basis_; }

  std::optional<LatticePoint> try_embed(const RatVector& ambient) const;
  LatticePoint embed(const RatVector& ambient) const;
  /// Input is D * ambient.
  LatticePoint embed_scaled(const IntVector& scaled) const;

  RatVector to_ambient(const LatticePoint& p) const;
  /// Returns D * ambient.
  IntVector to_scaled_ambient(const LatticePoint& p) const;

  friend bool operator==(const CoordinateMap&, const CoordinateMap&) = default;

 private:
  Integer denominator_ = 1;
  IntMatrix basis_;
};

std::vector<LatticePoint> embed_points(std::span<const RatVector> points,
                                       const CoordinateMap& map);

/// The lattice vector on the ray with coprime coordinates.
LatticePoint primitive(const IntVector& v);
LatticePoint primitive_generator(const RatVector& ray, const CoordinateMap& map);

/// Order of (N ∩ span) / (Z-span of generators). Equals 1 iff the cone is
/// unimodular.
Integer cone_index(std::span<const LatticePoint> generators);

Integer dot(const IntVector& a, const IntVector& b);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
RatVector to_rational(const IntVector& v);

}  // namespace ehrtri
