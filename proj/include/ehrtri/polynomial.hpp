#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ehrtri/lattice.hpp"

namespace ehrtri {

/// Integer polynomial in one variable t; coefficient i multiplies t^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly monomial(std::size_t degree, Integer coeff = 1);
  /// (1 - t)^k
  static UniPoly one_minus_t_pow(std::size_t k);
  /// 1 + t + ... + t^n
  static UniPoly geometric(std::size_t n);

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Integer at_one() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

std::string to_string(const UniPoly& p);

/// Sparse Laurent polynomial with integer-vector exponents. No zero
/// coefficients are stored; iteration is lexicographic in the exponent.
class LaurentPoly {
 public:
  using Terms = std::map<IntVector, Integer>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly one(std::size_t nvars);
  static LaurentPoly monomial(IntVector exponent, Integer coeff = 1);
  /// 1 - x^v
  static LaurentPoly one_minus(const IntVector& v);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(const IntVector& exponent) const;

  void add_term(const IntVector& exponent, const Integer& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

std::string to_string(const LaurentPoly& p);

}  // namespace ehrtri
