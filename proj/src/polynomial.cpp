#include "ehrtri/polynomial.hpp"

#include <sstream>

namespace ehrtri {

UniPoly::UniPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UniPoly UniPoly::monomial(std::size_t degree, Integer coeff) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coeff);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::one_minus_t_pow(std::size_t k) {
  std::vector<Integer> c(k + 1);
  Integer binom = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    c[i] = (i % 2 == 0) ? binom : Integer(-binom);
    binom = binom * static_cast<unsigned long>(k - i) /
            static_cast<unsigned long>(i + 1);
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::geometric(std::size_t n) {
  return UniPoly(std::vector<Integer>(n + 1, Integer(1)));
}

Integer UniPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    Integer c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    Integer a = abs(c);
    if (i == 0 || a != 1) out << a;
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

LaurentPoly LaurentPoly::one(std::size_t nvars) {
  return monomial(IntVector(nvars), 1);
}

LaurentPoly LaurentPoly::monomial(IntVector exponent, Integer coeff) {
  LaurentPoly p(exponent.size());
  if (coeff != 0) p.terms_.emplace(std::move(exponent), std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::one_minus(const IntVector& v) {
  LaurentPoly p = one(v.size());
  p.add_term(v, -1);
  return p;
}

Integer LaurentPoly::coeff(const IntVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const IntVector& exponent, const Integer& coeff) {
  if (coeff == 0) return;
  if (terms_.empty() && nvars_ == 0) nvars_ = exponent.size();
  if (exponent.size() != nvars_) {
    throw Error(ErrorCode::InvalidInput, "exponent length mismatch");
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.nvars_ ? a.nvars_ : b.nvars_);
  IntVector e;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    Integer a = abs(c);
    bool constant = true;
    for (const auto& x : e) constant = constant && x == 0;
    if (constant) {
      out << a;
      continue;
    }
    if (a != 1) out << a << '*';
    out << "x^(";
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
    out << ')';
  }
  return out.str();
}

}  // namespace ehrtri
