#include "ehrtri/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace ehrtri {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
    }
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorCode::InvalidInput, "column length mismatch", j);
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::InvalidInput, "matrix-vector shape mismatch");
  }
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

// col_a <- p*col_a + q*col_b ; col_b <- r*col_a + s*col_b (simultaneously)
void mix_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& p,
                 const Integer& q, const Integer& r, const Integer& s) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = m(i, a);
    Integer y = m(i, b);
    m(i, a) = p * x + q * y;
    m(i, b) = r * x + s * y;
  }
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// col_dst += factor * col_src
void add_column(IntMatrix& m, std::size_t dst, std::size_t src,
                const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

// row_dst += factor * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src,
             const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

struct Echelon {
  std::vector<RatVector> rows;  // reduced row echelon form of [A | b]
  std::vector<std::size_t> pivots;
  bool consistent = true;
};

// Reduced row echelon form of the augmented system; the last column is the
// right-hand side and never becomes a pivot.
Echelon reduce(std::vector<RatVector> rows, std::size_t vars) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < vars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = c; k <= vars; ++k) rows[i][k] -= f * rows[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][vars] != 0) e.consistent = false;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return reduce(std::move(rows), m.cols()).pivots.size();
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.rows() && k < h.cols(); ++i) {
    for (std::size_t j = k + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0) continue;
      if (h(i, k) == 0) {
        swap_columns(h, k, j);
        swap_columns(u, k, j);
        continue;
      }
      Integer a = h(i, k);
      Integer b = h(i, j);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      Integer bg = -b / g;
      Integer ag = a / g;
      mix_columns(h, k, j, s, t, bg, ag);
      mix_columns(u, k, j, s, t, bg, ag);
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      negate_column(h, k);
      negate_column(u, k);
    }
    const Integer pivot = h(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      add_column(h, j, k, -q);
      add_column(u, j, k, -q);
    }
    ++k;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    f.push_back(S(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = s.rows(), pc = s.cols();
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (pr == s.rows() || abs(s(i, j)) < abs(s(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == s.rows()) return {std::move(s), std::move(u), std::move(v)};
      if (pr != t) {
        swap_rows(s, t, pr);
        swap_rows(u, t, pr);
      }
      if (pc != t) {
        swap_columns(s, t, pc);
        swap_columns(v, t, pc);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row(s, i, t, -q);
        add_row(u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_column(s, j, t, -q);
        add_column(v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: pull in a row whose entries the pivot does not divide.
      std::size_t bad = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      if (bad == s.rows()) break;
      add_row(s, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::optional<RatVector> solve_exact(const IntMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidInput, "right-hand side length mismatch");
  }
  std::vector<RatVector> rows(a.rows(), RatVector(a.cols() + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    rows[i][a.cols()] = b[i];
  }
  Echelon e = reduce(std::move(rows), a.cols());
  if (e.pivots.size() < a.cols()) {
    throw Error(ErrorCode::DependentGenerators,
                "columns are linearly dependent");
  }
  if (!e.consistent) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[e.pivots[r]] = e.rows[r][a.cols()];
  return x;
}

std::vector<RatVector> kernel_basis(const std::vector<RatVector>& rows,
                                    std::size_t vars) {
  std::vector<RatVector> aug;
  aug.reserve(rows.size());
  for (const auto& r : rows) {
    RatVector a = r;
    a.resize(vars + 1);
    aug.push_back(std::move(a));
  }
  Echelon e = reduce(std::move(aug), vars);
  std::vector<RatVector> basis;
  for (std::size_t c = 0, p = 0; c < vars; ++c) {
    if (p < e.pivots.size() && e.pivots[p] == c) {
      ++p;
      continue;
    }
    RatVector k(vars);
    k[c] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k[e.pivots[r]] = -e.rows[r][c];
    basis.push_back(std::move(k));
  }
  return basis;
}

namespace {

struct Inequality {
  RatVector coeffs;  // coeffs . x <= rhs
  Rational rhs;
  bool operator<(const Inequality& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return rhs < o.rhs;
  }
};

// Scales so the first nonzero coefficient has absolute value one. Returns
// false for a constraint with all-zero coefficients.
bool normalize(Inequality& q) {
  auto it = std::find_if(q.coeffs.begin(), q.coeffs.end(),
                         [](const Rational& c) { return c != 0; });
  if (it == q.coeffs.end()) return false;
  Rational scale = 1 / abs(*it);
  for (auto& c : q.coeffs) c *= scale;
  q.rhs *= scale;
  return true;
}

constexpr std::size_t kFourierMotzkinBudget = 200000;

}  // namespace

bool nonnegative_solution_exists(const std::vector<RatVector>& a,
                                 const RatVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidInput, "feasibility system shape mismatch");
  }
  const std::size_t vars = a.empty() ? 0 : a.front().size();
  std::vector<RatVector> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector r = a[i];
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  Echelon e = reduce(std::move(rows), vars);
  if (!e.consistent) return false;

  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0, p = 0; c < vars; ++c) {
    if (p < e.pivots.size() && e.pivots[p] == c) {
      ++p;
    } else {
      free_vars.push_back(c);
    }
  }
  const std::size_t k = free_vars.size();

  std::set<Inequality> system;
  auto add = [&](Inequality q) {
    if (!normalize(q)) return q.rhs >= 0;
    system.insert(std::move(q));
    return true;
  };
  // Pivot variables: x_p = rhs - sum alpha_f x_f >= 0.
  for (const auto& row : e.rows) {
    Inequality q{RatVector(k), row[vars]};
    for (std::size_t f = 0; f < k; ++f) q.coeffs[f] = row[free_vars[f]];
    if (!add(std::move(q))) return false;
  }
  for (std::size_t f = 0; f < k; ++f) {
    Inequality q{RatVector(k), 0};
    q.coeffs[f] = -1;
    add(std::move(q));
  }

  for (std::size_t var = k; var-- > 0;) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (const auto& q : system) {
      if (q.coeffs[var] > 0) {
        pos.push_back(q);
      } else if (q.coeffs[var] < 0) {
        neg.push_back(q);
      } else {
        next.insert(q);
      }
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Inequality q{RatVector(k), 0};
        const Rational sp = 1 / p.coeffs[var];
        const Rational sn = -1 / n.coeffs[var];
        for (std::size_t c = 0; c < k; ++c)
          q.coeffs[c] = p.coeffs[c] * sp + n.coeffs[c] * sn;
        q.coeffs[var] = 0;
        q.rhs = p.rhs * sp + n.rhs * sn;
        if (!normalize(q)) {
          if (q.rhs < 0) return false;
          continue;
        }
        next.insert(std::move(q));
        if (next.size() > kFourierMotzkinBudget) {
          throw Error(ErrorCode::InvalidInput,
                      "Fourier-Motzkin elimination exceeded its budget");
        }
      }
    system = std::move(next);
  }
  return true;
}

CoordinateMap::CoordinateMap(Integer denominator, const IntMatrix& generators)
    : denominator_(std::move(denominator)) {
  if (denominator_ <= 0) {
    throw Error(ErrorCode::InvalidInput, "denominator must be positive");
  }
  const std::size_t d = generators.rows();
  HermiteForm hf = hermite_normal_form(generators);
  basis_ = IntMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (i >= hf.H.cols() || hf.H(i, i) == 0) {
      throw Error(ErrorCode::InvalidInput,
                  "lattice generators do not span a full-rank lattice");
    }
    for (std::size_t r = 0; r < d; ++r) basis_(r, i) = hf.H(r, i);
  }
}

CoordinateMap CoordinateMap::standard(std::size_t dim) {
  return CoordinateMap(1, IntMatrix::identity(dim));
}

LatticePoint CoordinateMap::embed_scaled(const IntVector& scaled) const {
  if (scaled.size() != dim()) {
    throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
  }
  LatticePoint x(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Integer rest = scaled[i];
    for (std::size_t j = 0; j < i; ++j) rest -= basis_(i, j) * x[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis_(i, i).get_mpz_t())) {
      throw Error(ErrorCode::NotInLattice, "point is not in the lattice");
    }
    mpz_divexact(x[i].get_mpz_t(), rest.get_mpz_t(), basis_(i, i).get_mpz_t());
  }
  return x;
}

std::optional<LatticePoint> CoordinateMap::try_embed(
    const RatVector& ambient) const {
  if (ambient.size() != dim()) {
    throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
  }
  IntVector scaled(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational v = ambient[i] * denominator_;
    if (v.get_den() != 1) return std::nullopt;
    scaled[i] = v.get_num();
  }
  try {
    return embed_scaled(scaled);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInLattice) return std::nullopt;
    throw;
  }
}

LatticePoint CoordinateMap::embed(const RatVector& ambient) const {
  auto p = try_embed(ambient);
  if (!p) throw Error(ErrorCode::NotInLattice, "point is not in the lattice");
  return *p;
}

IntVector CoordinateMap::to_scaled_ambient(const LatticePoint& p) const {
  return basis_ * p;
}

RatVector CoordinateMap::to_ambient(const LatticePoint& p) const {
  IntVector s = to_scaled_ambient(p);
  RatVector out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = Rational(s[i], denominator_);
    out[i].canonicalize();
  }
  return out;
}

std::vector<LatticePoint> embed_points(std::span<const RatVector> points,
                                       const CoordinateMap& map) {
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = map.try_embed(points[i]);
    if (!p) {
      throw Error(ErrorCode::NotInLattice,
                  "point " + std::to_string(i) + " is not in the lattice", i);
    }
    out.push_back(std::move(*p));
  }
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

LatticePoint primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "zero vector has no ray");
  LatticePoint out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

LatticePoint primitive_generator(const RatVector& ray,
                                 const CoordinateMap& map) {
  if (ray.size() != map.dim()) {
    throw Error(ErrorCode::InvalidInput, "ray dimension mismatch");
  }
  // Rational lattice coordinates by forward substitution.
  RatVector x(map.dim());
  const IntMatrix& b = map.basis();
  for (std::size_t i = 0; i < map.dim(); ++i) {
    Rational rest = ray[i] * map.denominator();
    for (std::size_t j = 0; j < i; ++j) rest -= b(i, j) * x[j];
    x[i] = rest / b(i, i);
  }
  Integer lcm = 1;
  for (const auto& c : x)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntVector scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational s = x[i] * lcm;
    scaled[i] = s.get_num();
  }
  return primitive(scaled);
}

Integer cone_index(std::span<const LatticePoint> generators) {
  if (generators.empty()) return 1;
  const std::size_t n = generators.front().size();
  IntMatrix g = IntMatrix::from_columns(generators, n);
  if (generators.size() > n) {
    throw Error(ErrorCode::DependentGenerators,
                "more generators than the lattice rank");
  }
  SmithForm sf = smith_normal_form(g);
  Integer index = 1;
  for (const auto& f : sf.invariant_factors()) {
    if (f == 0) {
      throw Error(ErrorCode::DependentGenerators,
                  "cone generators are linearly dependent");
    }
    index *= f;
  }
  return index;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidInput, "dot product length mismatch");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

}  // namespace ehrtri
