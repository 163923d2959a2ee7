#include "ehrtri/ehrhart.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include "ehrtri/boxpoints.hpp"

namespace ehrtri {

UniPoly h_from_face_counts(const std::vector<Integer>& f, std::size_t big_d) {
  UniPoly h;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (i > big_d) {
      throw Error(ErrorCode::InvalidInput, "face larger than the dimension");
    }
    h += UniPoly::monomial(i, f[i]) * UniPoly::one_minus_t_pow(big_d - i);
  }
  return h;
}

UniPoly h_polynomial(const Triangulation& t) {
  if (t.maximal_faces.empty()) return UniPoly{1};
  return h_from_face_counts(face_counts(t.maximal_faces),
                            t.maximal_faces.front().size());
}

UniPoly h_polynomial_of_complex(const Complex& c, std::size_t big_d) {
  std::vector<Integer> f;
  for (const auto& face : c.faces) {
    if (f.size() <= face.size()) f.resize(face.size() + 1);
    f[face.size()] += 1;
  }
  return h_from_face_counts(f, big_d);
}

UniPoly link_h_polynomial(std::span<const Face> maximal, const Face& f) {
  std::vector<Face> rests;
  for (const auto& m : maximal)
    if (is_subface(f, m)) rests.push_back(face_difference(m, f));
  if (rests.empty()) {
    throw Error(ErrorCode::FaceNotInComplex,
                "face " + to_string(f) + " is not in the complex");
  }
  return h_from_face_counts(face_counts(rests),
                            maximal.front().size() - f.size());
}

HStarVector make_hstar(std::vector<Integer> coeffs) {
  HStarVector h;
  h.dim = coeffs.empty() ? 0 : coeffs.size() - 1;
  h.coeffs = std::move(coeffs);
  return h;
}

HStarVector make_hstar(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  for (long x : coeffs) c.emplace_back(x);
  return make_hstar(std::move(c));
}

std::string to_string(const HStarVector& h) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    out << (i ? "," : "") << h.coeffs[i];
  out << ')';
  return out.str();
}

namespace {

UniPoly height_polynomial(const std::vector<BoxPoint>& points,
                          const Grading& u) {
  UniPoly b;
  for (const auto& bp : points) b += UniPoly::monomial(u(bp.point).get_ui());
  return b;
}

HStarVector to_hstar(const UniPoly& p, std::size_t d) {
  if (p.degree() > static_cast<long>(d)) {
    throw Error(ErrorCode::InvalidTriangulation,
                "h* polynomial has degree above the dimension");
  }
  std::vector<Integer> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = p.coeff(i);
  for (std::size_t i = 0; i <= d; ++i) {
    if (c[i] < 0) {
      throw Error(ErrorCode::InvalidTriangulation,
                  "negative h* coefficient", i);
    }
  }
  return make_hstar(std::move(c));
}

Face default_special(const Triangulation& t) {
  if (t.special_face) return *t.special_face;
  Face common = t.maximal_faces.front();
  for (const auto& m : t.maximal_faces) common = face_intersection(common, m);
  return common;
}

}  // namespace

UniPoly hstar_betke_mcmullen(const Polytope& p, const Triangulation& t) {
  LiftedTriangulation lt = lift_triangulation(p, t);
  const Subdivision& delta = lt.subdivision;
  UniPoly h = h_polynomial(t);
  for (const auto& [face, points] : relative_boxes(delta)) {
    h += height_polynomial(points, lt.grading) *
         link_h_polynomial(delta.maximal_cones, face);
  }
  return h;
}

UniPoly hstar_special(const Polytope& p, const Triangulation& t,
                      const Face& special_points) {
  LiftedTriangulation lt = lift_triangulation(p, t);
  const Subdivision& delta = lt.subdivision;
  Face special;
  try {
    special = lt.to_rays(make_face(special_points));
  } catch (const Error&) {
    throw Error(ErrorCode::NotSpecial,
                to_string(special_points) + " is not a face of the triangulation");
  }
  for (const auto& m : delta.maximal_cones) {
    if (!is_subface(special, m)) {
      throw Error(ErrorCode::NotSpecial,
                  to_string(special_points) +
                      " is not contained in every maximal face");
    }
  }
  UniPoly h = link_h_polynomial(delta.maximal_cones, special);
  for (const auto& [face, points] : relative_boxes(delta, special)) {
    h += height_polynomial(points, lt.grading) *
         link_h_polynomial(delta.maximal_cones, face);
  }
  return h;
}

HStarVector hstar(const Polytope& p, const Triangulation& t,
                  const HStarOptions& options) {
  if (options.validate && !t.prevalidated) {
    ValidationReport r = validate_triangulation(p, t);
    if (!r.ok) {
      throw Error(ErrorCode::InvalidTriangulation,
                  "triangulation fails the " + r.condition + " check: " +
                      r.detail);
    }
  }
  if (t.maximal_faces.empty()) {
    throw Error(ErrorCode::InvalidTriangulation, "no maximal faces");
  }
  const std::size_t d = p.dim;
  std::optional<UniPoly> bm, sp;
  if (options.method != HStarMethod::SpecialSimplex)
    bm = hstar_betke_mcmullen(p, t);
  if (options.method != HStarMethod::BetkeMcMullen)
    sp = hstar_special(p, t, options.special.value_or(default_special(t)));
  if (bm && sp && *bm != *sp) {
    throw Error(ErrorCode::MethodMismatch,
                "Betke-McMullen gives " + to_string(*bm) +
                    " but the special-simplex formula gives " + to_string(*sp));
  }
  return to_hstar(bm ? *bm : *sp, d);
}

namespace {

// Facet inequalities of one dilated simplex: a point x lies in m*S iff
// sign * (adj row . (x, m)) >= 0 for every row.
struct SimplexTest {
  IntMatrix adj;  // (d+1) x (d+1)
  int sign = 1;
  std::vector<std::int64_t> adj64;
  bool fast = false;
};

SimplexTest make_test(const Polytope& p, const Face& face) {
  const std::size_t d = p.dim;
  IntMatrix a(d + 1, d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    const auto& v = p.points.at(face[j]);
    for (std::size_t k = 0; k < d; ++k) a(k, j) = v[k];
    a(d, j) = 1;
  }
  Integer det = determinant(a);
  if (det == 0) {
    throw Error(ErrorCode::InvalidTriangulation,
                "maximal face " + to_string(face) + " is degenerate");
  }
  SimplexTest test;
  test.sign = det > 0 ? 1 : -1;
  test.adj = IntMatrix(d + 1, d + 1);
  for (std::size_t c = 0; c <= d; ++c) {
    RatVector e(d + 1);
    e[c] = 1;
    RatVector col = *solve_exact(a, e);
    for (std::size_t r = 0; r <= d; ++r) {
      Rational v = col[r] * det;
      test.adj(r, c) = v.get_num();
    }
  }
  return test;
}

bool contains(const SimplexTest& s, const IntVector& x, const Integer& m) {
  const std::size_t n = x.size() + 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer acc = s.adj(r, n - 1) * m;
    for (std::size_t k = 0; k + 1 < n; ++k) acc += s.adj(r, k) * x[k];
    if (sgn(acc) * s.sign < 0) return false;
  }
  return true;
}

__int128 floor_div(__int128 a, __int128 b) {  // b > 0
  __int128 q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

__int128 ceil_div(__int128 a, __int128 b) {  // b > 0
  __int128 q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

}  // namespace

Integer count_lattice_points(const Polytope& p, const Triangulation& t,
                             std::size_t m) {
  const std::size_t d = p.dim;
  if (d == 0) return 1;
  if (t.maximal_faces.empty()) {
    throw Error(ErrorCode::InvalidTriangulation, "no maximal faces");
  }
  std::vector<SimplexTest> tests;
  for (const auto& f : t.maximal_faces) tests.push_back(make_test(p, f));

  IntVector lo(d), hi(d);
  bool first = true;
  for (const auto& f : t.maximal_faces)
    for (auto idx : f) {
      for (std::size_t k = 0; k < d; ++k) {
        Integer c = p.points[idx][k] * static_cast<unsigned long>(m);
        if (first || c < lo[k]) lo[k] = c;
        if (first || c > hi[k]) hi[k] = c;
      }
      first = false;
    }

  // 64-bit path whenever every partial sum fits comfortably in 128 bits.
  const Integer limit = Integer(1) << 40;
  bool fast = true;
  for (std::size_t k = 0; k < d; ++k)
    fast = fast && abs(lo[k]) < limit && abs(hi[k]) < limit;
  for (auto& s : tests) {
    s.fast = true;
    for (std::size_t r = 0; r <= d; ++r)
      for (std::size_t c = 0; c <= d; ++c)
        s.fast = s.fast && abs(s.adj(r, c)) < limit;
    if (s.fast) {
      s.adj64.resize((d + 1) * (d + 1));
      for (std::size_t r = 0; r <= d; ++r)
        for (std::size_t c = 0; c <= d; ++c)
          s.adj64[r * (d + 1) + c] = s.adj(r, c).get_si();
    }
    fast = fast && s.fast;
  }

  Integer count = 0;
  if (fast) {
    // Odometer over coordinates 1..d-1. Along coordinate 0 each simplex
    // cuts out an integer interval; the union of those intervals is counted.
    std::vector<std::int64_t> lo64(d), hi64(d), x(d);
    for (std::size_t k = 0; k < d; ++k) {
      lo64[k] = lo[k].get_si();
      hi64[k] = hi[k].get_si();
      x[k] = lo64[k];
    }
    const auto mm = static_cast<std::int64_t>(m);
    const std::size_t n = d + 1;
    std::vector<std::pair<__int128, __int128>> spans;
    std::uint64_t total = 0;
    while (true) {
      spans.clear();
      for (const auto& s : tests) {
        __int128 low = lo64[0], high = hi64[0];
        for (std::size_t r = 0; r < n && low <= high; ++r) {
          const std::int64_t* row = &s.adj64[r * n];
          __int128 c = static_cast<__int128>(row[n - 1]) * mm;
          for (std::size_t k = 1; k < d; ++k)
            c += static_cast<__int128>(row[k]) * x[k];
          __int128 a = row[0];
          if (s.sign < 0) {
            a = -a;
            c = -c;
          }
          // a * x0 + c >= 0
          if (a == 0) {
            if (c < 0) high = low - 1;
          } else if (a > 0) {
            low = std::max(low, ceil_div(-c, a));
          } else {
            high = std::min(high, floor_div(c, -a));
          }
        }
        if (low <= high) spans.emplace_back(low, high);
      }
      std::sort(spans.begin(), spans.end());
      __int128 covered = lo64[0] - 1;
      for (const auto& [a, b] : spans) {
        if (b <= covered) continue;
        __int128 start = std::max(a, covered + 1);
        total += static_cast<std::uint64_t>(b - start + 1);
        covered = b;
      }
      std::size_t k = 1;
      while (k < d && ++x[k] > hi64[k]) {
        x[k] = lo64[k];
        ++k;
      }
      if (k >= d) break;
    }
    count = static_cast<unsigned long>(total);
    return count;
  }

  IntVector x = lo;
  const Integer mz = static_cast<unsigned long>(m);
  while (true) {
    for (const auto& s : tests) {
      if (contains(s, x, mz)) {
        count += 1;
        break;
      }
    }
    std::size_t k = 0;
    while (k < d && ++x[k] > hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
  }
  return count;
}

HStarVector hstar_oracle(const Polytope& p, const Triangulation& t) {
  const std::size_t d = p.dim;
  std::vector<Integer> counts(d + 1);
  for (std::size_t m = 0; m <= d; ++m)
    counts[m] = count_lattice_points(p, t, m);
  UniPoly prod = UniPoly(counts) * UniPoly::one_minus_t_pow(d + 1);
  std::vector<Integer> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = prod.coeff(i);
  return make_hstar(std::move(c));
}

Integer binomial(long n, unsigned long k) {
  if (n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
  return out;
}

Integer ehrhart_coefficient(const HStarVector& h, std::size_t m) {
  Integer total = 0;
  const long d = static_cast<long>(h.dim);
  for (std::size_t j = 0; j < h.coeffs.size() && j <= m; ++j) {
    total += h.coeffs[j] *
             binomial(static_cast<long>(m - j) + d, static_cast<unsigned long>(d));
  }
  return total;
}

}  // namespace ehrtri
