#include "ehrtri/boxpoints.hpp"

#include <algorithm>
#include <set>

namespace ehrtri {

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rational frac_of(const Rational& q) { return q - floor_of(q); }

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x == 0; });
}

LatticePoint combine(std::span<const LatticePoint> generators,
                     const RatVector& coeffs) {
  const std::size_t n = generators.front().size();
  RatVector p(n);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) p[k] += coeffs[i] * generators[i][k];
  }
  LatticePoint out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (p[k].get_den() != 1) {
      throw Error(ErrorCode::InvalidInput,
                  "box representative is not a lattice point");
    }
    out[k] = p[k].get_num();
  }
  return out;
}

}  // namespace

std::vector<BoxPoint> cell_points(std::span<const LatticePoint> generators) {
  std::vector<BoxPoint> out;
  if (generators.empty()) {
    out.push_back({});
    return out;
  }
  const std::size_t n = generators.front().size();
  const std::size_t r = generators.size();
  if (r > n) {
    throw Error(ErrorCode::DependentGenerators,
                "more generators than the lattice rank");
  }
  SmithForm sf = smith_normal_form(IntMatrix::from_columns(generators, n));
  std::vector<Integer> factors = sf.invariant_factors();
  for (const auto& f : factors) {
    if (f == 0) {
      throw Error(ErrorCode::DependentGenerators,
                  "cone generators are linearly dependent");
    }
  }
  // Residue classes y_i = k_i / s_i, mapped through V and reduced mod 1.
  std::vector<Integer> k(r, Integer(0));
  while (true) {
    RatVector y(r);
    for (std::size_t i = 0; i < r; ++i) {
      y[i] = Rational(k[i], factors[i]);
      y[i].canonicalize();
    }
    RatVector a(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j)
        if (sf.V(i, j) != 0 && y[j] != 0) a[i] += sf.V(i, j) * y[j];
      a[i] = frac_of(a[i]);
    }
    BoxPoint bp;
    bp.point = combine(generators, a);
    bp.fractional_coords = std::move(a);
    out.push_back(std::move(bp));

    std::size_t i = 0;
    while (i < r && ++k[i] == factors[i]) {
      k[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  std::sort(out.begin(), out.end(), [](const BoxPoint& x, const BoxPoint& y) {
    return x.fractional_coords < y.fractional_coords;
  });
  return out;
}

std::vector<BoxPoint> box_points(std::span<const LatticePoint> generators,
                                 const std::vector<bool>& open) {
  if (open.size() != generators.size()) {
    throw Error(ErrorCode::InvalidInput, "openness pattern length mismatch");
  }
  std::vector<BoxPoint> out;
  for (auto& bp : cell_points(generators)) {
    if (is_zero(bp.fractional_coords)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < open.size() && ok; ++i)
      if (open[i] && bp.fractional_coords[i] == 0) ok = false;
    if (ok) out.push_back(std::move(bp));
  }
  return out;
}

std::vector<BoxPoint> box_points(const Subdivision& delta, const Face& tau,
                                 const Face& lambda) {
  if (!is_subface(lambda, tau)) {
    throw Error(ErrorCode::NotAFace,
                to_string(lambda) + " is not a face of " + to_string(tau));
  }
  if (!contains_face(delta, tau)) {
    throw Error(ErrorCode::FaceNotInComplex,
                "face " + to_string(tau) + " is not in the subdivision");
  }
  std::vector<bool> open(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i)
    open[i] = !std::binary_search(lambda.begin(), lambda.end(), tau[i]);
  return box_points(delta.generators(tau), open);
}

void assign_heights(std::vector<BoxPoint>& points, const Grading& u) {
  for (auto& bp : points) bp.height = u(bp.point);
}

namespace {

UniPoly heights_polynomial(const std::vector<BoxPoint>& points,
                           const Grading& u) {
  UniPoly b;
  for (const auto& bp : points) {
    Integer h = u(bp.point);
    if (h < 0) {
      throw Error(ErrorCode::NonPositiveGrading,
                  "grading is negative on a box point");
    }
    b += UniPoly::monomial(h.get_ui());
  }
  return b;
}

}  // namespace

UniPoly box_polynomial(const Subdivision& delta, const Face& tau,
                       const Face& lambda, const Grading& u) {
  return heights_polynomial(box_points(delta, tau, lambda), u);
}

std::map<Face, std::vector<BoxPoint>> relative_boxes(const Subdivision& delta,
                                                     const Face& lambda) {
  if (!contains_face(delta, lambda)) {
    throw Error(ErrorCode::FaceNotInComplex,
                "face " + to_string(lambda) + " is not in the subdivision");
  }
  std::map<Face, std::vector<BoxPoint>> boxes;
  std::set<LatticePoint> seen;
  for (const auto& m : delta.maximal_cones) {
    if (!is_subface(lambda, m)) continue;
    for (auto& bp : cell_points(delta.generators(m))) {
      if (is_zero(bp.fractional_coords)) continue;
      if (!seen.insert(bp.point).second) continue;
      // The point lies in Box(F, lambda) for F = support ∪ lambda.
      Face face;
      RatVector coords;
      for (std::size_t i = 0; i < m.size(); ++i) {
        bool in_lambda =
            std::binary_search(lambda.begin(), lambda.end(), m[i]);
        if (bp.fractional_coords[i] != 0 || in_lambda) {
          face.push_back(m[i]);
          coords.push_back(bp.fractional_coords[i]);
        }
      }
      bp.fractional_coords = std::move(coords);
      boxes[face].push_back(std::move(bp));
    }
  }
  for (auto& [face, pts] : boxes) {
    std::sort(pts.begin(), pts.end(), [](const BoxPoint& x, const BoxPoint& y) {
      return x.fractional_coords < y.fractional_coords;
    });
  }
  return boxes;
}

FractionalDecomposition fractional_part(const LatticePoint& v,
                                        const Subdivision& delta) {
  const std::size_t n = delta.rank();
  if (v.size() != n) {
    throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
  }
  for (const auto& m : delta.maximal_cones) {
    auto g = delta.generators(m);
    auto a = solve_exact(IntMatrix::from_columns(g, n), to_rational(v));
    if (!a) continue;
    if (std::any_of(a->begin(), a->end(),
                    [](const Rational& x) { return x < 0; }))
      continue;
    FractionalDecomposition fd;
    RatVector frac(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Rational& ai = (*a)[i];
      frac[i] = frac_of(ai);
      if (frac[i] != 0) fd.box_face.push_back(m[i]);
      if (ai == 0) continue;
      fd.carrier.push_back(m[i]);
      fd.integer_coeffs.push_back(floor_of(ai));
      fd.coefficients.push_back(ai);
    }
    fd.fractional_part = combine(g, frac);
    return fd;
  }
  throw Error(ErrorCode::OutsideSupport,
              "point is outside the support of the subdivision");
}

}  // namespace ehrtri
