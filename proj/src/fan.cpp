#include "ehrtri/fan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace ehrtri {

Face make_face(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::string to_string(const Face& f) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  out << '}';
  return out.str();
}

namespace {

bool by_size_then_lex(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool fits_in_mask(std::span<const Face> maximal) {
  for (const auto& f : maximal)
    if (!f.empty() && f.back() >= 64) return false;
  return true;
}

std::vector<std::uint64_t> face_masks(std::span<const Face> maximal) {
  std::vector<std::uint64_t> masks;
  for (const auto& f : maximal) {
    std::uint64_t full = 0;
    for (auto i : f) full |= std::uint64_t{1} << i;
    // Every submask of `full`, including 0.
    std::uint64_t sub = full;
    while (true) {
      masks.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

std::set<Face> face_set(std::span<const Face> maximal) {
  std::set<Face> faces;
  faces.insert(Face{});
  for (const auto& f : maximal) {
    const std::size_t n = f.size();
    if (n >= 63) throw Error(ErrorCode::InvalidInput, "face too large");
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1) sub.push_back(f[i]);
      faces.insert(std::move(sub));
    }
  }
  return faces;
}

}  // namespace

std::vector<Face> faces_of(std::span<const Face> maximal) {
  std::vector<Face> out;
  if (fits_in_mask(maximal)) {
    for (auto m : face_masks(maximal)) {
      Face f;
      for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1) f.push_back(i);
      out.push_back(std::move(f));
    }
    if (out.empty()) out.push_back(Face{});
  } else {
    auto s = face_set(maximal);
    out.assign(s.begin(), s.end());
  }
  std::sort(out.begin(), out.end(), by_size_then_lex);
  return out;
}

namespace {

// Adds, by size, the subsets of `u` that lie in no member of `family`.
// `taken` elements have already been placed in every counted subset.
void count_avoiding(std::uint64_t u, std::vector<std::uint64_t> family,
                    std::size_t taken, std::vector<Integer>& counts) {
  std::sort(family.begin(), family.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint64_t> kept;
  for (auto f : family) {
    if (f == u) return;
    bool covered = std::any_of(kept.begin(), kept.end(), [&](std::uint64_t g) {
      return (f & ~g) == 0;
    });
    if (!covered) kept.push_back(f);
  }
  const auto n = static_cast<std::size_t>(std::popcount(u));
  if (kept.empty()) {
    if (counts.size() < taken + n + 1) counts.resize(taken + n + 1);
    Integer binom = 1;
    for (std::size_t s = 0; s <= n; ++s) {
      counts[taken + s] += binom;
      binom = binom * static_cast<unsigned long>(n - s) /
              static_cast<unsigned long>(s + 1);
    }
    return;
  }
  std::uint64_t free_bits = u & ~kept.front();
  std::uint64_t x = free_bits & (~free_bits + 1);
  std::vector<std::uint64_t> with_x;
  for (auto& f : kept) {
    if (f & x) with_x.push_back(f & ~x);
    f &= ~x;
  }
  count_avoiding(u & ~x, std::move(kept), taken, counts);
  count_avoiding(u & ~x, std::move(with_x), taken + 1, counts);
}

}  // namespace

std::vector<Integer> face_counts(std::span<const Face> maximal) {
  Face vertices;
  for (const auto& f : maximal) vertices = face_union(vertices, f);
  std::vector<Integer> counts;
  if (vertices.size() > 64) {
    for (const auto& f : face_set(maximal)) {
      if (counts.size() <= f.size()) counts.resize(f.size() + 1);
      ++counts[f.size()];
    }
    return counts;
  }
  // A face is counted with the first maximal face containing it.
  std::vector<std::uint64_t> masks;
  for (const auto& f : maximal) {
    std::uint64_t m = 0;
    for (auto i : f) {
      auto pos = std::lower_bound(vertices.begin(), vertices.end(), i) -
                 vertices.begin();
      m |= std::uint64_t{1} << pos;
    }
    masks.push_back(m);
  }
  for (std::size_t k = 0; k < masks.size(); ++k) {
    std::vector<std::uint64_t> earlier;
    for (std::size_t j = 0; j < k; ++j) earlier.push_back(masks[k] & masks[j]);
    count_avoiding(masks[k], std::move(earlier), 0, counts);
  }
  if (counts.empty()) counts.push_back(1);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<LatticePoint> Subdivision::generators(const Face& cone) const {
  std::vector<LatticePoint> g;
  g.reserve(cone.size());
  for (auto i : cone) g.push_back(rays.at(i));
  return g;
}

Subdivision make_subdivision(std::vector<LatticePoint> rays,
                             std::vector<std::vector<std::size_t>> maximal) {
  Subdivision delta;
  if (rays.empty()) throw Error(ErrorCode::InvalidInput, "no rays");
  const std::size_t n = rays.front().size();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != n) {
      throw Error(ErrorCode::InvalidInput, "ray length mismatch", i);
    }
  }
  if (maximal.empty()) {
    throw Error(ErrorCode::InvalidInput, "no maximal cones");
  }
  for (std::size_t c = 0; c < maximal.size(); ++c) {
    Face f = make_face(std::move(maximal[c]));
    if (c > 0 && f.size() != delta.maximal_cones.front().size()) {
      throw Error(ErrorCode::InvalidInput,
                  "maximal cones have different dimensions (not pure)", c);
    }
    if (f.empty()) throw Error(ErrorCode::InvalidInput, "empty cone", c);
    if (f.back() >= rays.size()) {
      throw Error(ErrorCode::InvalidInput, "ray index out of range", c);
    }
    delta.maximal_cones.push_back(std::move(f));
  }
  delta.rays = std::move(rays);
  return delta;
}

std::vector<Face> enumerate_faces(const Subdivision& delta) {
  return faces_of(delta.maximal_cones);
}

bool contains_face(const Subdivision& delta, const Face& tau) {
  return std::any_of(delta.maximal_cones.begin(), delta.maximal_cones.end(),
                     [&](const Face& m) { return is_subface(tau, m); });
}

Complex link(std::span<const Face> maximal, const Face& tau) {
  std::vector<Face> rests;
  for (const auto& m : maximal)
    if (is_subface(tau, m)) rests.push_back(face_difference(m, tau));
  if (rests.empty()) {
    throw Error(ErrorCode::FaceNotInComplex,
                "face " + to_string(tau) + " is not in the complex");
  }
  Complex lk;
  lk.faces = faces_of(rests);
  for (const auto& r : rests) lk.vertices = face_union(lk.vertices, r);
  return lk;
}

Complex link(const Subdivision& delta, const Face& tau) {
  return link(delta.maximal_cones, tau);
}

Face star_rays(const Subdivision& delta, const Face& tau) {
  Face star;
  bool found = false;
  for (const auto& m : delta.maximal_cones) {
    if (!is_subface(tau, m)) continue;
    found = true;
    star = face_union(star, m);
  }
  if (!found) {
    throw Error(ErrorCode::FaceNotInComplex,
                "face " + to_string(tau) + " is not in the complex");
  }
  return star;
}

std::vector<Face> special_faces(const Subdivision& delta) {
  Face common = delta.maximal_cones.empty() ? Face{} : delta.maximal_cones[0];
  for (const auto& m : delta.maximal_cones)
    common = face_intersection(common, m);
  std::vector<Face> out = faces_of(std::span<const Face>(&common, 1));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

namespace {

ValidationReport fail(std::string condition, std::vector<std::size_t> w,
                      std::string detail) {
  return {false, std::move(condition), std::move(w), std::move(detail)};
}

// Whether cone(shared ∪ a) ∩ cone(shared ∪ b) is larger than cone(shared):
// equivalently, whether the images of cone(a) and cone(b) in the quotient by
// span(shared) meet away from zero.
bool relative_interiors_overlap(const std::vector<LatticePoint>& shared,
                                const std::vector<LatticePoint>& a,
                                const std::vector<LatticePoint>& b,
                                std::size_t rank) {
  std::vector<RatVector> shared_rows;
  for (const auto& s : shared) shared_rows.push_back(to_rational(s));
  std::vector<RatVector> annihilator =
      shared_rows.empty() ? std::vector<RatVector>{} :
                            kernel_basis(shared_rows, rank);
  if (shared_rows.empty()) {
    for (std::size_t i = 0; i < rank; ++i) {
      RatVector e(rank);
      e[i] = 1;
      annihilator.push_back(std::move(e));
    }
  }
  const std::size_t vars = a.size() + b.size();
  std::vector<RatVector> rows;
  RatVector rhs;
  for (const auto& w : annihilator) {
    RatVector row(vars);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < rank; ++k) row[i] += w[k] * a[i][k];
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < rank; ++k)
        row[a.size() + j] -= w[k] * b[j][k];
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  rows.emplace_back(vars, Rational(1));
  rhs.emplace_back(1);
  return nonnegative_solution_exists(rows, rhs);
}

}  // namespace

ValidationReport validate_subdivision(const Subdivision& delta) {
  const std::size_t n = delta.rank();
  std::set<LatticePoint> seen;
  for (std::size_t i = 0; i < delta.rays.size(); ++i) {
    if (delta.rays[i].size() != n) {
      return fail("primitive", {i}, "ray length differs from lattice rank");
    }
    if (content(delta.rays[i]) != 1) {
      return fail("primitive", {i}, "ray generator is not primitive");
    }
    if (!seen.insert(delta.rays[i]).second) {
      return fail("primitive", {i}, "ray generator is repeated");
    }
  }
  for (std::size_t c = 0; c < delta.maximal_cones.size(); ++c) {
    auto g = delta.generators(delta.maximal_cones[c]);
    if (g.size() > n ||
        rank(IntMatrix::from_columns(g, n)) != g.size()) {
      return fail("independent", {c}, "cone generators are dependent");
    }
  }

  const std::size_t dim = delta.dim();
  std::vector<bool> used(delta.rays.size(), false);
  for (std::size_t c = 0; c < delta.maximal_cones.size(); ++c) {
    if (delta.maximal_cones[c].size() != dim) {
      return fail("purity", {c}, "maximal cone of a different dimension");
    }
    for (auto r : delta.maximal_cones[c]) used[r] = true;
  }
  for (std::size_t r = 0; r < used.size(); ++r)
    if (!used[r]) return fail("purity", {r}, "ray not in any maximal cone");
  {
    std::vector<LatticePoint> all = delta.rays;
    if (rank(IntMatrix::from_columns(all, n)) != dim) {
      return fail("purity", {}, "rays span more than the maximal cones");
    }
  }

  const auto& cones = delta.maximal_cones;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Face shared = face_intersection(cones[i], cones[j]);
      if (relative_interiors_overlap(
              delta.generators(shared),
              delta.generators(face_difference(cones[i], shared)),
              delta.generators(face_difference(cones[j], shared)), n)) {
        return fail("intersection", {i, j},
                    "cones meet outside their common face " +
                        to_string(shared));
      }
    }

  // Convex support: every boundary facet keeps all rays on its inner side.
  std::map<Face, std::size_t> facet_owners;
  for (const auto& m : cones)
    for (std::size_t k = 0; k < m.size(); ++k) {
      Face facet = m;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
      ++facet_owners[facet];
    }
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto& m = cones[c];
    IntMatrix g = IntMatrix::from_columns(delta.generators(m), n);
    for (std::size_t k = 0; k < m.size(); ++k) {
      Face facet = m;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
      if (facet_owners[facet] != 1) continue;
      for (std::size_t r = 0; r < delta.rays.size(); ++r) {
        auto coeffs = solve_exact(g, to_rational(delta.rays[r]));
        if (!coeffs) return fail("purity", {c, r}, "ray outside cone span");
        if ((*coeffs)[k] < 0) {
          return fail("convexity", {c, m[k], r},
                      "ray lies beyond a boundary facet; support not convex");
        }
      }
    }
  }
  return {};
}

std::optional<std::size_t> Polytope::origin_index() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::all_of(points[i].begin(), points[i].end(),
                    [](const Integer& x) { return x == 0; }))
      return i;
  }
  return std::nullopt;
}

namespace {

std::vector<RatVector> vertex_rows(const Polytope& p) {
  // rows[k][v] = k-th coordinate of vertex v
  std::vector<RatVector> rows(p.dim, RatVector(p.vertex_indices.size()));
  for (std::size_t v = 0; v < p.vertex_indices.size(); ++v) {
    const auto& pt = p.points.at(p.vertex_indices[v]);
    if (pt.size() != p.dim) {
      throw Error(ErrorCode::InvalidInput, "vertex dimension mismatch", v);
    }
    for (std::size_t k = 0; k < p.dim; ++k) rows[k][v] = pt[k];
  }
  return rows;
}

std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t n) {
  return n - kernel_basis(rows, n).size();
}

}  // namespace

bool origin_in_interior(const Polytope& p) {
  const std::size_t n = p.vertex_indices.size();
  auto rows = vertex_rows(p);
  if (rational_rank(rows, n) != p.dim) return false;
  // sum (1 + mu_v) v = 0 with mu >= 0.
  RatVector rhs(p.dim);
  for (std::size_t k = 0; k < p.dim; ++k)
    for (std::size_t v = 0; v < n; ++v) rhs[k] -= rows[k][v];
  return nonnegative_solution_exists(rows, rhs);
}

FreeSumStructure free_sum_structure(const Polytope& p) {
  const std::size_t n = p.vertex_indices.size();
  auto rows = vertex_rows(p);
  for (std::size_t v = 0; v < n; ++v) {
    bool zero = true;
    for (std::size_t k = 0; k < p.dim; ++k) zero = zero && rows[k][v] == 0;
    if (zero) {
      throw Error(ErrorCode::OriginNotInterior, "the origin is a vertex",
                  p.vertex_indices[v]);
    }
  }
  auto kernel = kernel_basis(rows, n);
  if (n - kernel.size() != p.dim) {
    throw Error(ErrorCode::OriginNotInterior,
                "vertices do not span the ambient space");
  }
  FreeSumStructure s;
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    Face support;
    bool positive = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (kernel[k][v] == 0) continue;
      if (owner[v] != -1) {
        throw Error(ErrorCode::UnsupportedShape,
                    "polytope is not a free sum of simplices");
      }
      owner[v] = static_cast<int>(k);
      positive = positive && kernel[k][v] > 0;
      support.push_back(p.vertex_indices[v]);
    }
    if (!positive) {
      throw Error(ErrorCode::OriginNotInterior,
                  "the origin is not interior to a simplex summand");
    }
    s.summands.push_back(make_face(std::move(support)));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] == -1) {
      throw Error(ErrorCode::OriginNotInterior,
                  "the origin lies on the boundary", p.vertex_indices[v]);
    }
  }
  std::sort(s.summands.begin(), s.summands.end());
  return s;
}

Triangulation boundary_join(const Polytope& p) {
  FreeSumStructure s = free_sum_structure(p);
  auto origin = p.origin_index();
  if (!origin) {
    throw Error(ErrorCode::InvalidInput,
                "the origin must be listed among the polytope's points");
  }
  Face all;
  for (const auto& summand : s.summands) all = face_union(all, summand);

  Triangulation t;
  // One omitted vertex per summand selects a boundary facet.
  std::vector<std::size_t> choice(s.summands.size(), 0);
  while (true) {
    Face omitted;
    for (std::size_t k = 0; k < choice.size(); ++k)
      omitted.push_back(s.summands[k][choice[k]]);
    Face facet = face_difference(all, make_face(omitted));
    facet.push_back(*origin);
    t.maximal_faces.push_back(make_face(std::move(facet)));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == s.summands[k].size()) {
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) break;
  }
  std::sort(t.maximal_faces.begin(), t.maximal_faces.end());
  t.special_face = Face{*origin};
  t.prevalidated = true;
  return t;
}

Face LiftedTriangulation::to_rays(const Face& point_face) const {
  Face out;
  for (auto p : point_face) {
    auto it = std::lower_bound(ray_to_point.begin(), ray_to_point.end(), p);
    if (it == ray_to_point.end() || *it != p) {
      throw Error(ErrorCode::FaceNotInComplex,
                  "point " + std::to_string(p) + " is not used by the "
                  "triangulation", p);
    }
    out.push_back(static_cast<std::size_t>(it - ray_to_point.begin()));
  }
  return out;
}

Face LiftedTriangulation::to_points(const Face& ray_face) const {
  Face out;
  for (auto r : ray_face) out.push_back(ray_to_point.at(r));
  return out;
}

LiftedTriangulation lift_triangulation(const Polytope& p,
                                       const Triangulation& t) {
  if (t.maximal_faces.empty()) {
    throw Error(ErrorCode::InvalidTriangulation, "no maximal faces");
  }
  Face used;
  for (std::size_t i = 0; i < t.maximal_faces.size(); ++i) {
    const Face& f = t.maximal_faces[i];
    if (make_face(f) != f || f.size() != p.dim + 1) {
      throw Error(ErrorCode::InvalidTriangulation,
                  "maximal face " + to_string(f) + " does not have dim+1 "
                  "distinct points", i);
    }
    if (f.back() >= p.points.size()) {
      throw Error(ErrorCode::InvalidTriangulation, "point index out of range",
                  i);
    }
    used = face_union(used, f);
  }
  LiftedTriangulation lt;
  lt.ray_to_point = used;
  std::vector<LatticePoint> rays;
  for (auto idx : used) {
    LatticePoint r = p.points[idx];
    if (r.size() != p.dim) {
      throw Error(ErrorCode::InvalidInput, "point dimension mismatch", idx);
    }
    r.emplace_back(1);
    rays.push_back(std::move(r));
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& f : t.maximal_faces) cones.push_back(lt.to_rays(f));
  lt.subdivision = make_subdivision(std::move(rays), std::move(cones));
  lt.subdivision.prevalidated = t.prevalidated;
  lt.grading.functional = IntVector(p.dim + 1);
  lt.grading.functional.back() = 1;
  return lt;
}

ValidationReport validate_triangulation(const Polytope& p,
                                        const Triangulation& t) {
  LiftedTriangulation lt;
  try {
    lt = lift_triangulation(p, t);
  } catch (const Error& e) {
    return fail("structure", {}, e.what());
  }
  if (t.special_face) {
    for (std::size_t i = 0; i < t.maximal_faces.size(); ++i)
      if (!is_subface(*t.special_face, t.maximal_faces[i]))
        return fail("special", {i}, "special face missing from a maximal face");
  }
  for (auto v : p.vertex_indices) {
    if (!std::binary_search(lt.ray_to_point.begin(), lt.ray_to_point.end(), v))
      return fail("coverage", {v}, "vertex not used by the triangulation");
  }
  // Every used point lies in conv(vertices).
  const std::size_t nv = p.vertex_indices.size();
  for (auto idx : lt.ray_to_point) {
    std::vector<RatVector> rows(p.dim + 1, RatVector(nv));
    RatVector rhs(p.dim + 1);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& w = p.points.at(p.vertex_indices[v]);
      for (std::size_t k = 0; k < p.dim; ++k) rows[k][v] = w[k];
      rows[p.dim][v] = 1;
    }
    for (std::size_t k = 0; k < p.dim; ++k) rhs[k] = p.points[idx][k];
    rhs[p.dim] = 1;
    if (!nonnegative_solution_exists(rows, rhs))
      return fail("coverage", {idx}, "point lies outside the polytope");
  }
  return validate_subdivision(lt.subdivision);
}

}  // namespace ehrtri
