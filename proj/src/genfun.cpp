#include "ehrtri/genfun.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ehrtri/boxpoints.hpp"

namespace ehrtri {

namespace {

void check_budget(const LaurentPoly& p, std::size_t budget) {
  if (p.size() > budget) {
    throw Error(ErrorCode::TermBudgetExceeded,
                "expansion exceeds " + std::to_string(budget) + " terms");
  }
}

// p * (1 - x^v)
LaurentPoly times_one_minus(const LaurentPoly& p, const IntVector& v) {
  LaurentPoly out = p;
  IntVector e;
  for (const auto& [exp, c] : p.terms()) {
    e = exp;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += v[i];
    out.add_term(e, -c);
  }
  return out;
}

LaurentPoly product_one_minus(std::span<const LatticePoint> rays,
                              const Face& indices, LaurentPoly start,
                              std::size_t budget) {
  for (std::size_t j : indices) {
    start = times_one_minus(start, rays[j]);
    check_budget(start, budget);
  }
  return start;
}

std::size_t degree_of(const IntVector& e, const Grading& u) {
  Integer h = u(e);
  if (h < 0) {
    throw Error(ErrorCode::NegativeDegree, "term has negative degree");
  }
  return h.get_ui();
}

}  // namespace

LaurentPoly h_multivariate(std::span<const LatticePoint> rays,
                           std::span<const Face> complex, const Face& universe,
                           std::size_t term_budget) {
  const std::size_t n = rays.empty() ? 0 : rays.front().size();
  for (std::size_t v : universe) {
    if (v >= rays.size()) {
      throw Error(ErrorCode::RayOutsideUniverse,
                  "ray index out of range", v);
    }
  }
  LaurentPoly total(n);
  for (const auto& tau : complex) {
    if (!is_subface(tau, universe)) {
      Face outside = face_difference(tau, universe);
      throw Error(ErrorCode::RayOutsideUniverse,
                  "cone " + to_string(tau) + " uses a ray outside the universe",
                  outside.front());
    }
    IntVector e(n);
    for (std::size_t i : tau)
      for (std::size_t k = 0; k < n; ++k) e[k] += rays[i][k];
    total += product_one_minus(rays, face_difference(universe, tau),
                               LaurentPoly::monomial(std::move(e)),
                               term_budget);
    check_budget(total, term_budget);
  }
  return total;
}

LaurentPoly h_delta(const Subdivision& delta, std::size_t term_budget) {
  Face all(delta.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return h_multivariate(delta.rays, enumerate_faces(delta), all, term_budget);
}

LaurentPoly h_link(const Subdivision& delta, const Face& tau,
                   std::size_t term_budget) {
  Complex lk = link(delta, tau);
  return h_multivariate(delta.rays, lk.faces, lk.vertices, term_budget);
}

LaurentPoly rhs_generating_identity(const Subdivision& delta,
                                    const Face& lambda,
                                    std::size_t term_budget) {
  for (const auto& m : delta.maximal_cones) {
    if (!is_subface(lambda, m)) {
      throw Error(ErrorCode::NotSpecial,
                  to_string(lambda) + " is not contained in every maximal cone");
    }
  }
  const std::size_t n = delta.rank();
  LaurentPoly total = h_link(delta, lambda, term_budget);
  Face all(delta.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  for (const auto& [tau, points] : relative_boxes(delta, lambda)) {
    LaurentPoly box(n);
    for (const auto& bp : points) box.add_term(bp.point, 1);
    LaurentPoly term = box * h_link(delta, tau, term_budget);
    term = product_one_minus(delta.rays,
                             face_difference(all, star_rays(delta, tau)),
                             std::move(term), term_budget);
    total += term;
    check_budget(total, term_budget);
  }
  return total;
}

LaurentPoly truncated_series(const Subdivision& delta, const Grading& u,
                             std::size_t max_degree) {
  const std::size_t n = delta.rank();
  std::vector<std::size_t> ray_degree(delta.rays.size());
  for (std::size_t i = 0; i < delta.rays.size(); ++i) {
    Integer h = u(delta.rays[i]);
    if (h <= 0) {
      throw Error(ErrorCode::NonPositiveGrading,
                  "grading is not positive on ray " + std::to_string(i), i);
    }
    ray_degree[i] = h.get_ui();
  }

  std::set<LatticePoint> points;
  for (const auto& m : delta.maximal_cones) {
    auto gens = delta.generators(m);
    for (const auto& cell : cell_points(gens)) {
      LatticePoint base = cell.point.empty() ? LatticePoint(n) : cell.point;
      Integer h0 = u(base);
      if (h0 > static_cast<unsigned long>(max_degree)) continue;
      // Depth-first over nonnegative integer multiples of the generators.
      std::vector<std::pair<LatticePoint, std::size_t>> stack;
      stack.emplace_back(base, 0);
      std::vector<std::size_t> height{h0.get_ui()};
      while (!stack.empty()) {
        auto [p, next] = std::move(stack.back());
        stack.pop_back();
        std::size_t hp = height.back();
        height.pop_back();
        points.insert(p);
        for (std::size_t i = next; i < m.size(); ++i) {
          std::size_t hq = hp + ray_degree[m[i]];
          if (hq > max_degree) continue;
          LatticePoint q = p;
          for (std::size_t k = 0; k < n; ++k) q[k] += gens[i][k];
          stack.emplace_back(std::move(q), i);
          height.push_back(hq);
        }
      }
    }
  }
  LaurentPoly series(n);
  for (const auto& p : points) series.add_term(p, 1);
  return series;
}

LaurentPoly truncate(const LaurentPoly& p, const Grading& u,
                     std::size_t max_degree) {
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Integer h = u(e);
    if (h <= static_cast<unsigned long>(max_degree)) out.add_term(e, c);
  }
  return out;
}

LaurentPoly lhs_truncated(const Subdivision& delta, const LaurentPoly& series,
                          const Grading& u, std::size_t max_degree) {
  LaurentPoly acc = truncate(series, u, max_degree);
  for (const auto& v : delta.rays)
    acc = truncate(times_one_minus(acc, v), u, max_degree);
  return acc;
}

VerificationReport compare_truncated(const LaurentPoly& lhs,
                                     const LaurentPoly& rhs, const Grading& u,
                                     std::size_t max_degree) {
  LaurentPoly a = truncate(lhs, u, max_degree);
  LaurentPoly b = truncate(rhs, u, max_degree);
  VerificationReport report;
  report.max_degree = max_degree;
  report.lhs_terms = a.size();
  report.rhs_terms = b.size();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    const IntVector* e;
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->first < ib->first)) {
      e = &ia->first;
    } else {
      e = &ib->first;
    }
    bool in_a = ia != a.terms().end() && ia->first == *e;
    bool in_b = ib != b.terms().end() && ib->first == *e;
    Integer ca = in_a ? ia->second : Integer(0);
    Integer cb = in_b ? ib->second : Integer(0);
    if (ca != cb) {
      report.equal = false;
      report.witness = *e;
      report.lhs_coeff = ca;
      report.rhs_coeff = cb;
      return report;
    }
    if (in_a) ++ia;
    if (in_b) ++ib;
  }
  return report;
}

VerificationReport verify_identity(const Subdivision& delta,
                                   const Face& lambda, const Grading& u,
                                   std::size_t max_degree) {
  LaurentPoly series = truncated_series(delta, u, max_degree);
  LaurentPoly lhs = lhs_truncated(delta, series, u, max_degree);
  LaurentPoly rhs = rhs_generating_identity(delta, lambda);
  return compare_truncated(lhs, rhs, u, max_degree);
}

UniPoly specialize(const LaurentPoly& p, const Grading& u) {
  std::map<std::size_t, Integer> by_degree;
  for (const auto& [e, c] : p.terms()) by_degree[degree_of(e, u)] += c;
  if (by_degree.empty()) return {};
  std::vector<Integer> coeffs(by_degree.rbegin()->first + 1);
  for (const auto& [d, c] : by_degree) coeffs[d] = c;
  return UniPoly(std::move(coeffs));
}

}  // namespace ehrtri
