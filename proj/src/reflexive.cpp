#include "ehrtri/reflexive.hpp"

#include <algorithm>

namespace ehrtri {

namespace {

bool is_origin(const LatticePoint& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const Integer& x) { return x == 0; });
}

void check_spec(const WeightedSimplexSpec& spec) {
  if (spec.weights.empty()) {
    throw Error(ErrorCode::InvalidInput, "at least one weight is required");
  }
  if (spec.b <= 0) {
    throw Error(ErrorCode::InvalidInput, "b must be positive");
  }
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    if (spec.weights[i] <= 0) {
      throw Error(ErrorCode::InvalidInput, "weights must be positive", i);
    }
  }
}

}  // namespace

LatticePolytope build_weighted_simplex(const WeightedSimplexSpec& spec) {
  check_spec(spec);
  const std::size_t d = spec.weights.size();
  IntMatrix gens(d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    gens(i, i) = spec.b;
    gens(i, d) = spec.weights[i];
  }
  LatticePolytope out;
  out.lattice = CoordinateMap(spec.b, gens);
  Polytope& p = out.polytope;
  p.dim = d;
  p.points.push_back(LatticePoint(d));
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = spec.b;
    p.points.push_back(out.lattice.embed_scaled(e));
  }
  IntVector f(d);
  for (std::size_t i = 0; i < d; ++i) f[i] = -spec.weights[i];
  p.points.push_back(out.lattice.embed_scaled(f));
  for (std::size_t i = 1; i <= d + 1; ++i) p.vertex_indices.push_back(i);
  return out;
}

LatticePolytope weighted_simplex(const WeightedSimplexSpec& spec) {
  check_spec(spec);
  Integer sum = 0;
  for (const auto& a : spec.weights) sum += a;
  if (sum % spec.b != 0) {
    throw Error(ErrorCode::NotReflexive,
                "weight sum " + sum.get_str() + " is not divisible by b = " +
                    spec.b.get_str());
  }
  Integer c = sum / spec.b;
  Integer target = spec.b * (c + 1);
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    if (target % spec.weights[i] != 0) {
      throw Error(ErrorCode::NotReflexive,
                  "weight a_" + std::to_string(i) + " = " +
                      spec.weights[i].get_str() + " does not divide b(c+1) = " +
                      target.get_str(),
                  i);
    }
  }
  return build_weighted_simplex(spec);
}

bool is_reflexive(const Polytope& p) {
  if (!origin_in_interior(p)) return false;
  FreeSumStructure s = free_sum_structure(p);
  Face all;
  for (const auto& summand : s.summands) all = face_union(all, summand);

  std::vector<std::size_t> choice(s.summands.size(), 0);
  while (true) {
    Face omitted;
    for (std::size_t k = 0; k < choice.size(); ++k)
      omitted.push_back(s.summands[k][choice[k]]);
    Face facet = face_difference(all, make_face(omitted));
    // <u, v> = -1 on the facet; u is in dual lattice coordinates.
    IntMatrix a(facet.size(), p.dim);
    for (std::size_t r = 0; r < facet.size(); ++r)
      for (std::size_t c = 0; c < p.dim; ++c) a(r, c) = p.points[facet[r]][c];
    auto u = solve_exact(a, RatVector(facet.size(), Rational(-1)));
    if (!u) {
      throw Error(ErrorCode::UnsupportedShape, "facet is degenerate");
    }
    for (const auto& x : *u)
      if (x.get_den() != 1) return false;

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == s.summands[k].size()) {
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) break;
  }
  return true;
}

LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q) {
  for (const auto* x : {&p, &q}) {
    if (!origin_in_interior(x->polytope)) {
      throw Error(ErrorCode::OriginNotInterior,
                  "free sum summands need the origin in their interior");
    }
  }
  const std::size_t dp = p.polytope.dim;
  const std::size_t dq = q.polytope.dim;
  Integer dd;
  mpz_lcm(dd.get_mpz_t(), p.lattice.denominator().get_mpz_t(),
          q.lattice.denominator().get_mpz_t());
  const Integer sp = dd / p.lattice.denominator();
  const Integer sq = dd / q.lattice.denominator();

  IntMatrix gens(dp + dq, dp + dq);
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t c = 0; c < dp; ++c)
      gens(r, c) = p.lattice.basis()(r, c) * sp;
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t c = 0; c < dq; ++c)
      gens(dp + r, dp + c) = q.lattice.basis()(r, c) * sq;

  LatticePolytope out;
  out.lattice = CoordinateMap(dd, gens);
  Polytope& s = out.polytope;
  s.dim = dp + dq;
  s.points.push_back(LatticePoint(dp + dq));

  auto add = [&](const LatticePolytope& x, std::size_t offset,
                 const Integer& scale) {
    std::vector<std::size_t> index(x.polytope.points.size(), 0);
    for (std::size_t i = 0; i < x.polytope.points.size(); ++i) {
      const auto& pt = x.polytope.points[i];
      if (is_origin(pt)) continue;
      IntVector scaled(dp + dq);
      IntVector amb = x.lattice.to_scaled_ambient(pt);
      for (std::size_t k = 0; k < amb.size(); ++k)
        scaled[offset + k] = amb[k] * scale;
      index[i] = s.points.size();
      s.points.push_back(out.lattice.embed_scaled(scaled));
    }
    for (auto v : x.polytope.vertex_indices) s.vertex_indices.push_back(index[v]);
  };
  add(p, 0, sp);
  add(q, dp, sq);
  return out;
}

HStarVector braun_hstar(const HStarVector& a, const HStarVector& b) {
  UniPoly prod = a.polynomial() * b.polynomial();
  std::vector<Integer> c(a.dim + b.dim + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = prod.coeff(i);
  HStarVector h;
  h.coeffs = std::move(c);
  h.dim = a.dim + b.dim;
  return h;
}

WeightedSimplexSpec family_spec(long b, long k, long r) {
  if (b < 1 || k < 1 || r < 0) {
    throw Error(ErrorCode::InvalidInput, "family needs b, k >= 1 and r >= 0");
  }
  WeightedSimplexSpec spec;
  spec.b = b;
  spec.weights.assign(static_cast<std::size_t>(b * k), Integer(1));
  spec.weights.insert(spec.weights.end(), static_cast<std::size_t>(r),
                      Integer(b));
  return spec;
}

HStarVector family_hstar(long b, long k, long r) {
  if (b < 1 || k < 1 || r < 0) {
    throw Error(ErrorCode::InvalidInput, "family needs b, k >= 1 and r >= 0");
  }
  const std::size_t d = static_cast<std::size_t>(b * k + r);
  std::vector<Integer> c(d + 1, Integer(1));
  for (long j = 0; j <= r; ++j)
    for (long l = 1; l < b; ++l) c[static_cast<std::size_t>(j + l * k)] += 1;
  return make_hstar(std::move(c));
}

Integer macaulay_pseudopower(const Integer& value, std::size_t i) {
  if (i == 0) {
    throw Error(ErrorCode::InvalidInput, "pseudopower index must be positive");
  }
  Integer rest = value;
  Integer out = 0;
  for (std::size_t j = i; j >= 1 && rest > 0; --j) {
    // Largest a with C(a, j) <= rest.
    unsigned long a = j;
    while (binomial(static_cast<long>(a + 1), j) <= rest) ++a;
    rest -= binomial(static_cast<long>(a), j);
    out += binomial(static_cast<long>(a + 1), j + 1);
  }
  return out;
}

bool is_macaulay(const std::vector<Integer>& g) {
  if (g.empty()) return true;
  if (g[0] != 1) return false;
  for (const auto& x : g)
    if (x < 0) return false;
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    if (g[i + 1] > macaulay_pseudopower(g[i], i)) return false;
  return true;
}

AnalysisReport analyze_hstar(const HStarVector& h) {
  AnalysisReport r;
  const auto& c = h.coeffs;
  const std::size_t d = h.dim;
  const std::size_t half = d / 2;

  r.unimodal = true;
  for (std::size_t i = 0; i < half && i + 1 < c.size(); ++i)
    if (c[i] > c[i + 1]) r.unimodal = false;

  r.palindromic = c.size() == d + 1;
  for (std::size_t i = 0; r.palindromic && i <= d; ++i)
    if (c[i] != c[d - i]) r.palindromic = false;

  r.hibi_ok = c.size() < 2 || c[0] <= c[1];
  for (std::size_t i = 2; r.hibi_ok && i < d && i < c.size(); ++i)
    if (c[1] > c[i]) r.hibi_ok = false;

  for (std::size_t i = 0; i <= half && i < c.size(); ++i)
    r.gstar.push_back(i == 0 ? c[0] : c[i] - c[i - 1]);
  r.macaulay = is_macaulay(r.gstar);

  // One valley per flat-bottomed local minimum.
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (!(c[j - 1] > c[j])) continue;
    std::size_t end = j;
    while (end + 1 < c.size() && c[end + 1] == c[j]) ++end;
    if (end + 1 >= c.size() || c[end + 1] <= c[j]) continue;
    std::size_t peak = 0;
    for (std::size_t i = 1; i < j; ++i)
      if (c[i] > c[peak]) peak = i;
    Integer right = c[end + 1];
    for (std::size_t i = end + 1; i < c.size(); ++i)
      if (c[i] > right) right = c[i];
    Integer depth = std::min(Integer(c[peak] - c[j]), Integer(right - c[j]));
    r.valleys.push_back({peak, j, depth});
  }
  return r;
}

std::size_t valley_chain_length(const HStarVector& h, const Integer& n) {
  const auto& c = h.coeffs;
  const std::size_t len = c.size();
  // best[i]: most valleys in a chain whose last peak is i.
  std::vector<std::size_t> best(len, 0);
  std::size_t answer = 0;
  for (std::size_t i2 = 0; i2 < len; ++i2) {
    for (std::size_t j = 0; j < i2; ++j) {
      if (c[i2] - c[j] < n) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (c[i] - c[j] < n) continue;
        best[i2] = std::max(best[i2], best[i] + 1);
      }
    }
    answer = std::max(answer, best[i2]);
  }
  return answer;
}

ValleyConstruction valley_construction(const LatticePolytope& q,
                                       const HStarVector& q_hstar, long b) {
  ValleyConstruction v;
  v.b = b;
  v.k = static_cast<long>(q.polytope.dim) + 2;
  v.q_prime = weighted_simplex(family_spec(b, v.k, 0));
  v.q_prime_hstar = family_hstar(b, v.k, 0);
  v.sum = free_sum(q, v.q_prime);
  v.hstar = braun_hstar(q_hstar, v.q_prime_hstar);
  return v;
}

std::optional<std::size_t> valley_pattern_failure(const HStarVector& product,
                                                  const HStarVector& q_hstar,
                                                  long k, long m) {
  Integer vol = 0;
  for (const auto& x : q_hstar.coeffs) vol += x;
  auto at = [&](std::size_t idx) {
    return idx < product.coeffs.size() ? product.coeffs[idx] : Integer(0);
  };
  for (long l = 1; l <= m + 1; ++l) {
    for (std::size_t i = 0; i < q_hstar.coeffs.size(); ++i) {
      std::size_t idx = static_cast<std::size_t>(k * l) + i;
      if (at(idx) != vol + q_hstar.coeffs[i]) return idx;
    }
    if (l <= m) {
      std::size_t idx = static_cast<std::size_t>(k * (l + 1) - 1);
      if (at(idx) != vol) return idx;
    }
  }
  return std::nullopt;
}

}  // namespace ehrtri
