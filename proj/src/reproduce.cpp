#include "ehrtri/reproduce.hpp"

#include "ehrtri/boxpoints.hpp"
#include "ehrtri/genfun.hpp"

namespace ehrtri {

using nlohmann::json;

PolytopeFile square_with_diagonal() {
  PolytopeFile f;
  f.polytope.lattice = CoordinateMap::standard(2);
  Polytope& p = f.polytope.polytope;
  p.dim = 2;
  p.points = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
  p.vertex_indices = {0, 1, 2, 3};
  f.triangulation = Triangulation{{{0, 1, 2}, {1, 2, 3}}, Face{1, 2}};
  return f;
}

namespace {

WeightedSimplexSpec spec_of(std::initializer_list<long> weights, long b) {
  WeightedSimplexSpec s;
  for (long w : weights) s.weights.emplace_back(w);
  s.b = b;
  return s;
}

HStarVector computed_hstar(const LatticePolytope& lp) {
  return hstar(lp.polytope, boundary_join(lp.polytope));
}

json laurent_json(const LaurentPoly& p) { return to_string(p); }

Check check(std::string name, json expected, json actual) {
  Check c;
  c.name = std::move(name);
  c.pass = expected == actual;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  return c;
}

void add(Reproduction& r, Check c) {
  if (!c.pass && !c.informational) r.pass = false;
  r.checks.push_back(std::move(c));
}

UniPoly relative_box_polynomial(const LatticePolytope& lp,
                                const Triangulation& t, const Face& face) {
  LiftedTriangulation lt = lift_triangulation(lp.polytope, t);
  return box_polynomial(lt.subdivision, lt.to_rays(face), lt.to_rays({0}),
                        lt.grading);
}

Reproduction square_cone() {
  Reproduction r;
  r.name = "ex1.4";
  PolytopeFile f = square_with_diagonal();
  LiftedTriangulation lt = lift_triangulation(f.polytope.polytope,
                                              *f.triangulation);
  const Subdivision& delta = lt.subdivision;
  const Face lambda{1, 2};

  LaurentPoly expected = LaurentPoly::one(3);
  expected.add_term({0, 0, 1}, 1);
  IntVector v14(3);
  for (std::size_t k = 0; k < 3; ++k) v14[k] = delta.rays[0][k] + delta.rays[3][k];
  expected = expected * LaurentPoly::one_minus(v14);

  add(r, check("subdivision is valid", true, validate_subdivision(delta).ok));
  add(r, check("rhs with lambda = {1,2}", laurent_json(expected),
               laurent_json(rhs_generating_identity(delta, lambda))));
  add(r, check("rhs with lambda = 0", laurent_json(expected),
               laurent_json(rhs_generating_identity(delta, {}))));
  json box = json::array();
  for (const auto& bp : box_points(delta, lambda, lambda))
    box.push_back(json{bp.point[0].get_si(), bp.point[1].get_si(),
                       bp.point[2].get_si()});
  add(r, check("Box(lambda, lambda)", json::array({json{0, 0, 1}}), box));
  add(r, check("H of lk lambda", laurent_json(LaurentPoly::one_minus(v14)),
               laurent_json(h_link(delta, lambda))));
  for (const Face& l : {lambda, Face{}}) {
    VerificationReport v = verify_identity(delta, l, lt.grading, 8);
    add(r, check("truncated identity to degree 8 with lambda = " + to_string(l),
                 true, v.equal));
  }
  return r;
}

Reproduction simplex_example(const std::string& name,
                             const WeightedSimplexSpec& spec,
                             const HStarVector& expected,
                             const std::vector<std::pair<Face, UniPoly>>& boxes) {
  Reproduction r;
  r.name = name;
  LatticePolytope lp = weighted_simplex(spec);
  Triangulation t = boundary_join(lp.polytope);
  add(r, check("reflexive", true, is_reflexive(lp.polytope)));
  HStarVector h = hstar(lp.polytope, t);
  r.summary = "h* = " + to_string(h);
  add(r, check("h* (both formulas)", to_json(expected), to_json(h)));
  for (const auto& [face, poly] : boxes) {
    add(r, check("B_{F,0} for F = " + to_string(face), to_json(poly),
                 to_json(relative_box_polynomial(lp, t, face))));
  }
  add(r, check("nonunimodal", false, analyze_hstar(expected).unimodal));
  return r;
}

Reproduction nonunimodal_family() {
  Reproduction r;
  r.name = "thm1.3";
  const long cases[][3] = {{3, 2, 0}, {3, 3, 0}, {3, 3, 1}, {3, 4, 0},
                           {3, 4, 1}, {3, 4, 2}, {4, 2, 0}};
  for (const auto& c : cases) {
    std::string tag = "(b,k,r) = (" + std::to_string(c[0]) + "," +
                      std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
    HStarVector closed = family_hstar(c[0], c[1], c[2]);
    HStarVector computed = computed_hstar(weighted_simplex(family_spec(c[0], c[1], c[2])));
    add(r, check(tag + " h*", to_json(closed), to_json(computed)));
    add(r, check(tag + " nonunimodal", false, analyze_hstar(computed).unimodal));
  }
  for (const auto& spec : {seven_dim_spec(), eleven_dim_spec()}) {
    HStarVector h = computed_hstar(weighted_simplex(spec));
    add(r, check("d = " + std::to_string(h.dim) + " weighted simplex nonunimodal",
                 false, analyze_hstar(h).unimodal));
  }
  return r;
}

Reproduction non_macaulay_family() {
  Reproduction r;
  r.name = "thm1.4";
  const long cases[][3] = {{2, 2, 0}, {2, 2, 1}, {2, 3, 0}};
  for (const auto& c : cases) {
    std::string tag = "(b,k,r) = (" + std::to_string(c[0]) + "," +
                      std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
    HStarVector closed = family_hstar(c[0], c[1], c[2]);
    HStarVector computed = computed_hstar(weighted_simplex(family_spec(c[0], c[1], c[2])));
    AnalysisReport a = analyze_hstar(computed);
    add(r, check(tag + " h*", to_json(closed), to_json(computed)));
    add(r, check(tag + " unimodal", true, a.unimodal));
    add(r, check(tag + " Macaulay", false, a.macaulay));
  }
  AnalysisReport a = analyze_hstar(family_hstar(2, 2, 0));
  json g = json::array();
  for (const auto& x : a.gstar) g.push_back(integer_to_json(x));
  add(r, check("g* for (2,2,0)", json::array({1, 0, 1}), g));
  return r;
}

Reproduction deep_valleys() {
  Reproduction r;
  r.name = "thm1.5";
  const long m = 2;
  const Integer n = 2;
  LatticePolytope q = weighted_simplex(spec_of({1, 1}, 2));
  HStarVector hq = computed_hstar(q);
  add(r, check("h*(Q)", json::array({1, 2, 1}), to_json(hq)));

  for (long b : {m + 1, m + 2}) {
    const bool literal = b == m + 1;
    ValleyConstruction v = valley_construction(q, hq, b);
    HStarVector direct = computed_hstar(v.sum);
    std::string tag = "b = " + std::to_string(b) + ": ";
    add(r, check(tag + "free sum h* equals the product", to_json(v.hstar),
                 to_json(direct)));
    auto failure = valley_pattern_failure(direct, hq, v.k, m);
    Check pattern = check(tag + "peak/trough pattern for l <= m+1", json(nullptr),
                          failure ? json(*failure) : json(nullptr));
    Check chain = check(tag + "interleaved valleys of depth >= n", true,
                        valley_chain_length(direct, n) >= static_cast<std::size_t>(m));
    pattern.informational = chain.informational = literal;
    add(r, pattern);
    add(r, chain);
  }
  r.notes.push_back(
      "with b = m+1 the second summand has only m raised coefficients, so the "
      "peak at l = m+1 is missing and only m-1 deep valleys appear; b = m+2 "
      "gives the full pattern");
  return r;
}

}  // namespace

WeightedSimplexSpec seven_dim_spec() { return spec_of({1, 2, 2, 4, 4, 4, 4}, 7); }

WeightedSimplexSpec eleven_dim_spec() {
  return spec_of({1, 1, 1, 2, 4, 4, 4, 4, 4, 4, 4}, 11);
}

PolytopeFile weighted_simplex_file(const WeightedSimplexSpec& spec) {
  PolytopeFile f;
  f.polytope = weighted_simplex(spec);
  f.triangulation = boundary_join(f.polytope.polytope);
  return f;
}

json to_json(const HStarVector& h) {
  json out = json::array();
  for (const auto& x : h.coeffs) out.push_back(integer_to_json(x));
  return out;
}

json to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& x : p.coeffs()) out.push_back(integer_to_json(x));
  return out;
}

json to_json(const Reproduction& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name},
           {"expected", c.expected},
           {"actual", c.actual},
           {"pass", c.pass}};
    if (c.informational) j["informational"] = true;
    checks.push_back(j);
  }
  json out{{"reproduce", r.name}, {"checks", checks}, {"pass", r.pass}};
  if (!r.summary.empty()) out["summary"] = r.summary;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

std::vector<std::string> reproduction_names() {
  return {"ex1.4", "ex4.3", "ex4.4", "thm1.3", "thm1.4", "thm1.5"};
}

Reproduction reproduce(const std::string& which) {
  if (which == "ex1.4") return square_cone();
  if (which == "ex4.3") {
    return simplex_example(
        which, seven_dim_spec(), make_hstar({1, 2, 6, 5, 5, 6, 2, 1}),
        {{{0, 1, 2, 3, 4, 5, 6, 7}, UniPoly{0, 0, 2, 1, 1, 2}},
         {{0, 1, 2, 3, 8}, UniPoly{0, 0, 2}},
         {{0, 1, 8}, UniPoly{0, 1}}});
  }
  if (which == "ex4.4") {
    return simplex_example(
        which, eleven_dim_spec(), make_hstar({1, 1, 4, 6, 4, 6, 6, 4, 6, 4, 1, 1}),
        {{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
          UniPoly{0, 0, 1, 2, 0, 2, 2, 0, 2, 1}},
         {{0, 1, 2, 3, 4, 12}, UniPoly{0, 0, 1, 1}},
         {{0, 1, 2, 3, 12}, UniPoly{0, 0, 1}}});
  }
  if (which == "thm1.3") return nonunimodal_family();
  if (which == "thm1.4") return non_macaulay_family();
  if (which == "thm1.5") return deep_valleys();
  throw Error(ErrorCode::InvalidInput, "unknown reproduction \"" + which + "\"");
}

}  // namespace ehrtri
