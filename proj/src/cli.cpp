#include "ehrtri/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "ehrtri/boxpoints.hpp"
#include "ehrtri/genfun.hpp"
#include "ehrtri/reproduce.hpp"

namespace ehrtri {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

json error_json(const std::string& code, const std::string& message,
                std::optional<std::size_t> index = std::nullopt) {
  json e{{"code", code}, {"message", message}};
  if (index) e["index"] = *index;
  return json{{"error", e}};
}

json rational_json(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Face to_face(const std::vector<std::size_t>& v) {
  Face f = make_face(v);
  if (f.size() != v.size()) {
    throw Error(ErrorCode::InvalidInput, "index list repeats an entry");
  }
  return f;
}

Triangulation checked_triangulation(const PolytopeFile& f) {
  Triangulation t = triangulation_or_boundary_join(f);
  if (t.prevalidated) return t;
  ValidationReport r = validate_triangulation(f.polytope.polytope, t);
  if (!r.ok) {
    json w = r.witnesses;
    throw Error(ErrorCode::InvalidTriangulation,
                "triangulation fails the " + r.condition + " check (" +
                    r.detail + "; witnesses " + w.dump() + ")");
  }
  return t;
}

struct Emitter {
  std::ostream& out;
  int emit(const json& j, int code = kOk) {
    out << j.dump(2) << '\n';
    return code;
  }
};

int cmd_hstar(Emitter& e, const std::string& path, const std::string& method,
              bool oracle, const std::vector<std::size_t>& special) {
  PolytopeFile f = read_polytope_file(path);
  Triangulation t = checked_triangulation(f);
  HStarOptions opt;
  opt.validate = false;
  if (method == "bm") opt.method = HStarMethod::BetkeMcMullen;
  else if (method == "special") opt.method = HStarMethod::SpecialSimplex;
  else opt.method = HStarMethod::Both;
  if (!special.empty()) opt.special = to_face(special);
  const Polytope& p = f.polytope.polytope;
  HStarVector h = hstar(p, t, opt);
  json j{{"dimension", p.dim}, {"hstar", to_json(h)}, {"method", method}};
  int code = kOk;
  if (oracle) {
    HStarVector o = hstar_oracle(p, t);
    j["oracle"] = to_json(o);
    j["oracle_match"] = o == h;
    if (o != h) code = kMismatch;
  }
  return e.emit(j, code);
}

int cmd_series(Emitter& e, const std::string& path, std::size_t terms) {
  PolytopeFile f = read_polytope_file(path);
  Triangulation t = checked_triangulation(f);
  const Polytope& p = f.polytope.polytope;
  HStarOptions opt;
  opt.validate = false;
  HStarVector h = hstar(p, t, opt);
  json counts = json::array(), predicted = json::array();
  bool match = true;
  for (std::size_t m = 0; m <= terms; ++m) {
    Integer c = count_lattice_points(p, t, m);
    Integer q = ehrhart_coefficient(h, m);
    counts.push_back(integer_to_json(c));
    predicted.push_back(integer_to_json(q));
    match = match && c == q;
  }
  return e.emit(json{{"counts", counts},
                     {"from_hstar", predicted},
                     {"match", match}},
                match ? kOk : kMismatch);
}

int cmd_identity(Emitter& e, const std::string& path, std::size_t degree,
                 const std::vector<std::size_t>& lambda_points) {
  PolytopeFile f = read_polytope_file(path);
  Triangulation t = checked_triangulation(f);
  LiftedTriangulation lt = lift_triangulation(f.polytope.polytope, t);
  Face lambda = lt.to_rays(to_face(lambda_points));
  VerificationReport r =
      verify_identity(lt.subdivision, lambda, lt.grading, degree);
  json j{{"equal", r.equal},
         {"lambda", to_face(lambda_points)},
         {"lhs_terms", r.lhs_terms},
         {"rhs_terms", r.rhs_terms},
         {"truncate", degree}};
  if (r.witness) {
    json w = json::array();
    for (const auto& x : *r.witness) w.push_back(integer_to_json(x));
    j["witness"] = json{{"exponent", w},
                        {"lhs", integer_to_json(r.lhs_coeff)},
                        {"rhs", integer_to_json(r.rhs_coeff)}};
  }
  return e.emit(j, r.equal ? kOk : kMismatch);
}

int cmd_boxpoints(Emitter& e, const std::string& path,
                  const std::vector<std::size_t>& face_points,
                  const std::vector<std::size_t>& rel_points) {
  PolytopeFile f = read_polytope_file(path);
  Triangulation t = checked_triangulation(f);
  LiftedTriangulation lt = lift_triangulation(f.polytope.polytope, t);
  Face face = to_face(face_points);
  Face rel = to_face(rel_points);
  if (!is_subface(rel, face)) {
    throw Error(ErrorCode::NotAFace,
                to_string(rel) + " is not a face of " + to_string(face));
  }
  auto points =
      box_points(lt.subdivision, lt.to_rays(face), lt.to_rays(rel));
  assign_heights(points, lt.grading);
  const std::size_t d = f.polytope.polytope.dim;
  json list = json::array();
  UniPoly b;
  for (const auto& bp : points) {
    LatticePoint base(bp.point.begin(), bp.point.begin() + static_cast<long>(d));
    json amb = json::array();
    for (const auto& x : f.polytope.lattice.to_scaled_ambient(base))
      amb.push_back(integer_to_json(x));
    json coeffs = json::array();
    for (const auto& a : bp.fractional_coords) coeffs.push_back(rational_json(a));
    list.push_back(json{{"point", amb},
                        {"height", integer_to_json(*bp.height)},
                        {"coefficients", coeffs}});
    b += UniPoly::monomial(bp.height->get_ui());
  }
  return e.emit(json{{"face", face},
                     {"relative", rel},
                     {"points", list},
                     {"polynomial", to_json(b)}});
}

WeightedSimplexSpec spec_from(const std::vector<long>& weights, long b) {
  WeightedSimplexSpec s;
  for (long w : weights) s.weights.emplace_back(w);
  s.b = b;
  return s;
}

json spec_json(const WeightedSimplexSpec& s) {
  json w = json::array();
  for (const auto& x : s.weights) w.push_back(integer_to_json(x));
  return json{{"weights", w}, {"b", integer_to_json(s.b)}};
}

int cmd_make_simplex(Emitter& e, const std::vector<long>& weights, long b,
                     const std::string& output) {
  WeightedSimplexSpec spec = spec_from(weights, b);
  PolytopeFile f = weighted_simplex_file(spec);
  if (output.empty()) return e.emit(to_json(f));
  write_polytope_file(f, output);
  json j = spec_json(spec);
  j["dimension"] = f.polytope.polytope.dim;
  j["file"] = output;
  return e.emit(j);
}

int cmd_family(Emitter& e, long b, long k, long r, const std::string& output) {
  WeightedSimplexSpec spec = family_spec(b, k, r);
  json j = spec_json(spec);
  j["k"] = k;
  j["r"] = r;
  j["dimension"] = spec.weights.size();
  j["hstar"] = to_json(family_hstar(b, k, r));
  if (!output.empty()) {
    write_polytope_file(weighted_simplex_file(spec), output);
    j["file"] = output;
  }
  return e.emit(j);
}

int cmd_free_sum(Emitter& e, const std::string& a, const std::string& b,
                 const std::string& output) {
  PolytopeFile fa = read_polytope_file(a);
  PolytopeFile fb = read_polytope_file(b);
  PolytopeFile sum;
  sum.polytope = free_sum(fa.polytope, fb.polytope);
  try {
    sum.triangulation = boundary_join(sum.polytope.polytope);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::UnsupportedShape) throw;
  }
  write_polytope_file(sum, output);
  return e.emit(json{{"dimension", sum.polytope.polytope.dim},
                     {"points", sum.polytope.polytope.points.size()},
                     {"triangulated", sum.triangulation.has_value()},
                     {"file", output}});
}

int cmd_analyze(Emitter& e, const std::vector<long>& coeffs) {
  std::vector<Integer> c;
  for (long x : coeffs) c.emplace_back(x);
  if (c.empty()) throw Error(ErrorCode::InvalidInput, "empty h*-vector");
  AnalysisReport a = analyze_hstar(make_hstar(std::move(c)));
  json g = json::array();
  for (const auto& x : a.gstar) g.push_back(integer_to_json(x));
  json valleys = json::array();
  for (const auto& v : a.valleys)
    valleys.push_back(json{{"i", v.peak}, {"j", v.bottom},
                           {"depth", integer_to_json(v.depth)}});
  return e.emit(json{{"unimodal", a.unimodal},
                     {"palindromic", a.palindromic},
                     {"hibi", a.hibi_ok},
                     {"gstar", g},
                     {"macaulay", a.macaulay},
                     {"valleys", valleys}});
}

int cmd_reproduce(Emitter& e, const std::string& which) {
  Reproduction r = reproduce(which);
  return e.emit(to_json(r), r.pass ? kOk : kMismatch);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact h*-vectors, box points and generating-function "
               "identities for triangulated lattice polytopes"};
  app.require_subcommand(1);

  std::string file, file2, output, method = "both", name;
  bool oracle = false;
  std::size_t terms = 0, truncate_degree = 0;
  std::vector<std::size_t> lambda, face, rel, special;
  std::vector<long> weights, coeffs;
  long b = 0, k = 0, r = 0;

  auto* hs = app.add_subcommand("hstar", "h*-vector of a polytope file");
  hs->add_option("FILE", file)->required();
  hs->add_option("--method", method)
      ->check(CLI::IsMember({"bm", "special", "both"}));
  hs->add_flag("--oracle", oracle, "compare with lattice-point counts");
  hs->add_option("--special", special, "special face (point indices)")
      ->delimiter(',');

  auto* se = app.add_subcommand("series", "lattice-point counts of dilates");
  se->add_option("FILE", file)->required();
  se->add_option("--terms", terms)->required();

  auto* id = app.add_subcommand("identity", "truncated generating-function identity");
  id->add_option("FILE", file)->required();
  id->add_option("--truncate", truncate_degree)->required();
  id->add_option("--lambda", lambda, "special face (point indices)")
      ->delimiter(',');

  auto* bx = app.add_subcommand("boxpoints", "lattice points of a box");
  bx->add_option("FILE", file)->required();
  bx->add_option("--face", face)->required()->delimiter(',');
  bx->add_option("--rel", rel)->delimiter(',');

  auto* ms = app.add_subcommand("make-simplex", "weighted reflexive simplex");
  ms->add_option("--weights", weights)->required()->delimiter(',');
  ms->add_option("--b", b)->required();
  ms->add_option("-o", output);

  auto* fa = app.add_subcommand("family", "simplex family with closed-form h*");
  fa->add_option("--b", b)->required();
  fa->add_option("--k", k)->required();
  fa->add_option("--r", r)->required();
  fa->add_option("-o", output);

  auto* fs = app.add_subcommand("free-sum", "free sum of two polytope files");
  fs->add_option("FILE1", file)->required();
  fs->add_option("FILE2", file2)->required();
  fs->add_option("-o", output)->required();

  auto* an = app.add_subcommand("analyze", "unimodality, g*, Macaulay, valleys");
  an->add_option("--hstar", coeffs)->required()->delimiter(',');

  auto* rp = app.add_subcommand("reproduce", "rerun a bundled computation");
  rp->add_option("NAME", name)
      ->required()
      ->check(CLI::IsMember(reproduction_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::ParseError& pe) {
    out << error_json("UsageError", pe.what()).dump(2) << '\n';
    err << pe.what() << '\n';
    return kBadInput;
  }

  Emitter e{out};
  try {
    if (*hs) return cmd_hstar(e, file, method, oracle, special);
    if (*se) return cmd_series(e, file, terms);
    if (*id) return cmd_identity(e, file, truncate_degree, lambda);
    if (*bx) return cmd_boxpoints(e, file, face, rel);
    if (*ms) return cmd_make_simplex(e, weights, b, output);
    if (*fa) return cmd_family(e, b, k, r, output);
    if (*fs) return cmd_free_sum(e, file, file2, output);
    if (*an) return cmd_analyze(e, coeffs);
    if (*rp) return cmd_reproduce(e, name);
  } catch (const Error& ex) {
    int code = ex.code() == ErrorCode::MethodMismatch ? kMismatch : kBadInput;
    out << error_json(std::string(to_string(ex.code())), ex.message(), ex.index())
               .dump(2)
        << '\n';
    err << ex.what() << '\n';
    return code;
  }
  return kBadInput;
}

}  // namespace ehrtri
